"""Short complexes of finitely generated abelian groups and their Ext against Z."""

from __future__ import annotations

from dataclasses import dataclass

from .abgroup import (
    AbMap,
    FgAbGroup,
    cokernel,
    compose,
    dual_map,
    ext1_to_Z,
    free_basis,
    hom_to_Z,
    is_exact_at,
    is_injective,
    is_surjective,
    is_zero_map,
)
from .intlin import IntMatrix, kernel_basis, solve_matrix


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class TwoTermComplex:
    """``[c0 --d--> c1>`` with ``c0`` in degree 0; ``c0`` must be torsion-free."""

    c0: FgAbGroup
    c1: FgAbGroup
    d: AbMap

    def __post_init__(self):
        if not self.c0.is_torsion_free():
            raise ComplexError(f"degree-0 term {self.c0} has torsion")
        if self.d.src != self.c0 or self.d.dst != self.c1:
            raise ComplexError("differential does not go from c0 to c1")

    @classmethod
    def from_map(cls, d: AbMap) -> TwoTermComplex:
        return cls(d.src, d.dst, d)


@dataclass(frozen=True)
class FreeReplacement:
    """``D = [Z^g + Z^m --[F | R]--> Z^n>``, quasi-isomorphic to the complex.

    ``F`` is the differential rewritten on a free basis of ``c0`` and ``R``
    the (injective) relation matrix of ``c1``. ``from_free`` expresses the
    free basis of ``c0`` in its original generators.
    """

    F: IntMatrix
    R: IntMatrix
    from_free: IntMatrix

    @property
    def differential(self) -> IntMatrix:
        return self.F.hstack(self.R)


def free_replacement(C: TwoTermComplex) -> FreeReplacement:
    _, from_free = free_basis(C.c0)
    return FreeReplacement(C.d.matrix @ from_free, C.c1.rels, from_free)


def ext0_to_Z(C: TwoTermComplex) -> FgAbGroup:
    """Degree-0 hyperext ``Ext^0(C, Z) = coker(d^T)`` for the free replacement."""
    d = free_replacement(C).differential
    return FgAbGroup(d.cols, d.T)


@dataclass(frozen=True)
class LesPieces:
    """Pieces of ``Hom(c1,Z) -> Hom(c0,Z) -> Ext^0(C,Z) -> Ext^1(c1,Z) -> 0``.

    ``to_ext0`` and ``to_ext1`` are the maps induced by the short exact
    sequence of complexes ``0 -> [0 -> c1> -> C -> [c0 -> 0> -> 0``, written
    in the free-replacement coordinates of ``ext0``.
    """

    homH: FgAbGroup
    homG: FgAbGroup
    dual: AbMap
    ext0: FgAbGroup
    ext1H: FgAbGroup
    to_ext0: AbMap
    to_ext1: AbMap
    connecting_check: bool


def les_pieces(C: TwoTermComplex) -> LesPieces:
    rep = free_replacement(C)
    g, m = rep.F.cols, rep.R.cols
    ext0 = ext0_to_Z(C)
    # Ext^1(c1, Z) presented as coker(R^T), not canonicalized, so the map
    # Ext^0 -> Ext^1 is the projection onto the last m coordinates
    ext1_presented = FgAbGroup(m, rep.R.T)

    homH, _ = hom_to_Z(C.c1)
    homG, basisG = hom_to_Z(C.c0)
    dual = dual_map(C.d)

    # a functional phi on c0 pulls back to phi o from_free on the free summand
    on_free = rep.from_free.T @ basisG
    to_ext0 = AbMap(homG, ext0, on_free.vstack(IntMatrix.zeros(m, homG.gens)))
    proj = IntMatrix.zeros(m, g).hstack(IntMatrix.identity(m))
    to_ext1 = AbMap(ext0, ext1_presented, proj)

    coker_dual = cokernel(dual)
    ext1H = ext1_to_Z(C.c1)
    bookkeeping = (
        ext0.rank == coker_dual.rank
        and (coker_dual.torsion_order * ext1H.torsion_order) % ext0.torsion_order == 0
    )
    exact = (
        is_exact_at(dual, to_ext0)
        and is_exact_at(to_ext0, to_ext1)
        and is_surjective(to_ext1)
        and ext1_presented.isomorphic(ext1H)
    )
    return LesPieces(homH, homG, dual, ext0, ext1H, to_ext0, to_ext1, bookkeeping and exact)


@dataclass(frozen=True)
class ThreeTermCocharComplex:
    """``<a --f--> b --g--> c]`` of free lattices, ``c`` in degree 0.

    For a homogeneous space this is ``T_{H^sc,*} -> T_{H^red,*} -> G^tor_*``.
    """

    a: FgAbGroup
    b: FgAbGroup
    c: FgAbGroup
    f: AbMap
    g: AbMap

    def __post_init__(self):
        for name in ("a", "b", "c"):
            lattice = getattr(self, name)
            if lattice.rels.cols:
                raise ComplexError(f"term {name} must be a lattice Z^n without relations")
        if (self.f.src, self.f.dst, self.g.src, self.g.dst) != (self.a, self.b, self.b, self.c):
            raise ComplexError("maps do not match the terms")
        if not is_zero_map(compose(self.g, self.f)):
            raise ComplexError("g o f is not zero")

    @classmethod
    def from_matrices(cls, a: int, b: int, c: int, f: IntMatrix, g: IntMatrix) -> ThreeTermCocharComplex:
        A, B, Cc = FgAbGroup.free(a), FgAbGroup.free(b), FgAbGroup.free(c)
        return cls(A, B, Cc, AbMap(A, B, f), AbMap(B, Cc, g))


def h_minus1(C: ThreeTermCocharComplex) -> FgAbGroup:
    """``ker g / im f`` in the basis of ``ker g``."""
    K = kernel_basis(C.g.matrix)
    coords = solve_matrix(K, C.f.matrix)
    if coords is None:
        raise AssertionError("image of f is not inside ker g; the complex condition is violated")
    return FgAbGroup(K.cols, coords)


def cohomology_at(C: ThreeTermCocharComplex, degree: int) -> FgAbGroup:
    if degree == -2:
        return FgAbGroup.free(kernel_basis(C.f.matrix).cols)
    if degree == -1:
        return h_minus1(C)
    if degree == 0:
        return cokernel(C.g)
    raise ValueError(f"complex lives in degrees -2, -1, 0; got {degree}")


def is_exact_complex(C: ThreeTermCocharComplex) -> bool:
    return is_injective(C.f) and is_exact_at(C.f, C.g) and is_surjective(C.g)
