"""Finitely generated abelian groups as cokernels of integer matrices.

A group is ``coker(rels: Z^m -> Z^n)``; maps between groups are integer
matrices acting on generators. Groups compare by presentation under ``==``;
use :meth:`FgAbGroup.isomorphic` (same invariant factors) for the
mathematical question.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from typing import Sequence

from sympy import isprime

from .intlin import (
    IntMatrix,
    block_diag,
    image_basis,
    in_column_span,
    kernel_basis,
    smith_diagonal,
    snf,
    solve_matrix,
)


class IllDefinedMapError(ValueError):
    """A matrix does not send relations of the source into relations of the target."""


@dataclass(frozen=True, eq=True)
class FgAbGroup:
    """``Z^gens`` modulo the column span of ``rels``.

    The relation matrix is normalized on construction to column Hermite
    form with zero columns dropped, so it always has full column rank.
    """

    gens: int
    rels: IntMatrix = field(default=None)

    def __post_init__(self):
        rels = self.rels if self.rels is not None else IntMatrix.zeros(self.gens, 0)
        if rels.rows != self.gens:
            raise ValueError(f"relation matrix has {rels.rows} rows for {self.gens} generators")
        object.__setattr__(self, "rels", image_basis(rels))

    @classmethod
    def free(cls, n: int) -> FgAbGroup:
        return cls(n)

    @classmethod
    def cyclic(cls, n: int) -> FgAbGroup:
        return cls(1, IntMatrix(1, 1, (n,)))

    @classmethod
    def from_invariants(cls, rank: int, factors: Sequence[int] = ()) -> FgAbGroup:
        """``Z^rank + Z/f1 + ...``; the torsion generators come first."""
        k = len(factors)
        return cls(rank + k, IntMatrix.diag(list(factors), rank + k, k))

    @cached_property
    def _smith(self) -> list[int]:
        return smith_diagonal(self.rels)

    @property
    def rank(self) -> int:
        return self.gens - len(self._smith)

    @property
    def factors(self) -> tuple[int, ...]:
        return tuple(d for d in self._smith if d != 1)

    def invariant_factors(self) -> tuple[int, tuple[int, ...]]:
        return self.rank, self.factors

    @property
    def torsion_order(self) -> int:
        return prod(self.factors)

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.factors

    def is_torsion_free(self) -> bool:
        return not self.factors

    def isomorphic(self, other: FgAbGroup) -> bool:
        return self.invariant_factors() == other.invariant_factors()

    def canonical(self) -> FgAbGroup:
        return FgAbGroup.from_invariants(self.rank, self.factors)

    def direct_sum(self, other: FgAbGroup) -> FgAbGroup:
        return FgAbGroup(self.gens + other.gens, block_diag(self.rels, other.rels))

    def contains(self, vectors: IntMatrix) -> bool:
        """Whether every column of ``vectors`` is zero in the group."""
        return in_column_span(self.rels, vectors)

    def __str__(self):
        return format_group(self.rank, self.factors)


def format_group(rank: int, factors: Sequence[int]) -> str:
    parts = [f"Z^{rank}"] if rank else []
    parts += [f"Z/{d}" for d in factors]
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class AbMap:
    """Homomorphism ``src -> dst`` given by its action on generators."""

    src: FgAbGroup
    dst: FgAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.dst.gens, self.src.gens):
            raise ValueError(
                f"map matrix is {self.matrix.rows}x{self.matrix.cols}, "
                f"expected {self.dst.gens}x{self.src.gens}"
            )
        if not self.dst.contains(self.matrix @ self.src.rels):
            raise IllDefinedMapError("map does not respect the relations of its source")

    @classmethod
    def identity(cls, A: FgAbGroup) -> AbMap:
        return cls(A, A, IntMatrix.identity(A.gens))

    @classmethod
    def zero(cls, src: FgAbGroup, dst: FgAbGroup) -> AbMap:
        return cls(src, dst, IntMatrix.zeros(dst.gens, src.gens))


def compose(f: AbMap, g: AbMap) -> AbMap:
    """``f o g``."""
    if g.dst.gens != f.src.gens:
        raise ValueError(f"cannot compose: g lands in {g.dst.gens} generators, f starts from {f.src.gens}")
    return AbMap(g.src, f.dst, f.matrix @ g.matrix)


def is_zero_map(f: AbMap) -> bool:
    return f.dst.contains(f.matrix)


def invariant_factors(A: FgAbGroup) -> tuple[int, tuple[int, ...]]:
    return A.invariant_factors()


def torsion(A: FgAbGroup) -> FgAbGroup:
    return FgAbGroup.from_invariants(0, A.factors)


def cokernel(f: AbMap) -> FgAbGroup:
    return FgAbGroup(f.dst.gens, f.dst.rels.hstack(f.matrix))


def kernel(f: AbMap) -> tuple[FgAbGroup, AbMap]:
    """Kernel of ``f`` with its inclusion into ``f.src``.

    Lifts to the ambient lattices: ``x`` lies in the kernel iff
    ``f.matrix @ x`` is a relation of ``dst``, i.e. iff ``(x, y)`` is in the
    kernel of ``[f.matrix | dst.rels]`` for some ``y``.
    """
    n = f.src.gens
    block = f.matrix.hstack(f.dst.rels)
    lifted = kernel_basis(block)
    preimage = image_basis(lifted.submatrix(range(n), range(lifted.cols)))
    rels = solve_matrix(preimage, f.src.rels)
    if rels is None:
        raise AssertionError("source relations are not in the preimage lattice")
    K = FgAbGroup(preimage.cols, rels)
    inc = AbMap(K, f.src, preimage)
    if not is_injective(inc):
        raise AssertionError("kernel inclusion is not injective")
    return K, inc


def is_injective(f: AbMap) -> bool:
    # x in ker f  <=>  f x is a relation of dst; injective iff all such x are relations of src
    block = f.matrix.hstack(f.dst.rels)
    lifted = kernel_basis(block)
    return f.src.contains(lifted.submatrix(range(f.src.gens), range(lifted.cols)))


def is_surjective(f: AbMap) -> bool:
    return cokernel(f).is_trivial()


def is_exact_at(f: AbMap, g: AbMap) -> bool:
    """Exactness of ``A --f--> B --g--> C`` at ``B``."""
    if f.dst.gens != g.src.gens:
        raise ValueError("maps are not composable")
    if not is_zero_map(compose(g, f)):
        return False
    _, inc = kernel(g)
    return in_column_span(f.matrix.hstack(f.dst.rels), inc.matrix)


# duality ------------------------------------------------------------------

def hom_to_Z(A: FgAbGroup) -> tuple[FgAbGroup, IntMatrix]:
    """``Hom(A, Z)`` as a free group plus the lattice it sits in.

    The columns of the returned basis are functionals ``phi`` on ``Z^gens``
    with ``phi . rels == 0``; they form a basis of ``Hom(A, Z)``.
    """
    basis = kernel_basis(A.rels.T)
    return FgAbGroup.free(basis.cols), basis


def dual_map(f: AbMap) -> AbMap:
    """``Hom(f, Z): Hom(dst, Z) -> Hom(src, Z)`` in the bases of :func:`hom_to_Z`."""
    hom_dst, kd = hom_to_Z(f.dst)
    hom_src, ks = hom_to_Z(f.src)
    pulled = f.matrix.T @ kd
    coords = solve_matrix(ks, pulled)
    if coords is None:
        raise AssertionError("pulled-back functional does not vanish on relations")
    return AbMap(hom_dst, hom_src, coords)


def ext1_to_Z(A: FgAbGroup) -> FgAbGroup:
    """``Ext^1(A, Z)`` in invariant-factor form.

    With the injective presentation ``0 -> Z^m -> Z^n -> A -> 0`` the long
    exact sequence for ``Hom(-, Z)`` gives ``Ext^1(A, Z) = coker(rels^T)``.
    """
    return FgAbGroup(A.rels.cols, A.rels.T).canonical()


def free_basis(A: FgAbGroup) -> tuple[IntMatrix, IntMatrix]:
    """Mutually inverse isomorphisms between a torsion-free ``A`` and ``Z^rank``.

    Returns ``(to_free, from_free)`` acting on generator coordinates:
    ``to_free`` is ``rank x gens`` and ``from_free`` is ``gens x rank``.
    """
    if not A.is_torsion_free():
        raise ValueError(f"group {A} has torsion")
    u, d, _ = snf(A.rels)
    r = A.gens - A.rank
    to_free = u.submatrix(range(r, A.gens), range(A.gens))
    u_inv = solve_matrix(u, IntMatrix.identity(A.gens))
    from_free = u_inv.submatrix(range(A.gens), range(r, A.gens))
    return to_free, from_free


# prime-to-p part -----------------------------------------------------------

@dataclass(frozen=True)
class PrimeToPAbGroup:
    """``A (x) Z_(p')``: the rank and the torsion factors coprime to ``p``."""

    p: int
    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion factors {self.torsion} are not a divisibility chain")
        if any(d <= 1 or (self.p and d % self.p == 0) for d in self.torsion):
            raise ValueError(f"torsion factors {self.torsion} must be >1 and prime to {self.p}")

    def __str__(self):
        return format_group(self.rank, self.torsion)


def check_char(p: int) -> int:
    if p < 0 or (p != 0 and not isprime(p)):
        raise ValueError(f"characteristic must be 0 or a prime, got {p}")
    return p


def strip_p(d: int, p: int) -> int:
    """Largest divisor of ``d`` coprime to ``p`` (``p = 0`` strips nothing)."""
    if p:
        while d % p == 0:
            d //= p
    return d


def tensor_prime_to_p(A: FgAbGroup, p: int) -> PrimeToPAbGroup:
    check_char(p)
    tors = tuple(s for s in (strip_p(d, p) for d in A.factors) if s > 1)
    return PrimeToPAbGroup(p, A.rank, tors)
