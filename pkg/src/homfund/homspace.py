"""Fundamental-group invariants of a homogeneous space ``X = G/H`` from lattice data.

The input is the character group of ``G`` (free), the character group of
``H`` (possibly with torsion), the restriction map ``i*`` between them and,
for ``pi_2``, the cocharacter complex ``T_{H^sc,*} -> T_{H^red,*} -> G^tor_*``.
Hypotheses such as ``Pic(G) = 0`` cannot be read off this data, so they are
carried as flags the caller asserts; every formula refuses to run without
the flags it depends on.

All groups are returned up to isomorphism; the ``(-1)`` twist of the
fundamental groups is only a label (``pi1(-1)``) and has no effect on the
computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .abgroup import (
    AbMap,
    FgAbGroup,
    PrimeToPAbGroup,
    check_char,
    cokernel,
    dual_map,
    ext1_to_Z,
    free_basis,
    kernel,
    tensor_prime_to_p,
)
from .complexes import (
    LesPieces,
    ThreeTermCocharComplex,
    TwoTermComplex,
    cohomology_at,
    ext0_to_Z,
    h_minus1,
    les_pieces,
)
from .intlin import IntMatrix, rank


class HypothesisError(Exception):
    """A theorem-level computation was requested without its hypotheses."""

    def __init__(self, missing: list[str], what: str):
        self.missing = missing
        super().__init__(f"{what} requires asserted hypotheses: {', '.join(missing)}")


class ConsistencyError(Exception):
    """Two independent computations of the same invariant disagree."""


@dataclass(frozen=True)
class HypothesisFlags:
    pic_g_zero: bool = False
    h_kerchar_connected: bool = False
    h_connected: bool = False
    h_smooth: bool = False

    def holds(self, name: str) -> bool:
        # H connected forces H^kerchar = ker(H -> H^mult) connected
        if name == "h_kerchar_connected":
            return self.h_kerchar_connected or self.h_connected
        return getattr(self, name)

    def require(self, what: str, *names: str) -> None:
        missing = [n for n in names if not self.holds(n)]
        if missing:
            raise HypothesisError(missing, what)


@dataclass(frozen=True)
class HomSpaceInput:
    g_hat: FgAbGroup
    h_hat: FgAbGroup
    i_star: AbMap
    flags: HypothesisFlags = field(default_factory=HypothesisFlags)
    cochar: Optional[ThreeTermCocharComplex] = None
    char_p: int = 0
    name: str = ""

    def __post_init__(self):
        if not self.g_hat.is_torsion_free():
            raise ValueError(f"character group of a connected G must be free, got {self.g_hat}")
        if self.flags.h_connected and not self.h_hat.is_torsion_free():
            raise ValueError(f"H is asserted connected but its character group {self.h_hat} has torsion")
        if self.i_star.src != self.g_hat or self.i_star.dst != self.h_hat:
            raise ValueError("i_star must map g_hat to h_hat")
        check_char(self.char_p)

    @classmethod
    def build(cls, g_gens: int, h_gens: int, h_rels, i_star, g_rels=None, **kw) -> HomSpaceInput:
        """Convenience constructor from plain nested lists / matrices."""
        G = FgAbGroup(g_gens, _mat(g_rels, g_gens))
        H = FgAbGroup(h_gens, _mat(h_rels, h_gens))
        f = AbMap(G, H, _mat(i_star, h_gens, g_gens))
        return cls(G, H, f, **kw)

    @property
    def complex(self) -> TwoTermComplex:
        return TwoTermComplex(self.g_hat, self.h_hat, self.i_star)


def _mat(data, rows: int, cols: int | None = None) -> IntMatrix:
    if isinstance(data, IntMatrix):
        return data
    if data is None or (not data and cols is None):
        return IntMatrix.zeros(rows, 0 if cols is None else cols)
    if not data:
        return IntMatrix.zeros(rows, cols)
    return IntMatrix.from_rows(data, cols)


# pi_1 ------------------------------------------------------------------------

def pi1_top(inp: HomSpaceInput) -> FgAbGroup:
    """``pi_1(X)(-1) = Ext^0([G^ -> H^>, Z)``."""
    inp.flags.require("pi1", "pic_g_zero", "h_kerchar_connected")
    return ext0_to_Z(inp.complex)


@dataclass(frozen=True)
class Pi1Sequence:
    """``Hom(H^,Z) -> Hom(G^,Z) -> pi1(-1) -> pi0(H)(-1) -> 0`` plus exactness verdict."""

    hom_h: FgAbGroup
    hom_g: FgAbGroup
    pi1: FgAbGroup
    pi0_h: FgAbGroup
    dual_i_star: AbMap
    to_pi1: AbMap
    to_pi0: AbMap
    exact: bool
    rank_identity: bool
    torsion_divisibility: bool


def pi1_sequence(inp: HomSpaceInput) -> Pi1Sequence:
    inp.flags.require("pi1 exact sequence", "pic_g_zero", "h_kerchar_connected")
    les: LesPieces = les_pieces(inp.complex)
    coker_dual = cokernel(les.dual)
    rank_identity = les.ext0.rank == les.homG.rank - rank(les.dual.matrix)
    divisibility = (coker_dual.torsion_order * les.ext1H.torsion_order) % les.ext0.torsion_order == 0
    return Pi1Sequence(
        hom_h=les.homH,
        hom_g=les.homG,
        pi1=les.ext0,
        pi0_h=les.ext1H,
        dual_i_star=les.dual,
        to_pi1=les.to_ext0,
        to_pi0=les.to_ext1,
        exact=les.connecting_check,
        rank_identity=rank_identity,
        torsion_divisibility=divisibility,
    )


def pi1_connected(inp: HomSpaceInput) -> FgAbGroup:
    """``coker(H^tor_* -> G^tor_*)``, i.e. the cokernel of ``Hom(i*, Z)``."""
    inp.flags.require("pi1 for connected H", "pic_g_zero", "h_connected")
    if not inp.h_hat.is_torsion_free():
        raise ValueError(f"connected-H formula needs a torsion-free character group, got {inp.h_hat}")
    return cokernel(dual_map(inp.i_star))


def pi0_h(inp: HomSpaceInput) -> FgAbGroup:
    """``pi_0(H)(-1) = Hom(H^_tors, Q/Z)``."""
    return ext1_to_Z(inp.h_hat)


# pi_2 ------------------------------------------------------------------------

def pi2_top(inp: HomSpaceInput) -> FgAbGroup:
    inp.flags.require("pi2", "pic_g_zero", "h_connected")
    if inp.cochar is None:
        raise ValueError("pi2 needs the cocharacter complex (cochar block)")
    return h_minus1(inp.cochar)


def cochar_consistent(inp: HomSpaceInput) -> bool:
    """Whether ``H^0`` of the cocharacter complex matches the character-side ``pi_1``."""
    if inp.cochar is None:
        return True
    return cohomology_at(inp.cochar, 0).isomorphic(pi1_connected(inp))


# auxiliary torsor pipeline -------------------------------------------------------

@dataclass(frozen=True)
class PipelineStages:
    """Lattices met along ``X <- Y -> Z -> W``.

    ``q_rank`` is the rank of the torus ``Q`` receiving ``H^mult``;
    ``g_w_basis`` has as columns a basis of the character lattice of the
    torus ``G_W`` inside ``G^ + Q^``; ``projection`` is ``G_W^ -> Q^``.
    """

    q_rank: int
    surjection: IntMatrix
    g_y_map: IntMatrix
    g_w_basis: IntMatrix
    projection: IntMatrix
    pi1_y: FgAbGroup


def auxiliary_pipeline(inp: HomSpaceInput, q_hat_rank: int | None = None) -> tuple[FgAbGroup, PipelineStages]:
    """``pi_1(X)(-1)`` through the auxiliary spaces, independent of the Ext route.

    ``Q^ = Z^N`` surjects onto ``H^``: the first ``h_hat.gens`` basis vectors
    go to the generators, extra ones (when ``q_hat_rank`` exceeds that) cycle
    through the generators again. Then ``G_Y^ = G^ + Q^`` maps onto ``H^`` by
    ``(chi, q) -> i*chi + s(q)``, its kernel is the lattice ``G_W^``, and
    ``pi_1(Y) = pi_1(W) = Hom(G_W^, Z)``. Finally ``pi_1(X)`` is the quotient
    of ``pi_1(Y)`` by the image of ``pi_1(Q) = Hom(Q^, Z)``.
    """
    inp.flags.require("pi1 (auxiliary pipeline)", "pic_g_zero", "h_kerchar_connected")
    n = inp.h_hat.gens
    N = n if q_hat_rank is None else q_hat_rank
    if N < n:
        raise ValueError(f"Q^ needs rank at least {n} to surject onto H^")
    if n:
        s = IntMatrix.from_columns([[int(i == k % n) for i in range(n)] for k in range(N)], n)
    else:
        s = IntMatrix.zeros(0, N)

    _, from_free = free_basis(inp.g_hat)
    g = from_free.cols
    phi = (inp.i_star.matrix @ from_free).hstack(s)
    G_Y = FgAbGroup.free(g + N)
    K, inc = kernel(AbMap(G_Y, inp.h_hat, phi))
    basis = inc.matrix
    P = basis.submatrix(range(g, g + N), range(basis.cols))
    pi1_y = FgAbGroup.free(basis.cols)
    pi1_x = FgAbGroup(basis.cols, P.T)
    return pi1_x, PipelineStages(N, s, phi, basis, P, pi1_y)


# prime-to-p ------------------------------------------------------------------

def pi1_etale_prime_to_p(inp: HomSpaceInput, p: int | None = None) -> PrimeToPAbGroup:
    """``pi_1^et(X)^(p')(-1) = Ext^0([G^ -> H^>, Z) (x) Z_(p')``.

    When ``H`` is asserted connected the cokernel formula is evaluated as
    well and the two must agree.
    """
    p = inp.char_p if p is None else check_char(p)
    inp.flags.require("prime-to-p pi1", "pic_g_zero", "h_smooth", "h_kerchar_connected")
    result = tensor_prime_to_p(pi1_top(inp), p)
    if inp.flags.h_connected:
        other = tensor_prime_to_p(pi1_connected(inp), p)
        if other != result:
            raise ConsistencyError(f"prime-to-{p} pi1: Ext route gives {result}, cokernel route {other}")
    return result


def pi1_alg(t_sc_to_t: AbMap, p: int = 0) -> tuple[FgAbGroup, PrimeToPAbGroup]:
    """``pi_1^alg(G) = coker(T_{G^sc,*} -> T_{G,*})`` and its prime-to-``p`` part."""
    if not (t_sc_to_t.src.is_torsion_free() and t_sc_to_t.dst.is_torsion_free()):
        raise ValueError("cocharacter lattices must be torsion-free")
    group = cokernel(t_sc_to_t)
    return group, tensor_prime_to_p(group, p)


# report ------------------------------------------------------------------------

@dataclass
class Pi1Report:
    flags: HypothesisFlags
    pi1: Optional[FgAbGroup] = None
    sequence: Optional[Pi1Sequence] = None
    pi0_h: Optional[FgAbGroup] = None
    pi2: Optional[FgAbGroup] = None
    pi1_p_prime: Optional[PrimeToPAbGroup] = None
    oracle_agreement: Optional[bool] = None
    cochar_consistent: Optional[bool] = None


COMPUTE_KEYS = ("pi1", "sequence", "pi2", "pi0", "p_prime", "oracle")


def report(inp: HomSpaceInput, compute=("pi1", "pi0"), p: int | None = None) -> Pi1Report:
    """Run the requested computations; raises :class:`ConsistencyError` on any cross-check failure."""
    unknown = set(compute) - set(COMPUTE_KEYS)
    if unknown:
        raise ValueError(f"unknown computations: {sorted(unknown)}")
    out = Pi1Report(inp.flags)
    if "pi1" in compute:
        out.pi1 = pi1_top(inp)
        if inp.flags.h_connected and not out.pi1.isomorphic(pi1_connected(inp)):
            raise ConsistencyError(f"pi1: Ext route {out.pi1} vs cokernel route {pi1_connected(inp)}")
    if "sequence" in compute:
        out.sequence = pi1_sequence(inp)
        seq = out.sequence
        if not (seq.exact and seq.rank_identity and seq.torsion_divisibility):
            raise ConsistencyError("pi1 exact sequence failed its exactness checks")
    if "pi0" in compute:
        out.pi0_h = pi0_h(inp)
    if "pi2" in compute:
        out.pi2 = pi2_top(inp)
        out.cochar_consistent = cochar_consistent(inp)
    if "p_prime" in compute:
        out.pi1_p_prime = pi1_etale_prime_to_p(inp, p)
    if "oracle" in compute:
        direct = pi1_top(inp)
        via_w, _ = auxiliary_pipeline(inp)
        out.oracle_agreement = direct.isomorphic(via_w)
        if not out.oracle_agreement:
            raise ConsistencyError(f"pi1: Ext route {direct} vs auxiliary pipeline {via_w}")
    return out
