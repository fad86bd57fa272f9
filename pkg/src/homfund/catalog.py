"""Standard groups, standard embeddings, and worked examples with known answers.

Character lattices follow the usual conventions: ``GL_n`` has characters
``Z`` (powers of det), ``SL_n`` and ``Sp_2n`` have none, and a split torus
of rank ``n`` has ``Z^n``. Cocharacter data uses the diagonal maximal torus.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .abgroup import AbMap, FgAbGroup
from .complexes import ThreeTermCocharComplex
from .homspace import HomSpaceInput, HypothesisFlags
from .intlin import IntMatrix

Invariants = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class GroupData:
    """Lattice data of a connected reductive group.

    ``coroots`` is ``T_{G^sc,*} -> T_{G,*}``; ``to_tor`` is ``T_{G,*} -> G^tor_*``.
    """

    name: str
    g_hat: FgAbGroup
    coroots: AbMap
    to_tor: AbMap
    pic_zero: bool


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"rank parameter must be >= 1, got {n}")


def _free_map(rows, src: int, dst: int) -> AbMap:
    m = IntMatrix.from_rows(rows, src) if dst else IntMatrix.zeros(0, src)
    return AbMap(FgAbGroup.free(src), FgAbGroup.free(dst), m)


def torus(n: int) -> GroupData:
    _check_n(n)
    ident = IntMatrix.identity(n).to_rows()
    return GroupData(f"G_m^{n}", FgAbGroup.free(n), _free_map([[] for _ in range(n)], 0, n),
                     _free_map(ident, n, n), True)


def _sl_coroots(n: int) -> list[list[int]]:
    # e_i - e_{i+1} written in Z^n, as columns
    return [[(1 if i == j else -1 if i == j + 1 else 0) for j in range(n - 1)] for i in range(n)]


def gl(n: int) -> GroupData:
    _check_n(n)
    return GroupData(f"GL_{n}", FgAbGroup.free(1), _free_map(_sl_coroots(n), n - 1, n),
                     _free_map([[1] * n], n, 1), True)


def sl(n: int) -> GroupData:
    _check_n(n)
    ident = IntMatrix.identity(n - 1).to_rows()
    return GroupData(f"SL_{n}", FgAbGroup.free(0), _free_map(ident, n - 1, n - 1),
                     _free_map([], n - 1, 0), True)


def sp(two_n: int) -> GroupData:
    if two_n < 2 or two_n % 2:
        raise ValueError(f"Sp needs an even positive size, got {two_n}")
    n = two_n // 2
    ident = IntMatrix.identity(n).to_rows()
    return GroupData(f"Sp_{two_n}", FgAbGroup.free(0), _free_map(ident, n, n),
                     _free_map([], n, 0), True)


def pgl(n: int) -> GroupData:
    """``PGL_n``; ``T_*`` is ``Z^n / Z(1,...,1)`` in the basis ``e_1 .. e_{n-1}``."""
    if n < 2:
        raise ValueError(f"PGL_n needs n >= 2, got {n}")
    cols = []
    for i in range(n - 1):
        col = [0] * (n - 1)
        col[i] += 1
        if i + 1 < n - 1:
            col[i + 1] -= 1
        else:
            # -e_n = e_1 + ... + e_{n-1}
            col = [c + 1 for c in col]
        cols.append(col)
    m = IntMatrix.from_columns(cols, n - 1)
    return GroupData(f"PGL_{n}", FgAbGroup.free(0), AbMap(FgAbGroup.free(n - 1), FgAbGroup.free(n - 1), m),
                     _free_map([], n - 1, 0), False)


# homogeneous spaces --------------------------------------------------------------

def _cochar(a: int, b: int, c: int, f_rows, g_rows) -> ThreeTermCocharComplex:
    f = IntMatrix.from_rows(f_rows, a) if b else IntMatrix.zeros(0, a)
    g = IntMatrix.from_rows(g_rows, b) if c else IntMatrix.zeros(0, b)
    return ThreeTermCocharComplex.from_matrices(a, b, c, f, g)


CONNECTED = HypothesisFlags(pic_g_zero=True, h_kerchar_connected=True, h_connected=True, h_smooth=True)


def torus_torsor(n: int) -> HomSpaceInput:
    """A torsor under ``G_m^n``: the torus acting on itself, trivial stabilizer."""
    _check_n(n)
    G = FgAbGroup.free(n)
    H = FgAbGroup.free(0)
    return HomSpaceInput(G, H, AbMap(G, H, IntMatrix.zeros(0, n)), CONNECTED,
                         _cochar(0, 0, n, [], [[] for _ in range(n)]),
                         name=f"torus_torsor_{n}")


def mu_in_gm(n: int, char_p: int = 0) -> HomSpaceInput:
    """``G_m / mu_n``; ``mu_n`` is smooth unless ``char_p`` divides ``n``."""
    _check_n(n)
    G = FgAbGroup.free(1)
    H = FgAbGroup.cyclic(n)
    smooth = char_p == 0 or n % char_p != 0
    flags = HypothesisFlags(pic_g_zero=True, h_kerchar_connected=True, h_connected=n == 1, h_smooth=smooth)
    return HomSpaceInput(G, H, AbMap(G, H, IntMatrix.from_rows([[1]])), flags,
                         char_p=char_p, name=f"gm_mod_mu{n}")


def diagonal_torus_in_sl(n: int) -> HomSpaceInput:
    """``SL_n / T`` with ``T`` the diagonal maximal torus."""
    if n < 2:
        raise ValueError(f"SL_n / T needs n >= 2, got {n}")
    r = n - 1
    G = FgAbGroup.free(0)
    H = FgAbGroup.free(r)
    # T is a torus: H^sc = 1, T_{H^red,*} = Z^{n-1}, G^tor_* = 0
    return HomSpaceInput(G, H, AbMap(G, H, IntMatrix.zeros(r, 0)), CONNECTED,
                         _cochar(0, r, 0, [[] for _ in range(r)], []),
                         name=f"sl{n}_mod_t")


def sl_in_gl(n: int) -> HomSpaceInput:
    """``GL_n / SL_n``, isomorphic to ``G_m`` through det."""
    _check_n(n)
    G = FgAbGroup.free(1)
    H = FgAbGroup.free(0)
    r = n - 1
    ident = IntMatrix.identity(r).to_rows()
    return HomSpaceInput(G, H, AbMap(G, H, IntMatrix.zeros(0, 1)), CONNECTED,
                         _cochar(r, r, 1, ident, [[0] * r]),
                         name=f"gl{n}_mod_sl{n}")


def diagonal_torus_in_gl(n: int) -> HomSpaceInput:
    """``GL_n / T``: det restricts to ``t_1 ... t_n`` on the diagonal torus."""
    _check_n(n)
    G = FgAbGroup.free(1)
    H = FgAbGroup.free(n)
    return HomSpaceInput(G, H, AbMap(G, H, IntMatrix.from_rows([[1]] * n)), CONNECTED,
                         _cochar(0, n, 1, [[] for _ in range(n)], [[1] * n]),
                         name=f"gl{n}_mod_t")


def twisted_component_example() -> HomSpaceInput:
    """``G^ = Z^2``, ``H^ = Z + Z/2`` with ``i*(e1) = (2, 1)``, ``i*(e2) = (4, 0)``.

    Realizable as ``G = G_m^2 x SL_N`` and ``H = G_m x mu_2`` with ``mu_2``
    partly inside the semisimple factor. The sequence
    ``0 -> Z + Z/2 -> pi1 -> Z/2 -> 0`` does not split here and ``pi1 = Z + Z/4``.
    """
    flags = HypothesisFlags(pic_g_zero=True, h_kerchar_connected=True, h_connected=False, h_smooth=True)
    return HomSpaceInput.build(2, 2, [[0], [2]], [[2, 4], [1, 0]], flags=flags,
                               name="twisted_component")


# worked examples -----------------------------------------------------------------

@dataclass(frozen=True)
class NamedExample:
    name: str
    input: HomSpaceInput
    expected_pi1: Invariants
    expected_pi0: Invariants
    provenance: str
    expected_pi2: Optional[Invariants] = None


def worked_examples() -> list[NamedExample]:
    out = []
    for n in (1, 2, 5):
        out.append(NamedExample(f"torus_torsor_{n}", torus_torsor(n), (n, ()), (0, ()),
                                "X is the torus G_m^n itself; pi1 = cocharacters = Z^n", (0, ())))
    for n in (2, 3, 4, 6):
        out.append(NamedExample(f"gm_mod_mu{n}", mu_in_gm(n), (1, ()), (0, (n,)),
                                "G_m/mu_n is isomorphic to G_m via t -> t^n"))
    out.append(NamedExample("sl2_mod_t", diagonal_torus_in_sl(2), (0, ()), (0, ()),
                            "SL_2/T retracts onto the 2-sphere", (1, ())))
    out.append(NamedExample("sl3_mod_t", diagonal_torus_in_sl(3), (0, ()), (0, ()),
                            "SL_3/T retracts onto the complete flag variety of C^3", (2, ())))
    for n in (2, 3):
        out.append(NamedExample(f"gl{n}_mod_sl{n}", sl_in_gl(n), (1, ()), (0, ()),
                                "GL_n/SL_n is isomorphic to G_m via det", (0, ())))
    out.append(NamedExample("gl2_mod_t", diagonal_torus_in_gl(2), (0, ()), (0, ()),
                            "GL_2/T fibres over P^1 with contractible fibre", (1, ())))
    out.append(NamedExample("twisted_component", twisted_component_example(), (1, (4,)), (0, (2,)),
                            "Ext route and auxiliary pipeline agree; hand check by 2x2 minors of "
                            "the 3x2 presentation [[2,1],[4,0],[0,2]]"))
    return out


def by_name(name: str) -> NamedExample:
    for ex in worked_examples():
        if ex.name == name:
            return ex
    raise KeyError(name)
