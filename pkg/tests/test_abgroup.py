import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homfund.abgroup import (
    AbMap,
    FgAbGroup,
    IllDefinedMapError,
    PrimeToPAbGroup,
    cokernel,
    compose,
    dual_map,
    ext1_to_Z,
    free_basis,
    hom_to_Z,
    invariant_factors,
    is_exact_at,
    is_injective,
    is_surjective,
    is_zero_map,
    kernel,
    tensor_prime_to_p,
    torsion,
)
from homfund.intlin import IntMatrix
from tests.oracles import random_group, random_unimodular

M = IntMatrix.from_rows
Z = FgAbGroup.free(1)


def mult(n, src=Z, dst=Z):
    return AbMap(src, dst, M([[n]]))


@st.composite
def groups(draw):
    seed = draw(st.integers(0, 2**32))
    return random_group(random.Random(seed))


class TestInvariantFactors:
    def test_free(self):
        assert invariant_factors(FgAbGroup.free(2)) == (2, ())

    def test_cyclic(self):
        assert invariant_factors(FgAbGroup.cyclic(6)) == (0, (6,))

    def test_diagonal(self):
        assert invariant_factors(FgAbGroup(2, M([[2, 0], [0, 4]]))) == (0, (2, 4))

    def test_normalized_presentation_is_injective(self):
        A = FgAbGroup(2, M([[2, 4, 0], [0, 0, 0]]))
        assert A.rels.cols == 1
        assert A.invariant_factors() == (1, (2,))

    def test_str(self):
        assert str(FgAbGroup.from_invariants(1, [3])) == "Z^1 + Z/3"
        assert str(FgAbGroup.free(0)) == "0"

    @settings(max_examples=100, deadline=None)
    @given(groups(), st.integers(0, 2**32))
    def test_presentation_invariance(self, gi, seed):
        A, expected = gi
        assert A.invariant_factors() == expected
        rng = random.Random(seed)
        P = random_unimodular(rng, A.gens)
        Q = random_unimodular(rng, A.rels.cols)
        assert FgAbGroup(A.gens, P @ A.rels @ Q).invariant_factors() == expected


class TestDuality:
    def test_hom_of_torsion(self):
        assert hom_to_Z(FgAbGroup.cyclic(5))[0].rank == 0

    def test_hom_of_free(self):
        G, basis = hom_to_Z(FgAbGroup.free(2))
        assert G.rank == 2 and basis == IntMatrix.identity(2)

    def test_hom_mixed(self):
        # functionals vanishing on (2, 0)
        G, basis = hom_to_Z(FgAbGroup(2, M([[2], [0]])))
        assert G.rank == 1 and basis == M([[0], [1]])

    def test_ext1_free(self):
        assert ext1_to_Z(FgAbGroup.free(3)).is_trivial()

    def test_ext1_cyclic(self):
        assert ext1_to_Z(FgAbGroup.cyclic(12)).invariant_factors() == (0, (12,))

    def test_ext1_mixed(self):
        assert ext1_to_Z(FgAbGroup.from_invariants(1, [2, 6])).invariant_factors() == (0, (2, 6))

    @settings(max_examples=100, deadline=None)
    @given(groups())
    def test_ranks_and_ext(self, gi):
        A, _ = gi
        assert hom_to_Z(A)[0].rank == A.rank
        assert ext1_to_Z(A).invariant_factors() == torsion(A).invariant_factors()

    def test_dual_map_of_multiplication(self):
        d = dual_map(mult(4))
        assert d.matrix == M([[4]])

    def test_dual_map_from_torsion_target(self):
        # Z -> Z + Z/2, 1 -> (3, 1); dual kills the torsion coordinate
        H = FgAbGroup(2, M([[0], [2]]))
        d = dual_map(AbMap(Z, H, M([[3], [1]])))
        assert d.matrix == M([[3]])


class TestTorsion:
    def test_free(self):
        assert torsion(FgAbGroup.free(3)).is_trivial()

    def test_mixed(self):
        assert torsion(FgAbGroup.from_invariants(1, [4])).invariant_factors() == (0, (4,))

    def test_non_diagonal(self):
        assert torsion(FgAbGroup(2, M([[2, 1], [0, 3]]))).invariant_factors() == (0, (6,))


class TestMaps:
    def test_ill_defined(self):
        with pytest.raises(IllDefinedMapError):
            AbMap(FgAbGroup.cyclic(2), FgAbGroup.cyclic(3), M([[1]]))

    def test_shape(self):
        with pytest.raises(ValueError):
            AbMap(Z, Z, M([[1, 2]]))

    def test_multiplication(self):
        K, inc = kernel(mult(5))
        assert cokernel(mult(5)).invariant_factors() == (0, (5,))
        assert K.is_trivial()

    def test_zero(self):
        K, _ = kernel(mult(0))
        assert cokernel(mult(0)).invariant_factors() == (1, ())
        assert K.invariant_factors() == (1, ())

    def test_rank_one_matrix(self):
        Z2 = FgAbGroup.free(2)
        f = AbMap(Z2, Z2, M([[1, 3], [0, 0]]))
        assert cokernel(f).invariant_factors() == (1, ())
        K, inc = kernel(f)
        assert K.invariant_factors() == (1, ())
        assert inc.matrix == M([[3], [-1]])

    def test_kernel_with_torsion_target(self):
        # Z -> Z/6 reduction has kernel 6Z
        K, inc = kernel(mult(1, Z, FgAbGroup.cyclic(6)))
        assert K.invariant_factors() == (1, ()) and inc.matrix == M([[6]])

    def test_kernel_of_torsion_source(self):
        # Z/4 --2--> Z/4 has kernel Z/2
        C4 = FgAbGroup.cyclic(4)
        K, inc = kernel(mult(2, C4, C4))
        assert K.invariant_factors() == (0, (2,))
        assert is_injective(inc)

    def test_compose(self):
        f = mult(3)
        assert compose(f, AbMap.identity(Z)) == f
        assert compose(mult(2), mult(3)).matrix == M([[6]])
        assert is_zero_map(compose(mult(1, Z, FgAbGroup.cyclic(2)), mult(2)))
        with pytest.raises(ValueError):
            compose(mult(1), AbMap(Z, FgAbGroup.free(2), M([[1], [1]])))

    def test_short_exact(self):
        f = mult(7)
        q = mult(1, Z, FgAbGroup.cyclic(7))
        assert is_injective(f) and is_surjective(q) and is_exact_at(f, q)
        assert not is_exact_at(mult(14), q)

    @settings(max_examples=60, deadline=None)
    @given(groups(), groups(), st.integers(0, 2**32))
    def test_kernel_cokernel_bookkeeping(self, ga, gb, seed):
        # for f: A -> B with A free, rank(ker) + rank(im) = rank A
        A = FgAbGroup.free(ga[0].gens)
        B = gb[0]
        rng = random.Random(seed)
        m = IntMatrix(B.gens, A.gens, [rng.randint(-4, 4) for _ in range(A.gens * B.gens)])
        f = AbMap(A, B, m)
        K, inc = kernel(f)
        C = cokernel(f)
        assert is_injective(inc) and is_zero_map(compose(f, inc))
        assert is_exact_at(inc, f)
        assert K.rank + (B.rank - C.rank) == A.rank

    def test_free_basis(self):
        A = FgAbGroup(3, M([[1], [2], [0]]))
        to_free, from_free = free_basis(A)
        assert to_free.rows == 2 and from_free.cols == 2
        assert (to_free @ from_free) == IntMatrix.identity(2)
        with pytest.raises(ValueError):
            free_basis(FgAbGroup.cyclic(2))


class TestPrimeToP:
    def test_strip(self):
        assert tensor_prime_to_p(FgAbGroup.from_invariants(1, [12]), 2) == PrimeToPAbGroup(2, 1, (3,))

    def test_p_group_dies(self):
        assert tensor_prime_to_p(FgAbGroup.cyclic(8), 2) == PrimeToPAbGroup(2, 0, ())

    def test_char_zero(self):
        A = FgAbGroup.from_invariants(2, [2, 6])
        assert tensor_prime_to_p(A, 0) == PrimeToPAbGroup(0, 2, (2, 6))

    @pytest.mark.parametrize("p", [4, -2, 1, 9])
    def test_bad_p(self, p):
        with pytest.raises(ValueError):
            tensor_prime_to_p(Z, p)

    def test_validates(self):
        with pytest.raises(ValueError):
            PrimeToPAbGroup(3, 0, (3,))
        with pytest.raises(ValueError):
            PrimeToPAbGroup(0, 0, (2, 3))

    @settings(max_examples=100, deadline=None)
    @given(groups(), st.sampled_from([0, 2, 3, 5, 7]))
    def test_properties(self, gi, p):
        A, _ = gi
        T = tensor_prime_to_p(A, p)
        assert T.rank == A.rank
        assert all(p == 0 or d % p for d in T.torsion)
        stripped = A.torsion_order
        for d in T.torsion:
            stripped //= d
        while p and stripped % p == 0:
            stripped //= p
        assert stripped == 1
