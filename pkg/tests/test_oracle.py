import itertools

import pytest

from schurq.combinat import compositions_of
from schurq.diagram import (
    CONCAT,
    NEARCONCAT,
    SkewShape,
    disjoint_union,
    ribbon_shape,
    skew_shapes,
    transpose,
    word,
)
from schurq.omega import OmegaElem, q, ribbon_q, skew_q
from schurq.oracle import (
    SparsePoly,
    amenable_q_poly,
    amenable_tableaux,
    e_poly,
    h_poly,
    jt_e_check,
    jt_h_check,
    omega_to_poly,
    poly_det,
    ribbon_q_poly,
    ssyt_poly,
    star_determinant_check,
    x1_coeff,
)


def P(k, **terms):
    # P(2, x1=2, x2=2) style constructor for linear forms
    out = {}
    for name, c in terms.items():
        e = [0] * k
        e[int(name[1:]) - 1] = 1
        out[tuple(e)] = c
    return SparsePoly(k, out)


def test_sparse_poly_arithmetic_and_printing():
    x = P(2, x1=1)
    y = P(2, x2=1)
    assert str(x * 2 + y * 2) == "2*x1 + 2*x2"
    assert str(x * x * 2 + x * y * 2) == "2*x1^2 + 2*x1*x2"
    assert (x + y) * (x - y) == x * x - y * y
    assert str(SparsePoly(2)) == "0"
    assert str(SparsePoly.constant(2, 3) - x) == "-x1 + 3"
    assert (x + y).is_symmetric() and not x.is_symmetric()
    assert x.permuted((1, 0)) == y


def test_amenable_examples():
    assert amenable_q_poly({(1, 1)}, 2) == P(2, x1=2, x2=2)
    assert amenable_q_poly(ribbon_shape((2,)), 1) == SparsePoly(1, {(2,): 2})
    assert amenable_q_poly(ribbon_shape((2, 1)), 3) == omega_to_poly(ribbon_q((2, 1)), 3)
    square = SkewShape.from_partitions((2, 2))
    assert amenable_q_poly(square, 1).coeff((4,)) == 0
    with pytest.raises(ValueError):
        amenable_q_poly({(1, 1)}, 0)


def test_omega_to_poly():
    assert omega_to_poly(q(1), 2) == P(2, x1=2, x2=2)
    assert omega_to_poly(OmegaElem.one(), 3) == SparsePoly.constant(3)
    assert omega_to_poly(OmegaElem.zero(), 3) == SparsePoly(3)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_transfer_dp_matches_brute_force(k):
    for n in range(1, 5):
        for d in skew_shapes(n):
            brute = {}
            for t in amenable_tableaux(d.cells, k):
                e = [0] * k
                for v in t:
                    e[(v - 1) // 2] += 1
                brute[tuple(e)] = brute.get(tuple(e), 0) + 1
            assert amenable_q_poly(d, k) == SparsePoly(k, brute), str(d)


def test_fillings_obey_the_rules():
    d = SkewShape.from_partitions((3, 2), (1,))
    cells = sorted(d.cells)
    for t in amenable_tableaux(cells, 2):
        f = dict(zip(cells, t))
        for (r, c), v in f.items():
            right, below = f.get((r, c + 1)), f.get((r + 1, c))
            if right is not None:
                assert right >= v and not (right == v and v % 2 == 1)
            if below is not None:
                assert below >= v and not (below == v and v % 2 == 0)


@pytest.mark.parametrize("n", range(1, 8))
def test_ribbon_transfer_matrix(n):
    k = min(n, 4)
    for alpha in compositions_of(n):
        assert ribbon_q_poly(alpha, k) == amenable_q_poly(ribbon_shape(alpha), k)


def test_ribbon_route_agrees_with_q_basis_at_full_arity():
    for n in range(1, 7):
        for alpha in compositions_of(n):
            assert ribbon_q_poly(alpha, n) == omega_to_poly(ribbon_q(alpha), n)


def test_equality_at_arity_n_matches_q_basis():
    # polynomial images in n variables separate exactly the q-basis classes
    for n in range(1, 7):
        comps = compositions_of(n)
        by_poly = {}
        by_q = {}
        for a in comps:
            by_poly.setdefault(str(ribbon_q_poly(a, n)), set()).add(a)
            by_q.setdefault(ribbon_q(a), set()).add(a)
        assert sorted(map(sorted, by_poly.values())) == sorted(map(sorted, by_q.values()))


def test_symmetry_degree_and_parity():
    for n in range(1, 6):
        for d in skew_shapes(n):
            k = 3
            p = amenable_q_poly(d, k)
            assert p.is_symmetric()
            assert p.total_degrees() <= {n}
            assert p.coeff((n, 0, 0)) == x1_coeff(d)
            if d.is_connected():
                assert all(c % 2 == 0 for c in p.terms.values())
    for d in skew_shapes(4):
        assert ssyt_poly(d, 4).is_symmetric()


def test_x1_coefficient_examples():
    assert all(x1_coeff(ribbon_shape(a)) == 2 for a in compositions_of(5))
    assert x1_coeff(disjoint_union((1,), (1,))) == 4
    assert x1_coeff(SkewShape.from_partitions((2, 2))) == 0


def test_classical_functions():
    x1, x2 = P(2, x1=1), P(2, x2=1)
    assert ssyt_poly(ribbon_shape((1,)), 2) == x1 + x2
    assert h_poly(2, 2) == x1 * x1 + x1 * x2 + x2 * x2
    assert e_poly(2, 2) == x1 * x2
    assert e_poly(3, 2) == SparsePoly(2)
    assert ssyt_poly(ribbon_shape((1, 1)), 3) + ssyt_poly(ribbon_shape((2,)), 3) == \
        ssyt_poly(ribbon_shape((1,)), 3) * ssyt_poly(ribbon_shape((1,)), 3)


def test_poly_det_small():
    a, b = P(2, x1=1), P(2, x2=1)
    assert poly_det([[a, b], [b, a]], 2) == a * a - b * b


def test_jacobi_trudi_examples():
    assert jt_h_check((2, 1), 3) and jt_e_check((2, 1), 3)
    for n in range(1, 5):
        assert jt_h_check((n,), 2) and jt_e_check((n,), 2)
    square = SkewShape.from_partitions((2, 2))
    assert jt_h_check(square, 4) and jt_e_check(square, 4)


def test_star_determinant_examples():
    one = ribbon_shape((1,))
    assert star_determinant_check([one, one], [CONCAT], 2)
    assert star_determinant_check([one, one, one], [NEARCONCAT, CONCAT], 3)
    b = ribbon_shape((2, 1))
    assert star_determinant_check([b, transpose(b), b], list(word((3,))), 4)
    with pytest.raises(ValueError):
        star_determinant_check([], [], 2)


def test_star_determinant_all_words():
    blocks = [ribbon_shape((1,)), ribbon_shape((2,)), ribbon_shape((1, 1))]
    for stars in itertools.product((CONCAT, NEARCONCAT), repeat=2):
        assert star_determinant_check(blocks, list(stars), 3)


def test_oracle_matches_skew_q_on_small_shapes():
    for n in range(1, 5):
        for d in skew_shapes(n):
            assert omega_to_poly(skew_q(d), n) == amenable_q_poly(d, n)
