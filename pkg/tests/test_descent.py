from fractions import Fraction
from math import factorial

import pytest

from ncsf import (
    compose,
    compositions_of,
    convolve,
    cycle_type,
    delta,
    descent_composition_perm,
    descent_span_coordinates,
    group_algebra_element,
    max_group_degree,
    nsym_basis_element,
    nsym_convert,
    nsym_multiply,
    psi,
    psi_inverse,
    set_of,
    xi,
)
from ncsf.errors import (
    DegreeMismatchError,
    NotInDescentSpanError,
    ResourceLimitError,
)


def test_descent_composition_perm():
    assert descent_composition_perm((3, 1, 2)) == (1, 2)
    for n in range(1, 7):
        assert descent_composition_perm(tuple(range(1, n + 1))) == (n,)
        assert descent_composition_perm(tuple(range(n, 0, -1))) == (1,) * n


def test_compose_convention():
    # (sigma . tau)(i) = sigma(tau(i))
    sigma = (2, 3, 1)
    tau = (2, 1, 3)
    assert compose(sigma, tau) == (3, 2, 1)


def test_cycle_type():
    assert cycle_type((1, 2, 3)) == (1, 1, 1)
    assert cycle_type((2, 1, 3)) == (2, 1)
    assert cycle_type((2, 3, 1)) == (3,)


def test_xi_single_part_is_identity_permutation():
    assert xi((3,)).terms == {(1, 2, 3): 1}


def test_xi_one_two():
    assert sorted(xi((1, 2)).terms) == [(1, 2, 3), (2, 1, 3), (3, 1, 2)]


def test_xi_term_counts_are_coset_counts():
    for n in range(1, 7):
        for alpha in compositions_of(n):
            expected = factorial(n)
            for part in alpha:
                expected //= factorial(part)
            assert len(xi(alpha).terms) == expected, alpha


def test_delta_one_two():
    assert sorted(delta((1, 2)).terms) == [(2, 1, 3), (3, 1, 2)]


def test_delta_single_part():
    for n in range(1, 7):
        assert delta((n,)).terms == {tuple(range(1, n + 1)): 1}


def test_delta_classes_partition_the_group():
    for n in range(1, 6):
        assert sum(len(delta(alpha).terms) for alpha in compositions_of(n)) == factorial(n)


def test_xi_is_sum_of_deltas_over_contained_cut_sets():
    for n in range(1, 7):
        for alpha in compositions_of(n):
            cuts = set(set_of(alpha).elements)
            total = None
            for beta in compositions_of(n):
                if set(set_of(beta).elements) <= cuts:
                    total = delta(beta) if total is None else total + delta(beta)
            assert total == xi(alpha), alpha


def test_convolve_identity_element():
    for n in range(1, 5):
        unit = xi((n,))
        x = delta(tuple([1] * n)) + 3 * xi((n,))
        assert convolve(unit, x) == x
        assert convolve(x, unit) == x


def test_convolve_transposition_squared():
    t = group_algebra_element(3, {(2, 1, 3): 1})
    assert convolve(t, t).terms == {(1, 2, 3): 1}


def test_convolve_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        convolve(xi((2,)), xi((3,)))


def test_descent_span_coordinates_of_xi():
    for n in range(1, 6):
        for alpha in compositions_of(n):
            coords = descent_span_coordinates(xi(alpha))
            cuts = set(set_of(alpha).elements)
            expected = {
                beta: Fraction(1)
                for beta in compositions_of(n)
                if set(set_of(beta).elements) <= cuts
            }
            assert coords == expected


def test_single_permutation_not_in_span():
    element = group_algebra_element(3, {(2, 1, 3): 1})
    assert descent_span_coordinates(element) is None
    with pytest.raises(NotInDescentSpanError):
        psi(element)


def test_solomon_closure():
    for n in range(1, 6):
        for alpha in compositions_of(n):
            xa = xi(alpha)
            for beta in compositions_of(n):
                product = convolve(xa, xi(beta))
                assert descent_span_coordinates(product) is not None, (alpha, beta)


def test_psi_sends_xi_to_complete_homogeneous():
    for n in range(1, 6):
        for alpha in compositions_of(n):
            assert nsym_convert(psi(xi(alpha)), "H").terms == {alpha: 1}


def test_psi_respects_graded_products_on_generators():
    for a in range(1, 6):
        for b in range(1, 7 - a):
            concatenated = psi(xi((a, b)))
            product = nsym_multiply(
                nsym_basis_element("H", (a,)), nsym_basis_element("H", (b,))
            )
            assert nsym_convert(concatenated, "H") == product


def test_psi_inverse_of_ribbon():
    assert psi_inverse(nsym_basis_element("R", (1, 2))) == delta((1, 2))


def test_psi_inverse_is_right_inverse():
    for n in range(1, 5):
        for alpha in compositions_of(n):
            for basis in ("H", "R", "S", "YS", "E"):
                x = nsym_basis_element(basis, alpha)
                assert psi(psi_inverse(x)) == nsym_convert(x, "R"), (basis, alpha)


def test_psi_inverse_requires_homogeneous():
    mixed = nsym_basis_element("H", (2,)) + nsym_basis_element("H", (1, 2))
    with pytest.raises(DegreeMismatchError):
        psi_inverse(mixed)


def test_degree_bound_is_enforced(monkeypatch):
    monkeypatch.setenv("NCSF_MAX_N", "4")
    assert max_group_degree() == 4
    with pytest.raises(ResourceLimitError):
        xi((5,))
    monkeypatch.setenv("NCSF_MAX_N", "5")
    assert len(xi((5,)).terms) == 1


def test_default_degree_bound(monkeypatch):
    monkeypatch.delenv("NCSF_MAX_N", raising=False)
    assert max_group_degree() == 8
    with pytest.raises(ResourceLimitError):
        delta((9,))


def test_group_algebra_element_validation():
    with pytest.raises(ValueError):
        group_algebra_element(3, {(1, 1, 2): 1})
    with pytest.raises(DegreeMismatchError):
        group_algebra_element(3, {(1, 2): 1})
    assert group_algebra_element(3, {(1, 2, 3): 0}).terms == {}
