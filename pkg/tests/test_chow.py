"""Chern/Todd/Riemann-Roch arithmetic and degeneracy classes."""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import pytest

from pnsheaf import (
    ChowClass,
    InputError,
    chern_character,
    chern_difference,
    chow_unit,
    cohomology_table,
    direct_sum,
    hrr_chi,
    hyperplane_power,
    o,
    omega,
    porteous_class,
    tangent,
    tensor,
    todd_class,
    total_chern,
)
from pnsheaf.weights import binom

from helpers import random_expression


def _fr(*values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


# ---------------------------------------------------------------------------
# Chern character


def test_character_of_line_bundle_is_truncated_exponential():
    for n in range(1, 5):
        for d in range(-3, 4):
            ch = chern_character(o(d, n))
            expected = tuple(
                Fraction(d) ** i / math.factorial(i) for i in range(n + 1)
            )
            assert ch.coeffs == expected


def test_character_of_tangent_plane():
    assert chern_character(tangent(2)).coeffs == _fr(2, 3, Fraction(3, 2))


def test_character_is_additive_and_multiplicative():
    seed = 515151
    print(f"character ring seed {seed}")
    rng = random.Random(seed)
    for _ in range(40):
        n = rng.randint(1, 4)
        a = random_expression(rng, n, depth=2)
        b = random_expression(rng, n, depth=2)
        cha, chb = chern_character(a), chern_character(b)
        assert chern_character(direct_sum(a, b)).coeffs == (cha + chb).coeffs
        assert chern_character(tensor(a, b)).coeffs == (cha * chb).coeffs


def test_character_of_cotangent_powers_satisfies_euler_recursion():
    # 0 -> Omega^p -> O(-p)^C(n+1, p) -> Omega^(p-1) -> 0
    for n in range(1, 5):
        prev = chow_unit(n)
        for p in range(1, n + 1):
            middle = binom(n + 1, p) * chern_character(o(-p, n))
            expected = middle - prev
            actual = chern_character(omega(p, n))
            assert actual.coeffs == expected.coeffs, (n, p)
            prev = actual


# ---------------------------------------------------------------------------
# total Chern class


def test_total_chern_of_line_bundle():
    for n in range(1, 5):
        for d in range(-3, 4):
            c = total_chern(o(d, n))
            assert c.coeffs == (Fraction(1), Fraction(d)) + (Fraction(0),) * (n - 1)


def test_total_chern_of_tangent_is_binomial_row():
    for n in range(1, 6):
        c = total_chern(tangent(n))
        expected = tuple(Fraction(binom(n + 1, i)) for i in range(n + 1))
        assert c.coeffs == expected


def test_total_chern_of_cotangent_alternates_signs():
    c = total_chern(omega(1, 2))
    assert c.coeffs == _fr(1, -3, 3)


def test_chern_difference_inverts_correctly():
    seed = 626262
    print(f"difference seed {seed}")
    rng = random.Random(seed)
    for _ in range(30):
        n = rng.randint(1, 4)
        e = random_expression(rng, n, depth=2)
        g = random_expression(rng, n, depth=2)
        diff = chern_difference(e, g)
        assert (diff * total_chern(e)).coeffs == total_chern(g).coeffs


# ---------------------------------------------------------------------------
# Todd class and Riemann-Roch


def test_todd_class_small_planes():
    assert todd_class(2).coeffs == _fr(1, Fraction(3, 2), 1)
    assert todd_class(3).coeffs == _fr(1, 2, Fraction(11, 6), 1)


def test_chi_of_line_bundles_is_binomial():
    for n in range(1, 6):
        for d in range(0, 6):
            assert hrr_chi(o(d, n)) == binom(n + d, n)
        for d in range(-n, 0):
            assert hrr_chi(o(d, n)) == 0


def test_chi_of_tangent_plane():
    assert hrr_chi(tangent(2)) == 8


def test_chi_matches_cohomology_alternating_sum():
    seed = 737373
    print(f"chi seed {seed}")
    rng = random.Random(seed)
    for _ in range(50):
        n = rng.randint(1, 4)
        e = random_expression(rng, n)
        assert hrr_chi(e) == cohomology_table(e).euler_characteristic()


# ---------------------------------------------------------------------------
# degeneracy loci


def _oracle_porteous_degree(E, G) -> tuple[int, Fraction]:
    """Permutation-expansion determinant of the Chern-difference matrix."""
    n = E.ambient
    cG = list(total_chern(G).coeffs)
    cE = list(total_chern(E).coeffs)
    # series inverse of cE by direct convolution
    inv = [Fraction(0)] * (n + 1)
    inv[0] = Fraction(1)
    for i in range(1, n + 1):
        inv[i] = -sum(cE[j] * inv[i - j] for j in range(1, i + 1))
    diff = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            diff[i + j] += cG[i] * inv[j]

    from pnsheaf import rank

    size = rank(E) - rank(G) + 1

    def entry(i, j):
        m = 1 + j - i
        return diff[m] if 0 <= m <= n else Fraction(0)

    det = Fraction(0)
    for perm in itertools.permutations(range(size)):
        sign = 1
        for a in range(size):
            for b in range(a + 1, size):
                if perm[a] > perm[b]:
                    sign = -sign
        term = Fraction(sign)
        for i in range(size):
            term *= entry(i, perm[i])
        det += term
    return size, det


def test_porteous_simplest_pencil():
    e = direct_sum(o(0, 2), o(0, 2))
    g = o(1, 2)
    res = porteous_class(e, g)
    assert res.codim == 2
    assert res.degree == 1
    assert res.within_ambient
    assert res.cls.coeffs == hyperplane_power(2, 2, 1).coeffs


def test_porteous_matches_permutation_oracle():
    fixtures = [
        (direct_sum(o(0, 2), o(0, 2)), o(1, 2)),
        (tangent(4), direct_sum(o(2, 4), o(2, 4), o(2, 4))),
        (tangent(5), direct_sum(*[o(2, 5)] * 4)),
        (direct_sum(*[o(1, 3)] * 3), o(3, 3)),
    ]
    for E, G in fixtures:
        res = porteous_class(E, G)
        size, det = _oracle_porteous_degree(E, G)
        assert res.codim == size
        assert Fraction(res.degree) == det


def test_porteous_frozen_geometry_fixtures():
    castelnuovo = porteous_class(tangent(4), direct_sum(*[o(2, 4)] * 3))
    assert castelnuovo.codim == 2
    assert castelnuovo.ambient - castelnuovo.codim == 2
    assert castelnuovo.degree == 4
    palatini = porteous_class(tangent(5), direct_sum(*[o(2, 5)] * 4))
    assert palatini.codim == 2
    assert palatini.ambient - palatini.codim == 3
    assert palatini.degree == 7


def test_porteous_excess_codimension_is_flagged():
    res = porteous_class(direct_sum(*[o(0, 2)] * 5), o(1, 2))
    assert res.codim == 5
    assert not res.within_ambient
    assert res.degree == 0
    assert res.cls.coeffs == (Fraction(0),) * 3


def test_porteous_rejects_rank_deficit():
    with pytest.raises(InputError):
        porteous_class(o(1, 3), direct_sum(o(0, 3), o(0, 3)))


# ---------------------------------------------------------------------------
# ring sanity


def test_chow_class_arithmetic_truncates():
    h = hyperplane_power(2, 1)
    assert (h * h).coeffs == _fr(0, 0, 1)
    assert (h * h * h).coeffs == _fr(0, 0, 0)
    assert str(chow_unit(2) + 2 * h) == "1 + 2*h"


def test_chow_class_requires_matching_ambient():
    with pytest.raises(InputError):
        hyperplane_power(2, 1) + hyperplane_power(3, 1)


def test_chow_class_length_validation():
    with pytest.raises(InputError):
        ChowClass(2, (Fraction(1), Fraction(1)))
