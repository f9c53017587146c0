"""Eagon-Northcott terms, vanishing certificates, and the Euler chase."""

from __future__ import annotations

import pytest

from pnsheaf import (
    InputError,
    cohomology_table,
    direct_sum,
    en_resolution,
    euler_les_chase,
    o,
    omega,
    rank,
    tangent,
    vanishing_certificate,
)


def _split(n: int, *degrees: int):
    return direct_sum(*[o(d, n) for d in degrees])


# ---------------------------------------------------------------------------
# resolution terms


def test_term_count_is_rank_difference_plus_one():
    fixtures = [
        (omega(1, 3), _split(3, 1, 1)),
        (tangent(3), o(5, 3)),
        (_split(2, 1, 1, 2, 2), _split(2, 0, 0)),
    ]
    for E, G in fixtures:
        rep = en_resolution(E, G)
        assert len(rep.terms) == rep.e - rep.g + 1
        assert rep.e == rank(E) and rep.g == rank(G)


def test_equal_ranks_give_single_term():
    rep = en_resolution(_split(2, 1, 2), _split(2, 0, 0))
    assert len(rep.terms) == 1


def test_frozen_ranks_untwisted():
    rep = en_resolution(omega(1, 3), _split(3, 1, 1))
    assert [rank(t) for t in rep.terms] == [3, 2]


def test_frozen_ranks_twisted():
    rep = en_resolution(omega(1, 3), _split(3, 1, 1), twisted=True)
    assert [rank(t) for t in rep.terms] == [9, 6]


def test_untwisted_terms_differ_from_twisted_by_determinant():
    untwisted = en_resolution(omega(1, 3), _split(3, 1, 1))
    twisted = en_resolution(omega(1, 3), _split(3, 1, 1), twisted=True)
    assert untwisted.twisted is False and twisted.twisted is True
    assert len(untwisted.terms) == len(twisted.terms)


def test_resolution_rejects_rank_deficit():
    with pytest.raises(InputError):
        en_resolution(o(1, 3), _split(3, 0, 0))


def test_resolution_rejects_mixed_ambient():
    with pytest.raises(InputError):
        en_resolution(omega(1, 3), o(1, 2))


# ---------------------------------------------------------------------------
# certificates


def test_certificate_positive_case():
    cert = vanishing_certificate(omega(1, 3), _split(3, 1, 1))
    assert cert.verdict is True
    assert len(cert.required) == cert.e - cert.g == 1
    assert all(r.ok for r in cert.required)
    assert any("H^1(F_2) = 0" in line for line in cert.chain_trace)
    assert cert.endomorphism_dim == 1


def test_certificate_negative_case():
    cert = vanishing_certificate(omega(1, 3), _split(3, 0, -1))
    assert cert.verdict is False
    failing = [(r.i, max(p for p, d in enumerate(r.table.dims) if d)) for r in cert.required if not r.ok]
    assert failing  # at least one required group is nonzero
    assert any("hypothesis not satisfied" in line for line in cert.chain_trace)


def test_certificate_vacuous_when_ranks_match():
    cert = vanishing_certificate(_split(2, 1, 2), _split(2, 0, 0))
    assert cert.verdict is True
    assert cert.required == ()
    assert any("nothing to chase" in line for line in cert.chain_trace)


def test_certificate_two_step_descending_induction():
    cert = vanishing_certificate(tangent(3), o(5, 3))
    assert cert.e - cert.g == 2
    assert cert.verdict is True
    assert any("descending induction" in line for line in cert.chain_trace)


def test_certificate_required_tables_are_reproducible():
    cert = vanishing_certificate(omega(1, 3), _split(3, 1, 1))
    for r in cert.required:
        assert r.table.dims == cohomology_table(r.expr).dims
        assert r.ok == (r.table.h(r.i) == 0)


def test_certificate_rejects_rank_deficit():
    with pytest.raises(InputError):
        vanishing_certificate(o(1, 3), _split(3, 0, 0))


def test_certificate_json_schema_keys():
    cert = vanishing_certificate(omega(1, 3), _split(3, 1, 1))
    d = cert.to_json_dict()
    assert set(d) == {"e", "g", "n", "required", "assumptions", "verdict"}
    assert d["assumptions"] == ["purity"]
    assert d["verdict"] is True
    for entry in d["required"]:
        assert set(entry) == {"i", "expr", "h", "ok"}
        assert isinstance(entry["expr"], str)
        assert len(entry["h"]) == d["n"] + 1


# ---------------------------------------------------------------------------
# Euler sequence chase


def test_chase_snake_base_case():
    assert euler_les_chase(0, 1) == [(0, 1)]
    assert euler_les_chase(0, 4) == [(0, 1)]


def test_chase_steps_through_every_degree():
    assert euler_les_chase(1, 2) == [(0, 1), (1, 1)]
    assert euler_les_chase(3, 5) == [(0, 1), (1, 1), (2, 1), (3, 1)]


def test_chase_all_dimensions_are_one():
    for n in range(1, 5):
        for k in range(n + 1):
            steps = euler_les_chase(k, n)
            assert len(steps) == k + 1
            assert all(dim == 1 for _, dim in steps)
            assert [i for i, _ in steps] == list(range(k + 1))


def test_chase_rejects_bad_power():
    with pytest.raises(InputError):
        euler_les_chase(5, 3)
    with pytest.raises(InputError):
        euler_les_chase(-1, 3)
