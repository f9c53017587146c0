"""Shared test utilities: seeded random generation of supported expressions."""

from __future__ import annotations

import random

from pnsheaf import (
    BundleExpr,
    direct_sum,
    dual,
    o,
    omega,
    split_bundle,
    sym,
    tangent,
    tensor,
    twist,
    wedge,
)


def random_expression(rng: random.Random, n: int, depth: int = 3) -> BundleExpr:
    """A random expression that is guaranteed to normalize.

    Wedge and sym are only applied to split bundles or to (possibly twisted)
    copies of T and Omega^1, which keeps every sample inside the supported
    plethysm classes while still exercising dual, tensor, sums, twists, and
    zero bundles (a wedge power may exceed the rank).
    """
    if depth <= 0:
        return _atom(rng, n)
    kind = rng.choice(("atom", "dual", "tensor", "sum", "twist", "wedge", "sym"))
    if kind == "atom":
        return _atom(rng, n)
    if kind == "dual":
        return dual(random_expression(rng, n, depth - 1))
    if kind == "tensor":
        return tensor(
            random_expression(rng, n, depth - 1), random_expression(rng, n, depth - 1)
        )
    if kind == "sum":
        return direct_sum(
            random_expression(rng, n, depth - 1), random_expression(rng, n, depth - 1)
        )
    if kind == "twist":
        return twist(random_expression(rng, n, depth - 1), rng.randint(-4, 4))
    k = rng.randint(0, 3)
    body = _power_base(rng, n)
    return wedge(k, body) if kind == "wedge" else sym(k, body)


def _atom(rng: random.Random, n: int) -> BundleExpr:
    kind = rng.choice(("line", "line", "tangent", "cotangent"))
    if kind == "line":
        return o(rng.randint(-4, 4), n)
    if kind == "tangent":
        return tangent(n)
    return omega(rng.randint(1, n), n)


def _power_base(rng: random.Random, n: int) -> BundleExpr:
    kind = rng.choice(("split", "tangent", "omega1", "twisted"))
    if kind == "split":
        width = rng.randint(1, 3)
        return split_bundle([rng.randint(-3, 3) for _ in range(width)], n)
    if kind == "tangent":
        return tangent(n)
    if kind == "omega1":
        return omega(1, n)
    base = tangent(n) if rng.random() < 0.5 else omega(1, n)
    return twist(base, rng.randint(-3, 3))
