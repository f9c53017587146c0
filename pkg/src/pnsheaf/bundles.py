"""Homogeneous bundle expressions on P^n and their irreducible decompositions.

Every supported expression normalizes to a finite sum of summands
S_lam(Q) (x) O(d), where Q is the rank-n tautological quotient bundle,
lam is a weakly decreasing nonnegative weight of length n with last entry 0
(the determinant of Q is O(1) and gets absorbed into the twist), and d is an
integer.  The normal form is what the cohomology and Chow modules consume.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError, UnsupportedPlethysm
from .weights import Weight, lr_product, weyl_dim


# ---------------------------------------------------------------------------
# expression AST


@dataclass(frozen=True)
class BundleExpr:
    """Base node; ambient is the n of P^n and is shared by the whole tree."""

    ambient: int

    def __post_init__(self):
        if self.ambient < 1:
            raise InputError(f"ambient projective space P^{self.ambient} is not supported")


@dataclass(frozen=True)
class LineBundle(BundleExpr):
    degree: int


@dataclass(frozen=True)
class Tangent(BundleExpr):
    pass


@dataclass(frozen=True)
class Cotangent(BundleExpr):
    """The sheaf of p-forms, 1 <= p <= n."""

    power: int

    def __post_init__(self):
        BundleExpr.__post_init__(self)
        if not 1 <= self.power <= self.ambient:
            raise InputError(
                f"Omega^{self.power} is not a bundle on P^{self.ambient}; need 1 <= p <= n"
            )


@dataclass(frozen=True)
class Dual(BundleExpr):
    child: BundleExpr

    def __post_init__(self):
        BundleExpr.__post_init__(self)
        _check_same_ambient(self, self.child)


@dataclass(frozen=True)
class Tensor(BundleExpr):
    left: BundleExpr
    right: BundleExpr

    def __post_init__(self):
        BundleExpr.__post_init__(self)
        _check_same_ambient(self, self.left, self.right)


@dataclass(frozen=True)
class DirectSum(BundleExpr):
    children: tuple[BundleExpr, ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        BundleExpr.__post_init__(self)
        if not self.children:
            raise InputError("direct sum needs at least one child")
        if len(self.children) != len(self.multiplicities):
            raise InputError("direct sum children and multiplicities differ in length")
        if any(m < 1 for m in self.multiplicities):
            raise InputError("direct sum multiplicities must be positive")
        _check_same_ambient(self, *self.children)


@dataclass(frozen=True)
class Wedge(BundleExpr):
    power: int
    child: BundleExpr

    def __post_init__(self):
        BundleExpr.__post_init__(self)
        if self.power < 0:
            raise InputError("wedge power must be nonnegative")
        _check_same_ambient(self, self.child)


@dataclass(frozen=True)
class Sym(BundleExpr):
    power: int
    child: BundleExpr

    def __post_init__(self):
        BundleExpr.__post_init__(self)
        if self.power < 0:
            raise InputError("sym power must be nonnegative")
        _check_same_ambient(self, self.child)


def _check_same_ambient(parent: BundleExpr, *children: BundleExpr):
    for c in children:
        if c.ambient != parent.ambient:
            raise InputError(
                f"mixed ambients: P^{parent.ambient} vs P^{c.ambient} in one expression"
            )


# convenience constructors ---------------------------------------------------


def o(degree: int, n: int) -> LineBundle:
    return LineBundle(n, degree)


def tangent(n: int) -> Tangent:
    return Tangent(n)


def omega(p: int, n: int) -> BundleExpr:
    """Omega^p as an expression; p = 0 collapses to the trivial line bundle."""
    if p == 0:
        return LineBundle(n, 0)
    return Cotangent(n, p)


def dual(e: BundleExpr) -> Dual:
    return Dual(e.ambient, e)


def tensor(*exprs: BundleExpr) -> BundleExpr:
    if not exprs:
        raise InputError("tensor of nothing")
    out = exprs[0]
    for e in exprs[1:]:
        out = Tensor(out.ambient, out, e)
    return out


def direct_sum(*exprs: BundleExpr) -> BundleExpr:
    """Associative sum in the same flattened shape the parser produces."""
    if not exprs:
        raise InputError("direct sum of nothing")
    children: list[BundleExpr] = []
    mults: list[int] = []
    for e in exprs:
        if isinstance(e, DirectSum):
            children.extend(e.children)
            mults.extend(e.multiplicities)
        else:
            children.append(e)
            mults.append(1)
    if len(children) == 1 and mults[0] == 1:
        return children[0]
    return DirectSum(exprs[0].ambient, tuple(children), tuple(mults))


def wedge(k: int, e: BundleExpr) -> Wedge:
    return Wedge(e.ambient, k, e)


def sym(k: int, e: BundleExpr) -> Sym:
    return Sym(e.ambient, k, e)


def twist(e: BundleExpr, d: int) -> BundleExpr:
    return e if d == 0 else Tensor(e.ambient, e, LineBundle(e.ambient, d))


def split_bundle(degrees, n: int) -> BundleExpr:
    """Direct sum of line bundles with the given degrees."""
    degs = tuple(degrees)
    if not degs:
        raise InputError("split bundle needs at least one degree")
    return direct_sum(*[LineBundle(n, d) for d in degs])


# ---------------------------------------------------------------------------
# normal form


@dataclass(frozen=True)
class IrreducibleBundle:
    """S_lam(Q) (x) O(twist) with lam of length n, weakly decreasing, lam_n = 0."""

    ambient: int
    lam: tuple[int, ...]
    twist: int

    def __post_init__(self):
        if len(self.lam) != self.ambient:
            raise InputError(f"weight {self.lam} must have length {self.ambient}")
        for a, b in zip(self.lam, self.lam[1:]):
            if a < b:
                raise InputError(f"weight {self.lam} is not weakly decreasing")
        if self.lam and self.lam[-1] != 0:
            raise InputError(f"weight {self.lam} must be normalized to last entry 0")

    @property
    def rank(self) -> int:
        return weyl_dim(self.lam, self.ambient)

    def is_line_bundle(self) -> bool:
        return all(x == 0 for x in self.lam)

    def __str__(self):
        if self.is_line_bundle():
            return f"O({self.twist})"
        body = "S(" + ",".join(str(x) for x in self.lam) + ")Q"
        if self.twist == 0:
            return body
        return f"{body}({self.twist})"


@dataclass(frozen=True)
class Decomposition:
    """Multiset of irreducible summands; empty means the zero bundle."""

    ambient: int
    terms: tuple[tuple[IrreducibleBundle, int], ...]

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def rank(self) -> int:
        return sum(mult * b.rank for b, mult in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for b, mult in self.terms:
            bits.append(str(b) if mult == 1 else f"{mult}*{b}")
        return " + ".join(bits)


def _freeze(n: int, acc: dict[tuple[tuple[int, ...], int], int]) -> Decomposition:
    terms = []
    for (lam, d), mult in acc.items():
        if mult:
            terms.append((IrreducibleBundle(n, lam, d), mult))
    terms.sort(key=lambda t: (t[0].lam, t[0].twist), reverse=True)
    return Decomposition(n, tuple(terms))


def _canon_summand(lam: tuple[int, ...], d: int) -> tuple[tuple[int, ...], int]:
    """Push det Q powers into the twist so the last entry of lam is 0."""
    low = lam[-1]
    if low:
        lam = tuple(x - low for x in lam)
        d += low
    return lam, d


def _zero(n: int) -> Decomposition:
    return Decomposition(n, ())


def _unit(n: int) -> Decomposition:
    return _freeze(n, {((0,) * n, 0): 1})


def normalize(e: BundleExpr) -> Decomposition:
    """Decompose an expression into irreducible summands.

    Raises UnsupportedPlethysm when a wedge/sym is applied to a summand that
    is not a line bundle or a twisted copy of Q or its dual (the cases that
    cover split bundles, T and Omega^1).
    """
    return _normalize_cached(e)


@lru_cache(maxsize=None)
def _normalize_cached(e: BundleExpr) -> Decomposition:
    n = e.ambient
    if isinstance(e, LineBundle):
        return _freeze(n, {((0,) * n, e.degree): 1})
    if isinstance(e, Tangent):
        # Euler sequence: T = Q(1); on P^1 the weight itself collapses into the twist
        lam, d = _canon_summand((1,) + (0,) * (n - 1), 1)
        return _freeze(n, {(lam, d): 1})
    if isinstance(e, Cotangent):
        p = e.power
        lam, d = _canon_summand((1,) * (n - p) + (0,) * p, -p - 1)
        return _freeze(n, {(lam, d): 1})
    if isinstance(e, Dual):
        acc: dict = {}
        for b, mult in _normalize_cached(e.child).terms:
            lam, d = _dual_summand(b.lam, b.twist)
            key = _canon_summand(lam, d)
            acc[key] = acc.get(key, 0) + mult
        return _freeze(n, acc)
    if isinstance(e, DirectSum):
        acc = {}
        for child, cmult in zip(e.children, e.multiplicities):
            for b, mult in _normalize_cached(child).terms:
                key = (b.lam, b.twist)
                acc[key] = acc.get(key, 0) + cmult * mult
        return _freeze(n, acc)
    if isinstance(e, Tensor):
        return tensor_decompositions(_normalize_cached(e.left), _normalize_cached(e.right))
    if isinstance(e, (Wedge, Sym)):
        child = _normalize_cached(e.child)
        single = _wedge_single if isinstance(e, Wedge) else _sym_single
        return _graded_power(child, e.power, single)
    raise InputError(f"unknown expression node {type(e).__name__}")


def _dual_summand(lam: tuple[int, ...], d: int) -> tuple[tuple[int, ...], int]:
    """Dual of S_lam(Q) (x) O(d): reverse-complement lam, using det Q = O(1)."""
    top = lam[0] if lam else 0
    rev = tuple(top - x for x in reversed(lam))
    return rev, -d - top


def tensor_decompositions(a: Decomposition, b: Decomposition) -> Decomposition:
    if a.ambient != b.ambient:
        raise InputError("tensor of decompositions over different ambients")
    n = a.ambient
    acc: dict = {}
    for x, mx in a.terms:
        for y, my in b.terms:
            expansion = lr_product(Weight(x.lam), Weight(y.lam))
            for nu, c in expansion.terms:
                key = _canon_summand(nu.entries, x.twist + y.twist)
                acc[key] = acc.get(key, 0) + mx * my * c
    return _freeze(n, acc)


# wedge/sym of a single irreducible summand ----------------------------------
#
# Supported summand shapes (lam up to the det-twist normalization):
#   * (0,...,0)        -- line bundles
#   * (1,0,...,0)      -- twists of Q (covers T)
#   * (1,...,1,0)      -- twists of Q* (covers Omega^1)
# Everything else would be a genuine plethysm and is out of scope.


def _wedge_single(b: IrreducibleBundle, j: int) -> Decomposition:
    n = b.ambient
    if j == 0:
        return _unit(n)
    if j == 1:
        return _freeze(n, {(b.lam, b.twist): 1})
    if b.is_line_bundle():
        return _zero(n)
    if b.lam == (1,) + (0,) * (n - 1):
        if j > n:
            return _zero(n)
        key = _canon_summand((1,) * j + (0,) * (n - j), j * b.twist)
        return _freeze(n, {key: 1})
    if b.lam == (1,) * (n - 1) + (0,):
        # S_lam(Q) = Q*(1), so wedge powers dualize the standard ones
        if j > n:
            return _zero(n)
        key = _canon_summand((1,) * (n - j) + (0,) * j, j * b.twist + j - 1)
        return _freeze(n, {key: 1})
    raise UnsupportedPlethysm(f"wedge({j}, {b}) is outside the supported summand classes")


def _sym_single(b: IrreducibleBundle, j: int) -> Decomposition:
    n = b.ambient
    if j == 0:
        return _unit(n)
    if j == 1:
        return _freeze(n, {(b.lam, b.twist): 1})
    if b.is_line_bundle():
        return _freeze(n, {((0,) * n, j * b.twist): 1})
    if b.lam == (1,) + (0,) * (n - 1):
        key = _canon_summand((j,) + (0,) * (n - 1), j * b.twist)
        return _freeze(n, {key: 1})
    if b.lam == (1,) * (n - 1) + (0,):
        # Sym^j(Q*(c)) = (Sym^j Q)*(jc), and the dual reverses the weight
        key = _canon_summand((j,) * (n - 1) + (0,), j * b.twist)
        return _freeze(n, {key: 1})
    raise UnsupportedPlethysm(f"sym({j}, {b}) is outside the supported summand classes")


def _graded_power(dec: Decomposition, k: int, single) -> Decomposition:
    """wedge^k or sym^k of a decomposition via the binomial expansion.

    wedge^k(A + B) = sum_{i+j=k} wedge^i A (x) wedge^j B, and likewise for
    sym; blocks of m identical summands recurse the same way.
    """
    n = dec.ambient
    if k == 0:
        return _unit(n)
    if dec.is_zero():
        return _zero(n)
    items = list(dec.terms)

    block_cache: dict = {}

    def block(idx: int, m: int, j: int) -> Decomposition:
        """Power of degree j of m copies of items[idx][0]."""
        if j == 0:
            return _unit(n)
        if m == 0:
            return _zero(n)
        key = (idx, m, j)
        hit = block_cache.get(key)
        if hit is not None:
            return hit
        summand = items[idx][0]
        acc: dict = {}
        for a in range(j + 1):
            first = single(summand, a)
            if first.is_zero():
                continue
            rest = block(idx, m - 1, j - a)
            if rest.is_zero():
                continue
            piece = tensor_decompositions(first, rest)
            for b, mult in piece.terms:
                key2 = (b.lam, b.twist)
                acc[key2] = acc.get(key2, 0) + mult
        out = _freeze(n, acc)
        block_cache[key] = out
        return out

    tail_cache: dict = {}

    def go(idx: int, j: int) -> Decomposition:
        if j == 0:
            return _unit(n)
        if idx == len(items):
            return _zero(n)
        key = (idx, j)
        hit = tail_cache.get(key)
        if hit is not None:
            return hit
        _, m = items[idx]
        acc: dict = {}
        for a in range(j + 1):
            first = block(idx, m, a)
            if first.is_zero():
                continue
            rest = go(idx + 1, j - a)
            if rest.is_zero():
                continue
            piece = tensor_decompositions(first, rest)
            for b, mult in piece.terms:
                key2 = (b.lam, b.twist)
                acc[key2] = acc.get(key2, 0) + mult
        out = _freeze(n, acc)
        tail_cache[key] = out
        return out

    return go(0, k)


# ---------------------------------------------------------------------------
# rank and determinant


def rank(e: BundleExpr) -> int:
    return normalize(e).rank


def det_bundle(e: BundleExpr) -> IrreducibleBundle:
    """Top exterior power as a line bundle O(d).

    Each summand S_lam(Q) (x) O(t) of rank r contributes |lam| * r / n + r * t
    to d (det Q = O(1), and the weight multiset of S_lam spreads |lam| * r
    evenly over the n coordinates).
    """
    dec = normalize(e)
    n = dec.ambient
    total = 0
    for b, mult in dec.terms:
        r = b.rank
        boxes = sum(b.lam)
        if (boxes * r) % n:
            raise InputError(f"determinant exponent of {b} is not integral")
        total += mult * ((boxes * r) // n + r * b.twist)
    return IrreducibleBundle(n, (0,) * n, total)
