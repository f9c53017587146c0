"""Exact-rational multivariate polynomials, Buchberger, and chart membership.

Monomial order is degree-reverse-lexicographic with x0 > x1 > ... > x_n.
Saturation-related questions are handled chart by chart: a homogeneous ideal
is presented through the reduced Groebner bases of its dehomogenizations on
every affine chart x_i = 1, and membership means reduction to zero on each
chart.  A deliberate desk-scale guard refuses more than 4 variables per
chart or generators of degree above 8.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import gcd

from .errors import InputError, ParseError, ScaleExceeded

MAX_CHART_VARS = 4
MAX_GENERATOR_DEGREE = 8


def monomial_key(expo: tuple[int, ...]):
    """Sort key: larger key = larger monomial in degrevlex."""
    return (sum(expo), tuple(-e for e in reversed(expo)))


def monomial_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(b: tuple[int, ...], a: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(y - x for x, y in zip(a, b))


def monomial_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def monomial_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(nvars: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree d, largest first in degrevlex."""
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        expo = [0] * nvars
        for v in combo:
            expo[v] += 1
        out.append(tuple(expo))
    out.sort(key=monomial_key, reverse=True)
    return out


class Poly:
    """Immutable multivariate polynomial over Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Fraction] = {}
        for expo, c in (terms or {}).items():
            c = Fraction(c)
            if not c:
                continue
            expo = tuple(int(x) for x in expo)
            if len(expo) != nvars or any(x < 0 for x in expo):
                raise InputError(f"bad exponent vector {expo} for {nvars} variables")
            clean[expo] = clean.get(expo, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # construction helpers ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(1)})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Poly":
        expo = [0] * nvars
        expo[i] = 1
        return cls(nvars, {tuple(expo): Fraction(1)})

    @classmethod
    def constant(cls, c, nvars: int) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    # ring operations --------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def __add__(self, other: "Poly") -> "Poly":
        self._match(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Poly(self.nvars, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._match(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) - c
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._match(other)
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = monomial_mul(e1, e2)
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return Poly(self.nvars, out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def term_times(self, expo: tuple[int, ...], c) -> "Poly":
        c = Fraction(c)
        return Poly(self.nvars, {monomial_mul(e, expo): c * v for e, v in self.terms.items()})

    def _match(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise InputError("polynomials over different variable counts")

    # structure --------------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def leading_monomial(self) -> tuple[int, ...]:
        if not self.terms:
            raise InputError("zero polynomial has no leading monomial")
        return max(self.terms, key=monomial_key)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def diff(self, i: int) -> "Poly":
        out: dict = {}
        for e, c in self.terms.items():
            if e[i]:
                key = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[key] = out.get(key, Fraction(0)) + c * e[i]
        return Poly(self.nvars, out)

    def dehomogenize(self, i: int) -> "Poly":
        """Set x_i = 1 and drop the variable."""
        out: dict = {}
        for e, c in self.terms.items():
            key = e[:i] + e[i + 1:]
            out[key] = out.get(key, Fraction(0)) + c
        return Poly(self.nvars - 1, out)

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    def primitive(self) -> "Poly":
        """Clear denominators and divide by the content; leading coeff > 0."""
        if not self.terms:
            return self
        den_lcm = 1
        for c in self.terms.values():
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        nums = [c.numerator * (den_lcm // c.denominator) for c in self.terms.values()]
        g = 0
        for v in nums:
            g = gcd(g, abs(v))
        scalar = Fraction(den_lcm, g)
        out = self.scale(scalar)
        if out.leading_coefficient() < 0:
            out = -out
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for expo in sorted(self.terms, key=monomial_key, reverse=True):
            c = self.terms[expo]
            factors = []
            for i, e in enumerate(expo):
                if e == 1:
                    factors.append(f"x{i}")
                elif e > 1:
                    factors.append(f"x{i}^{e}")
            body = "*".join(factors)
            if not body:
                piece = str(abs(c))
            elif abs(c) == 1:
                piece = body
            else:
                piece = f"{abs(c)}*{body}"
            sign = "-" if c < 0 else "+"
            bits.append((sign, piece))
        first_sign, first_piece = bits[0]
        text = ("-" if first_sign == "-" else "") + first_piece
        for sign, piece in bits[1:]:
            text += f" {sign} {piece}"
        return text

    __repr__ = __str__


# ---------------------------------------------------------------------------
# parsing


_TOKEN_RE = re.compile(r"\s*(?:(\d+/\d+|\d+)|x(\d+)|(\^)|(\*)|(\+)|(-))")


def parse_poly(text: str, nvars: int) -> Poly:
    """Parse sums of terms like 3/2*x0^2*x1 - x2 + 5."""
    pos = 0
    terms: dict = {}
    length = len(text)

    def skip_ws(p):
        while p < length and text[p].isspace():
            p += 1
        return p

    pos = skip_ws(pos)
    if pos == length:
        raise ParseError("empty polynomial", pos, ("term",))
    first = True
    while pos < length:
        sign = 1
        pos = skip_ws(pos)
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip_ws(pos + 1)
        elif not first:
            raise ParseError("missing term separator", pos, ("+", "-"))
        first = False
        coeff = Fraction(1)
        expo = [0] * nvars
        saw_factor = False
        expect_factor = True
        while True:
            m = _TOKEN_RE.match(text, pos)
            if not m or not expect_factor:
                break
            number, var, caret, star, plus, minus = m.groups()
            if plus or minus or caret:
                break
            if number is not None:
                coeff *= Fraction(number)
                saw_factor = True
                pos = m.end()
            elif var is not None:
                idx = int(var)
                if idx >= nvars:
                    raise ParseError(f"variable x{idx} out of range (have x0..x{nvars - 1})", pos)
                pos = m.end()
                m2 = _TOKEN_RE.match(text, pos)
                power = 1
                if m2 and m2.group(3):  # caret
                    pos = m2.end()
                    m3 = _TOKEN_RE.match(text, pos)
                    if not m3 or m3.group(1) is None or "/" in m3.group(1):
                        raise ParseError("expected integer exponent", pos, ("integer",))
                    power = int(m3.group(1))
                    pos = m3.end()
                expo[idx] += power
                saw_factor = True
            elif star:
                raise ParseError("unexpected '*'", pos, ("coefficient", "variable"))
            # after a factor, an optional * continues the term
            m4 = _TOKEN_RE.match(text, pos)
            if m4 and m4.group(4):  # star
                pos = m4.end()
                expect_factor = True
            else:
                expect_factor = False
        if not saw_factor:
            raise ParseError("expected a term", pos, ("coefficient", "variable"))
        key = tuple(expo)
        terms[key] = terms.get(key, Fraction(0)) + sign * coeff
        pos = skip_ws(pos)
    return Poly(nvars, terms)


# ---------------------------------------------------------------------------
# division and Buchberger


def normal_form(f: Poly, basis) -> Poly:
    """Remainder of f under multivariate division by an ordered basis."""
    basis = [g for g in basis if g]
    remainder = Poly.zero(f.nvars)
    p = f
    lms = [(g.leading_monomial(), g.leading_coefficient(), g) for g in basis]
    while p:
        lm = p.leading_monomial()
        lc = p.terms[lm]
        for glm, glc, g in lms:
            if monomial_divides(glm, lm):
                p = p - g.term_times(monomial_div(lm, glm), lc / glc)
                break
        else:
            remainder = remainder + Poly(p.nvars, {lm: lc})
            p = p - Poly(p.nvars, {lm: lc})
    return remainder


def s_polynomial(f: Poly, g: Poly) -> Poly:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = monomial_lcm(lf, lg)
    left = f.term_times(monomial_div(lcm, lf), 1 / f.leading_coefficient())
    right = g.term_times(monomial_div(lcm, lg), 1 / g.leading_coefficient())
    return left - right


def _guard(polys, nvars: int):
    if nvars > MAX_CHART_VARS:
        raise ScaleExceeded(
            f"{nvars} variables exceeds the supported chart size of {MAX_CHART_VARS}"
        )
    for p in polys:
        if p.degree() > MAX_GENERATOR_DEGREE:
            raise ScaleExceeded(
                f"generator of degree {p.degree()} exceeds the bound {MAX_GENERATOR_DEGREE}"
            )


def buchberger(gens) -> tuple[Poly, ...]:
    """Reduced Groebner basis (monic, mutually reduced, deterministic order).

    The zero ideal returns the empty basis.  Intermediate polynomials are
    kept primitive (integer coefficients with unit content) so coefficient
    growth stays in check.
    """
    gens = [g for g in gens if g]
    if not gens:
        return ()
    nvars = gens[0].nvars
    _guard(gens, nvars)
    basis = [g.primitive() for g in gens]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop(0)
        f, g = basis[i], basis[j]
        lf, lg = f.leading_monomial(), g.leading_monomial()
        if monomial_lcm(lf, lg) == monomial_mul(lf, lg):
            continue  # coprime leading monomials reduce to zero
        rem = normal_form(s_polynomial(f, g), basis)
        if rem:
            rem = rem.primitive()
            basis.append(rem)
            pairs.extend((t, len(basis) - 1) for t in range(len(basis) - 1))
    return _reduce_basis(basis)


def _reduce_basis(basis) -> tuple[Poly, ...]:
    # minimal: drop members whose leading monomial another one divides
    basis = [g for g in basis if g]
    basis.sort(key=lambda g: monomial_key(g.leading_monomial()))
    minimal = []
    lms = [g.leading_monomial() for g in basis]
    for idx, g in enumerate(basis):
        lm = lms[idx]
        keep = True
        for jdx, other in enumerate(basis):
            if jdx == idx:
                continue
            lo = lms[jdx]
            if monomial_divides(lo, lm) and (lo != lm or jdx < idx):
                keep = False
                break
        if keep:
            minimal.append(g)
    # fully reduce each member against the rest, to a fixpoint
    changed = True
    current = [g.monic() for g in minimal]
    while changed:
        changed = False
        for idx in range(len(current)):
            others = current[:idx] + current[idx + 1:]
            red = normal_form(current[idx], others) if others else current[idx]
            red = red.monic()
            if red != current[idx]:
                current[idx] = red
                changed = True
        current = [g for g in current if g]
    current.sort(key=lambda g: monomial_key(g.leading_monomial()), reverse=True)
    return tuple(current)


# ---------------------------------------------------------------------------
# homogeneous ideals via charts


@dataclass(frozen=True)
class IdealPresentation:
    """Homogeneous generators plus reduced chart bases (x_i = 1 for each i)."""

    nvars: int  # number of homogeneous coordinates, n + 1
    generators: tuple[Poly, ...]
    charts: tuple[tuple[Poly, ...], ...]

    @property
    def ambient(self) -> int:
        return self.nvars - 1


def ideal_presentation(gens) -> IdealPresentation:
    gens = [g for g in gens if g]
    if not gens:
        raise InputError("need at least one nonzero homogeneous generator")
    nvars = gens[0].nvars
    for g in gens:
        if g.nvars != nvars:
            raise InputError("generators over different variable counts")
        if not g.is_homogeneous():
            raise InputError(f"generator {g} is not homogeneous")
        if g.degree() > MAX_GENERATOR_DEGREE:
            raise ScaleExceeded(
                f"generator of degree {g.degree()} exceeds the bound {MAX_GENERATOR_DEGREE}"
            )
    charts = []
    for i in range(nvars):
        dehoms = [g.dehomogenize(i) for g in gens]
        charts.append(buchberger(dehoms))
    return IdealPresentation(nvars, tuple(gens), tuple(charts))


def unit_ideal(nvars: int) -> IdealPresentation:
    one = Poly.one(nvars)
    return IdealPresentation(
        nvars, (one,), tuple((Poly.one(nvars - 1),) for _ in range(nvars))
    )


def membership_on_charts(f: Poly, ideal: IdealPresentation) -> bool:
    """True when f reduces to zero on every chart; this tests membership in
    the saturation of the generated ideal, which is the right notion for
    subschemes of projective space."""
    if f.nvars != ideal.nvars:
        raise InputError("polynomial and ideal over different variable counts")
    if not f.is_homogeneous():
        raise InputError(f"membership test needs a homogeneous polynomial, got {f}")
    for i in range(ideal.nvars):
        if normal_form(f.dehomogenize(i), ideal.charts[i]):
            return False
    return True


def staircase_dimension(basis, nvars: int) -> int:
    """Krull dimension of the chart quotient from the leading-term staircase.

    -1 for the unit ideal (empty chart), nvars for the zero ideal.  A subset
    S of variables is independent when no leading monomial is supported
    entirely inside S; the dimension is the largest independent size.
    """
    basis = [g for g in basis if g]
    if not basis:
        return nvars
    lms = [g.leading_monomial() for g in basis]
    if any(sum(lm) == 0 for lm in lms):
        return -1
    supports = [frozenset(i for i, e in enumerate(lm) if e) for lm in lms]
    for size in range(nvars, 0, -1):
        for subset in combinations(range(nvars), size):
            sset = set(subset)
            if all(not (sup <= sset) for sup in supports):
                return size
    return 0


def projective_dimension(ideal: IdealPresentation) -> int:
    """Dimension of the projective subscheme: the max over chart dimensions,
    -1 when every chart is empty."""
    return max(staircase_dimension(basis, ideal.nvars - 1) for basis in ideal.charts)
