"""Exact polynomial arithmetic for the Hermite and pseudo-Hermite families.

Coefficients are arbitrary-precision integers (ascending degree) with an
optional overall rational scale, so recurrences, derivatives and Sturm
chains are exact at any degree.  Pseudo-Hermite polynomials use the
canonical real convention with leading coefficient +2^m; all physical
formulas downstream consume only the ratios p'/p and p''/p, which are
invariant under that rescaling.

Everything here is immutable and side-effect free, hence safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

__all__ = [
    "Polynomial",
    "hermite",
    "pseudo_hermite",
    "derivative",
    "eval_poly",
    "count_real_roots",
    "certify_nodeless",
]


def _strip(coeffs):
    """Drop high-order zeros so the top stored coefficient is nonzero."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    """Integer-coefficient polynomial times an optional rational scale.

    ``coeffs[k]`` is the integer coefficient of x**k; the represented
    polynomial is ``scale * sum(coeffs[k] * x**k)``.  The zero polynomial
    is the empty coefficient tuple.
    """

    coeffs: tuple = ()
    scale: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        scale = Fraction(self.scale)
        coeffs = _strip(int(c) for c in self.coeffs)
        if scale == 0:
            coeffs, scale = (), Fraction(1)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "scale", scale)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        """Leading coefficient including the scale, as a Fraction."""
        if self.is_zero:
            return Fraction(0)
        return self.scale * self.coeffs[-1]

    def exact_coeffs(self):
        """All coefficients with the scale applied, as Fractions."""
        return tuple(self.scale * c for c in self.coeffs)

    def primitive(self):
        """Content-stripped integer polynomial with the same sign, scale 1.

        Dividing by the (positive) content preserves the sign pattern,
        which is all a Sturm chain consumes.
        """
        if self.is_zero:
            return Polynomial()
        content = 0
        for c in self.coeffs:
            content = gcd(content, abs(c))
        return Polynomial(tuple(c // content for c in self.coeffs))

    # -- ring operations ----------------------------------------------------

    def _common_scale(self, other):
        a, b = self.scale, other.scale
        num = gcd(a.numerator, b.numerator)
        den = (a.denominator * b.denominator) // gcd(a.denominator, b.denominator)
        return Fraction(num, den)

    def __add__(self, other):
        other = _as_poly(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        s = self._common_scale(other)
        fa = self.scale / s
        fb = other.scale / s
        n = max(len(self.coeffs), len(other.coeffs))
        ca = list(self.coeffs) + [0] * (n - len(self.coeffs))
        cb = list(other.coeffs) + [0] * (n - len(other.coeffs))
        coeffs = [int(fa) * x + int(fb) * y for x, y in zip(ca, cb)]
        return Polynomial(coeffs, s)

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs), self.scale)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(tuple(other * c for c in self.coeffs), self.scale)
        if isinstance(other, Fraction):
            if other == 0:
                return Polynomial()
            return Polynomial(self.coeffs, self.scale * other)
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out, self.scale * other.scale)

    __rmul__ = __mul__

    def shift_mul_x(self):
        """Multiply by x (degree raise used by the recurrences)."""
        if self.is_zero:
            return self
        return Polynomial((0,) + self.coeffs, self.scale)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            try:
                other = _as_poly(other)
            except TypeError:
                return NotImplemented
        return self.exact_coeffs() == other.exact_coeffs()

    def __hash__(self):
        return hash(self.exact_coeffs())

    def __call__(self, x):
        return eval_poly(self, x)

    def __repr__(self):
        if self.is_zero:
            return "Polynomial(0)"
        terms = []
        for k in reversed(range(len(self.coeffs))):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        body = " + ".join(terms).replace("+ -", "- ")
        if self.scale != 1:
            return f"Polynomial(({body}) * {self.scale})"
        return f"Polynomial({body})"


def _as_poly(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        if value == 0:
            return Polynomial()
        return Polynomial((1,), Fraction(value))
    raise TypeError(f"cannot coerce {type(value).__name__} to Polynomial")


def hermite(n):
    """Physicists' Hermite polynomial H_n with exact integer coefficients.

    Three-term recurrence H_{n+1} = 2x H_n - 2n H_{n-1}, H_0 = 1, H_1 = 2x.
    """
    if n < 0:
        raise ValueError("Hermite index must be nonnegative")
    prev = Polynomial((1,))
    if n == 0:
        return prev
    cur = Polynomial((0, 2))
    for k in range(1, n):
        prev, cur = cur, 2 * cur.shift_mul_x() - (2 * k) * prev
    return cur


def pseudo_hermite(m):
    """Canonical real pseudo-Hermite polynomial of degree m.

    Equals (-i)^m H_m(i x): real for every m, leading coefficient +2^m,
    recurrence P_{m+1} = 2x P_m + 2m P_{m-1}.  Nodeless on the real line
    exactly when m is even (odd ones vanish at the origin).
    """
    if m < 0:
        raise ValueError("pseudo-Hermite index must be nonnegative")
    prev = Polynomial((1,))
    if m == 0:
        return prev
    cur = Polynomial((0, 2))
    for k in range(1, m):
        prev, cur = cur, 2 * cur.shift_mul_x() + (2 * k) * prev
    return cur


def derivative(p):
    """Exact formal derivative."""
    if p.degree <= 0:
        return Polynomial()
    coeffs = tuple(k * p.coeffs[k] for k in range(1, len(p.coeffs)))
    return Polynomial(coeffs, p.scale)


def eval_poly(p, x):
    """Horner evaluation; coefficients go to float only at this point.

    Accepts scalars or numpy arrays.
    """
    if p.is_zero:
        return np.zeros_like(np.asarray(x, dtype=float)) if np.ndim(x) else 0.0
    acc = np.zeros_like(np.asarray(x, dtype=float)) if np.ndim(x) else 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + float(c)
    out = acc * float(p.scale)
    return out if np.ndim(x) else float(out)


def _poly_mod(a, b):
    """Remainder of a by b over the rationals, returned content-stripped.

    Only positive factors are divided out at each step, so the sign
    semantics of the Sturm chain survive.
    """
    ra = [Fraction(c) for c in a.coeffs]
    rb = b.coeffs
    db = len(rb) - 1
    lead_b = Fraction(rb[-1])
    while len(ra) - 1 >= db and any(ra):
        while ra and ra[-1] == 0:
            ra.pop()
        if len(ra) - 1 < db:
            break
        factor = ra[-1] / lead_b
        shift = len(ra) - 1 - db
        for i, c in enumerate(rb):
            ra[shift + i] -= factor * c
        ra.pop()
    while ra and ra[-1] == 0:
        ra.pop()
    if not ra:
        return Polynomial()
    den_lcm = 1
    for c in ra:
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in ra]
    return Polynomial(ints).primitive()


def _sturm_chain(p):
    chain = [p.primitive()]
    d = derivative(p).primitive()
    if not d.is_zero:
        chain.append(d)
        while True:
            r = _poly_mod(chain[-2], chain[-1])
            if r.is_zero:
                break
            chain.append(-r)
    return chain


def _sign_variations(signs):
    var = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            var += 1
        prev = s
    return var


def count_real_roots(p):
    """Number of distinct real roots, by exact Sturm count over (-inf, inf)."""
    if p.is_zero:
        raise ValueError("zero polynomial has no Sturm chain")
    if p.degree == 0:
        return 0
    chain = _sturm_chain(p)
    # Non-trivial terminal gcd means repeated roots; distinct-root count of
    # p equals that of the squarefree part, so recurse on it.
    if chain[-1].degree > 0 and len(chain) >= 2:
        square_free = _poly_quot_exact(p.primitive(), chain[-1])
        if square_free is not None and square_free.degree < p.degree:
            return count_real_roots(square_free)
    at_minus = []
    at_plus = []
    for q in chain:
        lead = 1 if q.coeffs[-1] > 0 else -1
        at_plus.append(lead)
        at_minus.append(lead if q.degree % 2 == 0 else -lead)
    return _sign_variations(at_minus) - _sign_variations(at_plus)


def _poly_quot_exact(a, b):
    """a / b over the rationals if the division is exact, else None."""
    ra = [Fraction(c) for c in a.coeffs]
    rb = b.coeffs
    db = len(rb) - 1
    lead_b = Fraction(rb[-1])
    quot = [Fraction(0)] * (len(ra) - db)
    while len(ra) - 1 >= db and any(ra):
        while ra and ra[-1] == 0:
            ra.pop()
        if len(ra) - 1 < db:
            break
        factor = ra[-1] / lead_b
        shift = len(ra) - 1 - db
        quot[shift] = factor
        for i, c in enumerate(rb):
            ra[shift + i] -= factor * c
        ra.pop()
    if any(ra):
        return None
    den_lcm = 1
    for c in quot:
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    return Polynomial([int(c * den_lcm) for c in quot], Fraction(1, den_lcm))


def certify_nodeless(p):
    """True iff p has no real root, decided exactly.

    Uses a Sturm-sequence count in integer/rational arithmetic; float
    coefficients would corrupt the chain well before degree 15.
    """
    return count_real_roots(p) == 0
