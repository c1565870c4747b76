"""Univariate polynomials with exact rational coefficients.

Coefficients are stored in ascending order of degree as ``Fraction`` values,
so equality of two polynomials is a plain tuple comparison.  Real-root
isolation uses Sturm sequences and exact bisection, which stays reliable for
the clustered and repeated eigenvalues that graph spectra are full of.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _normalize(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class QPoly:
    """Polynomial ``sum(coeffs[k] * x**k)``; the zero polynomial has no coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @classmethod
    def from_descending(cls, coeffs: Sequence) -> "QPoly":
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def x(cls) -> "QPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "QPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "QPoly") -> "QPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return QPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other) -> "QPoly":
        if not isinstance(other, QPoly):
            return QPoly(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return QPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        result = QPoly((1,))
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c == 0:
                continue
            quot[k - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= c * b
        return QPoly(tuple(quot)), QPoly(tuple(rem[:dq]) if dq > 0 else ())

    def __floordiv__(self, other: "QPoly") -> "QPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "QPoly") -> "QPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "QPoly":
        return QPoly(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def monic(self) -> "QPoly":
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    def substitute(self, a, b) -> "QPoly":
        """Return ``p(a*x + b)``."""
        result = QPoly(())
        lin = QPoly((b, a))
        for c in reversed(self.coeffs):
            result = result * lin + QPoly((c,))
        return result

    def reflect(self) -> "QPoly":
        """Return ``p(-x)``."""
        return QPoly(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))

    def descending(self) -> list[Fraction]:
        return list(reversed(self.coeffs))

    def to_json(self) -> list:
        """Ascending coefficients; integers stay ints, other rationals become ``"p/q"`` strings."""
        return [int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "QPoly":
        return cls(tuple(Fraction(c) for c in data))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(p: QPoly) -> list[tuple[QPoly, int]]:
    """Yun's algorithm: ``p = lc * prod(f_k ** k)`` with each ``f_k`` square-free and monic."""
    if p.degree < 1:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    k = 1
    while b.degree >= 1:
        a = poly_gcd(b, d)
        b = b // a
        c = d // a if not d.is_zero() else d
        if a.degree >= 1:
            out.append((a, k))
        d = c - b.derivative()
        k += 1
    return out


def sturm_sequence(p: QPoly) -> list[QPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _sign_changes(seq: list[QPoly], x: Fraction) -> int:
    changes = 0
    prev = 0
    for q in seq:
        v = q(x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def root_bound(p: QPoly) -> Fraction:
    """Cauchy bound: every complex root has modulus strictly below the result."""
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def count_real_roots(p: QPoly, lo=None, hi=None) -> int:
    """Number of distinct real roots in ``(lo, hi]`` (whole line when bounds are omitted)."""
    if p.degree < 1:
        return 0
    seq = sturm_sequence(p)
    bound = root_bound(p)
    lo = -bound if lo is None else Fraction(lo)
    hi = bound if hi is None else Fraction(hi)
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def _isolate(seq, lo: Fraction, hi: Fraction, n: int, out: list) -> None:
    # invariant: seq[0](lo) != 0 and there are n roots in (lo, hi]
    if n == 0:
        return
    if n == 1:
        out.append((lo, hi))
        return
    width = hi - lo
    mid = lo + width / 2
    step = width / 8
    while seq[0](mid) == 0:
        mid += step
        step /= 2
    left = _sign_changes(seq, lo) - _sign_changes(seq, mid)
    _isolate(seq, lo, mid, left, out)
    _isolate(seq, mid, hi, n - left, out)


def _refine(p: QPoly, lo: Fraction, hi: Fraction, tol: Fraction) -> Fraction:
    if p(hi) == 0:
        return hi
    s_lo = p(lo) > 0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        v = p(mid)
        if v == 0:
            return mid
        if (v > 0) == s_lo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def real_roots(p: QPoly, tol: float = 1e-14) -> list[float]:
    """All real roots of ``p`` in ascending order, repeated by multiplicity.

    Non-real roots are silently skipped; callers that expect a fully real
    spectrum should compare ``len(result)`` with ``p.degree``.
    """
    tol_q = Fraction(tol)
    roots: list[float] = []
    for factor, mult in squarefree_decomposition(p):
        seq = sturm_sequence(factor)
        bound = root_bound(factor)
        lo, hi = -bound, bound
        intervals: list[tuple[Fraction, Fraction]] = []
        _isolate(seq, lo, hi, _sign_changes(seq, lo) - _sign_changes(seq, hi), intervals)
        for a, b in intervals:
            r = float(_refine(factor, a, b, tol_q))
            roots.extend([r] * mult)
    return sorted(roots)
