"""Dense integer polynomials: ring arithmetic, cyclotomics, exact resultants.

A polynomial is a tuple of coefficients indexed by exponent, normalized so the
last coefficient is nonzero; the zero polynomial is the empty tuple.  All
cyclotomic reasoning is exact: values at roots of unity are never approximated,
they are handled through resultants and reduction modulo cyclotomic polynomials.

Sign convention.  Res(f, g) = lc(f)^deg(g) * prod over roots a of f of g(a).
Only |Res| matters for the unimodularity criteria downstream, but fixing one
convention keeps every test deterministic.  Under it,
Res(f, g) = (-1)^(deg f * deg g) Res(g, f) and Res(f, t-1) = (-1)^deg(f) f(1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact_linear import det as _matrix_det
from .exact_linear import IntMatrix

__all__ = [
    "IntPoly",
    "exact_div",
    "cyclotomic",
    "resultant",
    "reversal",
    "reduce_mod",
    "circulant_resultant",
    "divisors",
    "mobius",
    "InternalCheckError",
]


class InternalCheckError(RuntimeError):
    """Two supposedly-equivalent computation paths disagreed."""


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of t^i."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = self.coeffs
        if not isinstance(c, tuple):
            c = tuple(c)
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        if end != len(c) or not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(c[:end]))

    @classmethod
    def from_coeffs(cls, coeffs) -> "IntPoly":
        return cls(tuple(int(x) for x in coeffs))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((int(c),))

    @classmethod
    def t_power(cls, k: int) -> "IntPoly":
        """The monomial t^k."""
        if k < 0:
            raise ValueError("exponent must be non-negative")
        return cls((0,) * k + (1,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(tuple(out))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def shifted(self, k: int) -> "IntPoly":
        """Multiply by t^k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = "" if abs(c) == 1 and i > 0 else str(abs(c))
            var = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            term = mag + var
            parts.append(("- " if c < 0 else "+ ") + term if parts else ("-" if c < 0 else "") + term)
        return " ".join(parts)


def _divmod(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    # Long division over Z; every quotient step must divide exactly.
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f.coeffs)
    gc = g.coeffs
    dg = len(gc) - 1
    glc = gc[-1]
    quo = [0] * max(len(rem) - dg, 0)
    top = len(rem) - 1
    while top >= dg:
        while top >= 0 and rem[top] == 0:
            top -= 1
        if top < dg:
            break
        q, r = divmod(rem[top], glc)
        if r:
            raise ValueError(f"inexact division: {g} does not divide {f} over Z")
        shift = top - dg
        quo[shift] = q
        for i, c in enumerate(gc):
            rem[shift + i] -= q * c
        top -= 1
    return IntPoly(tuple(quo)), IntPoly(tuple(rem))


def exact_div(f: IntPoly, g: IntPoly) -> IntPoly:
    """Quotient f/g when g divides f exactly over Z; ValueError otherwise."""
    quo, rem = _divmod(f, g)
    if not rem.is_zero:
        raise ValueError(f"inexact division: {g} does not divide {f} over Z")
    return quo


def _factorize(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def divisors(m: int) -> list[int]:
    """Sorted positive divisors of m >= 1."""
    if m < 1:
        raise ValueError("divisors defined for positive integers")
    divs = [1]
    for p, e in _factorize(m).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mobius(m: int) -> int:
    if m < 1:
        raise ValueError("mobius defined for positive integers")
    mu = 1
    for _, e in _factorize(m).items():
        if e > 1:
            return 0
        mu = -mu
    return mu


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial via the Mobius product over e | d."""
    if d < 1:
        raise ValueError("cyclotomic index must be a positive integer")
    num = IntPoly((1,))
    den = IntPoly((1,))
    for e in divisors(d):
        mu = mobius(d // e)
        if mu == 0:
            continue
        factor = IntPoly((-1,) + (0,) * (e - 1) + (1,))  # t^e - 1
        if mu > 0:
            num = num * factor
        else:
            den = den * factor
    return exact_div(num, den)


def _prem(A: IntPoly, B: IntPoly) -> IntPoly:
    # Pseudo-remainder: the remainder of lc(B)^(deg A - deg B + 1) * A by B.
    dB = B.degree
    ell = B.lc
    e = A.degree - dB + 1
    rem = list(A.coeffs)
    gc = B.coeffs
    while rem and len(rem) - 1 >= dB:
        lead = rem[-1]
        rem = [ell * c for c in rem]
        shift = len(rem) - 1 - dB
        for i, c in enumerate(gc):
            rem[shift + i] -= lead * c
        while rem and rem[-1] == 0:
            rem.pop()
        e -= 1
    return IntPoly(tuple(rem)) * ell**e


def _div_by_int(f: IntPoly, b: int) -> IntPoly:
    out = []
    for c in f.coeffs:
        q, r = divmod(c, b)
        if r:
            raise InternalCheckError("subresultant divisor failed to divide exactly")
        out.append(q)
    return IntPoly(tuple(out))


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Exact resultant by the subresultant remainder sequence over Z.

    Each Euclidean-type step applies the identities
    Res(A, B) = (-1)^(deg A deg B) Res(B, A) and
    Res(B, c*X) = c^deg(B) Res(B, X), with pseudo-remainders divided by the
    Collins subresultant factor g*h^delta to keep coefficients small.  The
    factors pulled out along the way are tracked exactly and folded back in
    at the end.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    A, B = f, g
    sign = 1
    if A.degree < B.degree:
        if (A.degree * B.degree) % 2:
            sign = -sign
        A, B = B, A
    if B.degree == 0:
        return sign * B.coeffs[0] ** A.degree
    num = 1
    den = 1
    gg = 1
    hh = 1
    while True:
        dA, dB = A.degree, B.degree
        delta = dA - dB
        ell = B.lc
        R = _prem(A, B)
        if R.is_zero:
            return 0
        sign *= -1 if (dA * dB) % 2 else 1
        e = dA - R.degree - (delta + 1) * dB
        if e >= 0:
            num *= ell**e
        else:
            den *= ell**-e
        beta = gg * hh**delta
        B_next = _div_by_int(R, beta)
        num *= beta**dB
        A, B = B, B_next
        gg = A.lc
        if delta > 0:
            hh = gg**delta // hh ** (delta - 1)
        if B.degree == 0:
            total = sign * num * B.coeffs[0] ** A.degree
            quo, rem = divmod(total, den)
            if rem:
                raise InternalCheckError("resultant bookkeeping left a remainder")
            return quo


def reversal(f: IntPoly, D: int) -> IntPoly:
    """Coefficient reversal into the degree window D, i.e. t^D * f(1/t)."""
    if D < f.degree:
        raise ValueError(f"window {D} is smaller than deg f = {f.degree}")
    out = [0] * (D + 1)
    for i, c in enumerate(f.coeffs):
        out[D - i] = c
    return IntPoly(tuple(out))


def reduce_mod(f: IntPoly, m: IntPoly) -> IntPoly:
    """Remainder of f modulo a monic polynomial m."""
    if m.is_zero or m.lc != 1:
        raise ValueError("modulus must be monic")
    dm = m.degree
    if f.degree < dm:
        return f
    rem = list(f.coeffs)
    mc = m.coeffs
    for top in range(len(rem) - 1, dm - 1, -1):
        c = rem[top]
        if c:
            shift = top - dm
            for i, mi in enumerate(mc):
                rem[shift + i] -= c * mi
    return IntPoly(tuple(rem[:dm]))


def circulant_resultant(f: IntPoly, n: int) -> int:
    """Determinant of the n x n circulant built from f's coefficient vector.

    Equals prod over j < n of f at the j-th n-th root of unity.  Every call
    recomputes the magnitude independently as prod over d | n of
    |Res(f, Phi_d)| and insists the two paths agree, so each invocation is a
    self-test of the determinant and resultant machinery against each other.
    """
    if n < 1:
        raise ValueError("circulant size must be a positive integer")
    if f.is_zero:
        return 0
    if f.degree >= n:
        raise ValueError(f"deg f = {f.degree} must be < n = {n}; reduce mod t^n - 1 first")
    c = list(f.coeffs) + [0] * (n - len(f.coeffs))
    rows = [[c[(j - i) % n] for j in range(n)] for i in range(n)]
    d = _matrix_det(IntMatrix.from_rows(rows))
    magnitude = 1
    for e in divisors(n):
        magnitude *= abs(resultant(f, cyclotomic(e)))
    if abs(d) != magnitude:
        raise InternalCheckError(
            f"circulant determinant {d} disagrees with cyclotomic product {magnitude}"
        )
    return d
