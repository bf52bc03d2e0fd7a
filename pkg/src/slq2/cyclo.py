"""Exact arithmetic in the cyclotomic field Q(zeta_ell), for odd ell >= 3.

Scalars are rational coefficient vectors reduced modulo the ell-th
cyclotomic polynomial, so zero tests and equality are exact and the
primitivity of the root is built in.  The deformation parameter q is the
root itself; because ell is odd, q has a square root inside the same
field.  The shipped branch is s = -q^((ell+1)/2), which is the unique
in-field square root of q under which the reference braiding tables and
their eigenvalue structure come out right (see ``slq2.braid``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def validate_ell(ell: int) -> None:
    if not isinstance(ell, int) or ell < 3 or ell % 2 == 0:
        raise ValueError(f"ell must be an odd integer >= 3, got {ell!r}")


# ---------------------------------------------------------------------------
# dense polynomials over Q, coefficients listed from the constant term up
# ---------------------------------------------------------------------------

def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj != 0:
                out[i + j] += ai * bj
    return _trim(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [_ZERO] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    for shift in range(len(rem) - len(b), -1, -1):
        coeff = rem[shift + len(b) - 1] / lead
        if coeff == 0:
            continue
        quo[shift] = coeff
        for i, bi in enumerate(b):
            rem[shift + i] -= coeff * bi
    return _trim(quo), _trim(rem)


def _poly_egcd(a: list[Fraction], b: list[Fraction]):
    """Extended gcd: returns (g, u, v) with u*a + v*b = g."""
    r0, r1 = list(a), list(b)
    u0, u1 = [_ONE], []
    v0, v1 = [], [_ONE]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
        v0, v1 = v1, _poly_sub(v0, _poly_mul(q, v1))
    return r0, u0, v0


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [_ZERO] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _trim(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_n (constant term first), via recursive division
    of x^n - 1 by the cyclotomic polynomials of the proper divisors of n.
    Works for composite n, so composite odd ell (9, 15, ...) is supported."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-_ONE] + [_ZERO] * (n - 1) + [_ONE]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not rem, f"Phi_{d} does not divide x^{n}-1"
    return tuple(num)


@lru_cache(maxsize=None)
def _phi_degree(ell: int) -> int:
    return len(cyclotomic_polynomial(ell)) - 1


def _reduce(ell: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    phi = list(cyclotomic_polynomial(ell))
    _, rem = _poly_divmod(coeffs, phi)
    deg = _phi_degree(ell)
    rem = rem + [_ZERO] * (deg - len(rem))
    return tuple(rem)


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclotomicScalar:
    """An element of Q(zeta_ell), stored reduced modulo Phi_ell.

    Immutable and hashable; all arithmetic is exact.  Mixing scalars with
    Python ints or Fractions is allowed, mixing different ell is an error.
    """

    ell: int
    coeffs: tuple[Fraction, ...]

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ell: int) -> "CyclotomicScalar":
        validate_ell(ell)
        return CyclotomicScalar(ell, (_ZERO,) * _phi_degree(ell))

    @staticmethod
    def one(ell: int) -> "CyclotomicScalar":
        return CyclotomicScalar.from_rational(ell, 1)

    @staticmethod
    def from_rational(ell: int, value: Rational) -> "CyclotomicScalar":
        validate_ell(ell)
        deg = _phi_degree(ell)
        head = (Fraction(value),) + (_ZERO,) * (deg - 1)
        return CyclotomicScalar(ell, head)

    @staticmethod
    def root(ell: int) -> "CyclotomicScalar":
        """The primitive root zeta_ell itself (this is q)."""
        validate_ell(ell)
        return CyclotomicScalar.from_coeff_list(ell, [0, 1])

    @staticmethod
    def from_coeff_list(ell: int, coeffs) -> "CyclotomicScalar":
        validate_ell(ell)
        return CyclotomicScalar(ell, _reduce(ell, [Fraction(c) for c in coeffs]))

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> "CyclotomicScalar":
        if isinstance(other, CyclotomicScalar):
            if other.ell != self.ell:
                raise ValueError(f"mixed cyclotomic orders: {self.ell} vs {other.ell}")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicScalar.from_rational(self.ell, other)
        return NotImplemented  # type: ignore[return-value]

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CyclotomicScalar(self.ell, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar(self.ell, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CyclotomicScalar(self.ell, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        prod = _poly_mul(list(self.coeffs), list(o.coeffs))
        return CyclotomicScalar(self.ell, _reduce(self.ell, prod))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicScalar":
        """Multiplicative inverse via extended gcd with Phi_ell."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        g, u, _ = _poly_egcd(_trim(list(self.coeffs)), list(cyclotomic_polynomial(self.ell)))
        # Phi_ell is irreducible over Q, so the gcd is a nonzero constant.
        assert len(g) == 1
        inv = [c / g[0] for c in u]
        return CyclotomicScalar(self.ell, _reduce(self.ell, inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = CyclotomicScalar.one(self.ell)
        for _ in range(abs(k)):
            result = result * base
        return result

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicScalar.from_rational(self.ell, other)
        if not isinstance(other, CyclotomicScalar):
            return NotImplemented
        return self.ell == other.ell and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ell, self.coeffs))

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        terms = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                qpart = "q" if power == 1 else f"q^{power}"
                if mag == 1:
                    body = qpart
                elif mag.denominator == 1:
                    body = f"{mag}{qpart}"
                else:
                    body = f"({mag}){qpart}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"CyclotomicScalar(ell={self.ell}, {self})"

    def to_complex(self) -> complex:
        """Float approximation, for display only."""
        import cmath

        z = cmath.exp(2j * cmath.pi / self.ell)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))


# ---------------------------------------------------------------------------
# powers of q and q-binomials
# ---------------------------------------------------------------------------

def q_power(ell: int, k: int) -> CyclotomicScalar:
    """q^k = zeta_ell^(k mod ell)."""
    validate_ell(ell)
    k = k % ell
    return CyclotomicScalar.from_coeff_list(ell, [0] * k + [1])


def q_half_power(ell: int, j: int) -> CyclotomicScalar:
    """s^j where s = -zeta^((ell+1)/2) is the chosen square root of q.

    s has order 2*ell, s^2 = q, and q_half_power(2k) == q_power(k)."""
    validate_ell(ell)
    sign = -1 if j % 2 else 1
    power = (j * ((ell + 1) // 2)) % ell
    base = q_power(ell, power)
    return base if sign == 1 else -base


@lru_cache(maxsize=None)
def q_binomial(ell: int, m: int, r: int, exponent: int = -2) -> CyclotomicScalar:
    """Gaussian binomial (m choose r) with parameter p = q^exponent.

    Computed by the Pascal recurrence
        (m r)_p = (m-1 r-1)_p + p^r (m-1 r)_p,
    which never divides by q-integers and so stays exact at roots of
    unity where the factorial formula degenerates to 0/0.  By convention
    r outside [0, m] gives 0.
    """
    validate_ell(ell)
    if r < 0 or r > m:
        return CyclotomicScalar.zero(ell)
    if r == 0 or r == m:
        return CyclotomicScalar.one(ell)
    return q_binomial(ell, m - 1, r - 1, exponent) + q_power(ell, exponent * r) * q_binomial(
        ell, m - 1, r, exponent
    )
