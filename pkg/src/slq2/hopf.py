"""Hopf structure: coproduct, counit, antipode, characters, the faithful
matrix representation of the quotient F, and coinvariance checks.

The coproduct is the matrix comultiplication on the generator matrix
[[a, b], [c, d]] extended as an algebra homomorphism; all tensor legs are
kept in normal form so axiom checks are canonical term comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import (
    AlgebraElement,
    AlgebraMode,
    NormalMonomial,
    generator,
    monomial_element,
    multiply,
    unit,
    zero,
)
from .cyclo import CyclotomicScalar, q_half_power, q_power
from .linalg import ScalarMatrix

MonoPair = tuple[NormalMonomial, ...]


@dataclass
class TensorElement:
    """A finite sum of pure tensors of normal monomials (rank 2 or 3)."""

    mode: AlgebraMode
    rank: int
    terms: dict[MonoPair, CyclotomicScalar] = field(default_factory=dict)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.mode == other.mode and self.rank == other.rank and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def add_term(self, key: MonoPair, coeff: CyclotomicScalar) -> None:
        acc = self.terms.get(key)
        val = coeff if acc is None else acc + coeff
        if val.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = val

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = TensorElement(self.mode, self.rank, dict(self.terms))
        for key, c in other.terms.items():
            out.add_term(key, c)
        return out

    def scale(self, c: CyclotomicScalar) -> "TensorElement":
        if c.is_zero():
            return TensorElement(self.mode, self.rank, {})
        return TensorElement(self.mode, self.rank, {k: c * v for k, v in self.terms.items()})

    def multiply(self, other: "TensorElement") -> "TensorElement":
        """Legwise product (no cross-leg sign)."""
        if self.rank != other.rank:
            raise ValueError("tensor rank mismatch")
        from .algebra import _mono_mul

        out = TensorElement(self.mode, self.rank, {})
        for key1, c1 in self.terms.items():
            for key2, c2 in other.terms.items():
                base = c1 * c2
                leg_products = [_mono_mul(self.mode, m1, m2) for m1, m2 in zip(key1, key2)]

                def rec(i: int, key: tuple, coeff: CyclotomicScalar):
                    if i == self.rank:
                        out.add_term(key, coeff)
                        return
                    for mono, c in leg_products[i]:
                        rec(i + 1, key + (mono,), coeff * c)

                rec(0, (), base)
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            c = self.terms[key]
            body = " (x) ".join(m.label() for m in key)
            parts.append(f"({c}) {body}")
        return " + ".join(parts)


def _accumulate_tensor(out: TensorElement, legs: list[AlgebraElement]) -> None:
    """Add the expansion of leg1 (x) leg2 (x) ... into `out`."""
    def rec(i: int, key: tuple, coeff: CyclotomicScalar):
        if coeff.is_zero():
            return
        if i == len(legs):
            out.add_term(key, coeff)
            return
        for mono, c in legs[i].terms.items():
            rec(i + 1, key + (mono,), coeff * c)

    rec(0, (), CyclotomicScalar.one(out.mode.ell))


def tensor_of(*factors: AlgebraElement) -> TensorElement:
    mode = factors[0].mode
    out = TensorElement(mode, len(factors), {})
    _accumulate_tensor(out, list(factors))
    return out


# ---------------------------------------------------------------------------
# coproduct, counit, antipode
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _coproduct_generator_power(mode: AlgebraMode, g: str, n: int) -> TensorElement:
    if n == 0:
        return tensor_of(unit(mode), unit(mode))
    if n == 1:
        a, b, c, d = (generator(mode, x) for x in "abcd")
        table = {
            "a": tensor_of(a, a) + tensor_of(b, c),
            "b": tensor_of(a, b) + tensor_of(b, d),
            "c": tensor_of(c, a) + tensor_of(d, c),
            "d": tensor_of(c, b) + tensor_of(d, d),
        }
        return table[g]
    return _coproduct_generator_power(mode, g, n - 1).multiply(_coproduct_generator_power(mode, g, 1))


@lru_cache(maxsize=None)
def _coproduct_monomial(mode: AlgebraMode, mono: NormalMonomial) -> TensorElement:
    result = _coproduct_generator_power(mode, "a", 0)  # 1 (x) 1
    for g, e in mono.word():
        result = result.multiply(_coproduct_generator_power(mode, g, e))
    return result


def coproduct(x: AlgebraElement) -> TensorElement:
    """Delta(x), extended multiplicatively from the generator matrix."""
    out = TensorElement(x.mode, 2, {})
    for mono, c in x.terms.items():
        piece = _coproduct_monomial(x.mode, mono)
        for key, v in piece.terms.items():
            out.add_term(key, c * v)
    return out


def counit(x: AlgebraElement) -> CyclotomicScalar:
    """epsilon: a, d -> 1 and b, c -> 0, extended multiplicatively."""
    total = CyclotomicScalar.zero(x.ell)
    for mono, c in x.terms.items():
        if mono.j == 0 and mono.k == 0:
            total = total + c
    return total


def antipode(x: AlgebraElement) -> AlgebraElement:
    """S: a<->d, b -> -q^-1 b, c -> -q c, extended anti-multiplicatively.

    On a PBW monomial this produces a single monomial: reversing the word
    only commutes b past c, so S(a^t b^j c^k) = (-1)^(j+k) q^(k-j) b^j c^k d^t
    and symmetrically for d-monomials.
    """
    out = zero(x.mode)
    ell = x.ell
    for mono, c in x.terms.items():
        sign = -1 if (mono.j + mono.k) % 2 else 1
        coeff = c * q_power(ell, mono.k - mono.j)
        if sign < 0:
            coeff = -coeff
        out = out + monomial_element(x.mode, NormalMonomial(-mono.t, mono.j, mono.k), coeff)
    return out


# ---------------------------------------------------------------------------
# axiom checks
# ---------------------------------------------------------------------------

@dataclass
class HopfAxiomReport:
    coassociative: bool
    counital: bool
    antipodal: bool

    @property
    def all_ok(self) -> bool:
        return self.coassociative and self.counital and self.antipodal


def _delta_on_leg(t: TensorElement, position: int) -> TensorElement:
    """Apply the coproduct to one leg of a rank-2 tensor, giving rank 3."""
    out = TensorElement(t.mode, 3, {})
    for (m1, m2), c in t.terms.items():
        inner = _coproduct_monomial(t.mode, m1 if position == 0 else m2)
        for (n1, n2), v in inner.terms.items():
            key = (n1, n2, m2) if position == 0 else (m1, n1, n2)
            out.add_term(key, c * v)
    return out


def check_hopf_axioms(x: AlgebraElement) -> HopfAxiomReport:
    dx = coproduct(x)
    coassoc = _delta_on_leg(dx, 0) == _delta_on_leg(dx, 1)

    left = zero(x.mode)
    right = zero(x.mode)
    for (m1, m2), c in dx.terms.items():
        left = left + monomial_element(x.mode, m2, c * _counit_monomial(x.ell, m1))
        right = right + monomial_element(x.mode, m1, c * _counit_monomial(x.ell, m2))
    counital = left == x and right == x

    target = unit(x.mode).scale(counit(x))
    s_left = zero(x.mode)
    s_right = zero(x.mode)
    for (m1, m2), c in dx.terms.items():
        s_left = s_left + multiply(antipode(monomial_element(x.mode, m1)), monomial_element(x.mode, m2)).scale(c)
        s_right = s_right + multiply(monomial_element(x.mode, m1), antipode(monomial_element(x.mode, m2))).scale(c)
    antipodal = s_left == target and s_right == target

    return HopfAxiomReport(coassoc, counital, antipodal)


def _counit_monomial(ell: int, mono: NormalMonomial) -> CyclotomicScalar:
    if mono.j == 0 and mono.k == 0:
        return CyclotomicScalar.one(ell)
    return CyclotomicScalar.zero(ell)


# ---------------------------------------------------------------------------
# characters of the finite quotients
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """One dimensional representation of a finite quotient.

    Characters kill b and c; on the class of a they take the value
    q^index for F and s^index for Fhat (s the square root of q of order
    2 ell), so the index lives in {1, ..., ell} resp. {1, ..., 2 ell} and
    the top index is the counit.
    """

    mode: AlgebraMode
    index: int

    @property
    def order(self) -> int:
        return self.mode.a_period

    def value_on_a(self) -> CyclotomicScalar:
        if self.mode.kind == "F":
            return q_power(self.mode.ell, self.index)
        return q_half_power(self.mode.ell, self.index)


def character(mode: AlgebraMode, index: int) -> Character:
    if not mode.is_quotient:
        raise ValueError("characters are defined on the finite quotients only")
    order = mode.a_period
    if not 1 <= index <= order:
        raise ValueError(f"character index must lie in 1..{order}")
    return Character(mode, index)


def characters(mode: AlgebraMode) -> list[Character]:
    return [character(mode, i) for i in range(1, mode.a_period + 1)]


def evaluate_character(chi: Character, x: AlgebraElement) -> CyclotomicScalar:
    if x.mode != chi.mode:
        raise ValueError("character/element mode mismatch")
    va = chi.value_on_a()
    total = CyclotomicScalar.zero(x.ell)
    for mono, c in x.terms.items():
        if mono.j or mono.k:
            continue
        total = total + c * va**mono.t
    return total


def convolve(chi1: Character, chi2: Character) -> Character:
    """Convolution product (chi1 * chi2)(x) = sum chi1(x_(1)) chi2(x_(2)).

    Computed through the coproduct of the class of a and matched back to
    the character table; the group is cyclic of order ell (F) or
    2 ell (Fhat).
    """
    if chi1.mode != chi2.mode:
        raise ValueError("cannot convolve characters of different quotients")
    mode = chi1.mode
    da = coproduct(generator(mode, "a"))
    value = CyclotomicScalar.zero(mode.ell)
    for (m1, m2), c in da.terms.items():
        value = value + c * evaluate_character(chi1, monomial_element(mode, m1)) * evaluate_character(
            chi2, monomial_element(mode, m2)
        )
    for chi in characters(mode):
        if chi.value_on_a() == value:
            return chi
    raise AssertionError("convolution left the character group")


def restrict_character(chi: Character) -> Character:
    """The classical-subgroup surjection Z_2ell -> Z_ell: index mod ell.

    Its kernel has order two (the counit and the index-ell character), which
    is exactly the kernel of the classical spin double cover.
    """
    if chi.mode.kind != "Fhat":
        raise ValueError("restriction maps Fhat characters to F characters")
    ell = chi.mode.ell
    idx = chi.index % ell
    return character(AlgebraMode.quotient_f(ell), idx if idx else ell)


# ---------------------------------------------------------------------------
# faithful matrix representation of A(F)
# ---------------------------------------------------------------------------

class FRepresentation:
    """The ell^3 dimensional representation of the quotient F built from the
    cyclic shift J, the charge diagonal Q = diag(q^-i) and the nilpotent
    shift N:  a -> J x 1 x 1,  b -> Q x N x 1,  c -> Q x 1 x N, with the
    image of d solved from  rho(a) rho(d) = 1 + q rho(b) rho(c).
    """

    def __init__(self, ell: int):
        self.ell = ell
        self.mode = AlgebraMode.quotient_f(ell)
        one = CyclotomicScalar.one(ell)
        zero_s = CyclotomicScalar.zero(ell)
        eye = ScalarMatrix.identity(ell, ell)

        j = ScalarMatrix.zeros(ell, ell, ell)
        n = ScalarMatrix.zeros(ell, ell, ell)
        qd = ScalarMatrix.zeros(ell, ell, ell)
        for i in range(ell):
            j.data[(i + 1) % ell][i] = one
            qd.data[i][i] = q_power(ell, -(i + 1))
            if i + 1 < ell:
                n.data[i + 1][i] = one
        self.j_matrix = j
        self.n_matrix = n
        self.q_matrix = qd

        self.image_a = j.kron(eye).kron(eye)
        self.image_b = qd.kron(n).kron(eye)
        self.image_c = qd.kron(eye).kron(n)

        from .linalg import inverse as _inv

        q = q_power(ell, 1)
        self.image_d = _inv(self.image_a) * (
            ScalarMatrix.identity(ell, ell**3) + (self.image_b * self.image_c).scale(q)
        )

        # cache the generator powers used by monomial images
        self._pow_a = [ScalarMatrix.identity(ell, ell)]
        self._pow_n = [ScalarMatrix.identity(ell, ell)]
        for _ in range(ell):
            self._pow_a.append(j * self._pow_a[-1])
            self._pow_n.append(n * self._pow_n[-1])

    def of(self, x: AlgebraElement) -> ScalarMatrix:
        """Matrix image of an element of the quotient F."""
        if x.mode != self.mode:
            raise ValueError("FRepresentation expects elements of the quotient F")
        ell = self.ell
        out = ScalarMatrix.zeros(ell, ell**3, ell**3)
        for mono, coeff in x.terms.items():
            # rho(a^t b^j c^k) = (J^t Q^(j+k)) x N^j x N^k
            left = self._pow_a[mono.t]
            qpow = self.q_matrix
            acc = left
            for _ in range(mono.j + mono.k):
                acc = acc * qpow
            block = acc.kron(self._pow_n[mono.j]).kron(self._pow_n[mono.k])
            out = out + block.scale(coeff)
        return out


def matrix_representation_f(x: AlgebraElement) -> ScalarMatrix:
    rep = _f_representation(x.ell)
    return rep.of(x)


@lru_cache(maxsize=None)
def _f_representation(ell: int) -> FRepresentation:
    return FRepresentation(ell)


# ---------------------------------------------------------------------------
# coinvariance
# ---------------------------------------------------------------------------

def coinvariance_check(x: AlgebraElement, quotient: AlgebraMode) -> bool:
    """True iff (id (x) pi_quotient) Delta(x) equals x (x) 1."""
    if not quotient.is_quotient:
        raise ValueError("coinvariance is relative to a finite quotient")
    if not quotient.is_quotient_of(x.mode):
        raise ValueError("quotient does not project from the element's mode")
    dx = coproduct(x)
    collected: dict[NormalMonomial, AlgebraElement] = {}
    for (m1, m2), c in dx.terms.items():
        piece = monomial_element(quotient, m2, c)
        acc = collected.setdefault(m1, zero(quotient))
        collected[m1] = acc + piece
    one_q = unit(quotient)
    for m1, el in collected.items():
        expected = one_q.scale(x.terms.get(m1, CyclotomicScalar.zero(x.ell)))
        if el != expected:
            return False
    # every monomial of x must actually appear with its full coefficient
    for mono, c in x.terms.items():
        el = collected.get(mono)
        if el is None or el != one_q.scale(c):
            return False
    return True
