"""Exact integer polynomials in q and distribution polynomials of statistics.

The generating function of a statistic over a rearrangement class is the
polynomial sum of q**stat(w).  Mahonian statistics are those whose
distribution on every class equals the q-multinomial coefficient

    [n; c(1), ..., c(r)]_q = [n]_q! / ([c(1)]_q! ... [c(r)]_q!),

with the q-factorial [n]_q! = (1+q)(1+q+q^2) ... (1+q+...+q^(n-1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .statistics import MajInvStatistic
from .words import Composition, class_size, compositions_of_weight, enumerate_class
from .relations import Bipartition


@dataclass(frozen=True, slots=True)
class QPolynomial:
    """Integer polynomial in q; coefficients ascending, canonical form."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("use (0,) for the zero polynomial")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient; not canonical")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "QPolynomial":
        """Build from an ascending coefficient list, trimming trailing zeros."""
        cs = list(coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs) if cs else (0,))

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls((0,))

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "QPolynomial":
        """coeff * q**degree."""
        if degree < 0:
            raise ValueError("degree must be >= 0")
        if coeff == 0:
            return cls.zero()
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree 0."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial.from_coeffs(out)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return QPolynomial.from_coeffs(out)

    def __mul__(self, other: "QPolynomial | int") -> "QPolynomial":
        if isinstance(other, int):
            return QPolynomial.from_coeffs(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial.from_coeffs(out)

    __rmul__ = __mul__

    def __call__(self, value: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    def exact_div(self, divisor: "QPolynomial") -> "QPolynomial":
        """Quotient self / divisor; raises ArithmeticError unless exact."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dlen = len(divisor.coeffs)
        qlen = len(rem) - dlen + 1
        if qlen <= 0:
            if self.is_zero():
                return QPolynomial.zero()
            raise ArithmeticError("inexact polynomial division")
        quot = [0] * qlen
        for k in range(qlen - 1, -1, -1):
            c = rem[k + dlen - 1]
            if c % lead:
                raise ArithmeticError("inexact polynomial division")
            f = c // lead
            quot[k] = f
            if f:
                for j, d in enumerate(divisor.coeffs):
                    rem[k + j] -= f * d
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return QPolynomial.from_coeffs(quot)

    def text(self) -> str:
        """Human form, e.g. "1 + 2*q + 2*q^2 + q^3"."""
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "q" if mag == 1 else f"{mag}*q"
            else:
                body = f"q^{k}" if mag == 1 else f"{mag}*q^{k}"
            terms.append((c < 0, body))
        out = ("-" if terms[0][0] else "") + terms[0][1]
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_json_dict(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "QPolynomial":
        try:
            return cls.from_coeffs(int(c) for c in data["coeffs"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed polynomial JSON: {exc}") from exc


def q_integer(n: int) -> QPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return QPolynomial.zero()
    return QPolynomial((1,) * n)


def q_factorial(n: int) -> QPolynomial:
    """[n]_q! as the product of the q-integers 1..n; empty product is 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = QPolynomial.one()
    for i in range(2, n + 1):
        out = out * q_integer(i)
    return out


@lru_cache(maxsize=None)
def _q_multinomial_cached(counts: tuple[int, ...]) -> QPolynomial:
    num = q_factorial(sum(counts))
    for c in counts:
        num = num.exact_div(q_factorial(c))
    return num


def q_multinomial(c: Composition) -> QPolynomial:
    """[n; c(1), ..., c(r)]_q by exact division of q-factorials."""
    return _q_multinomial_cached(c.counts)


def distribution(stat: MajInvStatistic, c: Composition) -> QPolynomial:
    """Sum of q**stat(w) over the rearrangement class of c."""
    if stat.size != c.size:
        raise ValueError("statistic and composition alphabet sizes differ")
    n = c.weight
    counts = [0] * (n * (n - 1) + 1 if n else 1)  # maj + inv each at most n(n-1)/2
    for w in enumerate_class(c):
        counts[stat.evaluate(w)] += 1
    return QPolynomial.from_coeffs(counts)


def is_mahonian_up_to(stat: MajInvStatistic, max_weight: int) -> bool:
    """Certify equidistribution with inv on every class of weight <= max_weight.

    A finite certificate only; the bound is part of the name on purpose.
    """
    if max_weight < 1:
        raise ValueError("max_weight must be >= 1")
    r = stat.size
    for n in range(max_weight + 1):
        for c in compositions_of_weight(r, n):
            if distribution(stat, c) != q_multinomial(c):
                return False
    return True


def bipartitional_product_formula(c: Composition, b: Bipartition) -> QPolynomial:
    """Closed form of the distribution attached to an ordered-block relation.

    With m_l the total count of letters in block B_l:

        [n; m_1, ..., m_k]_q * prod_l multinomial(m_l; c(B_l)) * q^e,
        e = sum of beta_l * binomial(m_l, 2).

    The reflexive blocks contribute the q-power: a block of m equal letters
    related to themselves scores binomial(m, 2) whatever their placement.
    """
    if b.size != c.size:
        raise ValueError("bipartition and composition alphabet sizes differ")
    block_weights = []
    coeff = 1
    exponent = 0
    for block, beta in zip(b.blocks, b.betas):
        block_counts = tuple(c.counts[x - 1] for x in block)
        m = sum(block_counts)
        block_weights.append(m)
        coeff *= class_size(Composition(block_counts))
        exponent += beta * math.comb(m, 2)
    out = q_multinomial(Composition(tuple(block_weights)))
    return out * QPolynomial.monomial(exponent, coeff)
