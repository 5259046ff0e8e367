"""Dense univariate polynomial arithmetic over a prime field.

A polynomial is an immutable tuple of integer coefficients in ``[0, p)``,
index ``i`` holding the coefficient of ``x^i``, with no trailing zeros.  The
zero polynomial stores an empty tuple and has degree :data:`NEG_INF`, which
compares strictly below every integer and absorbs addition, so degree
inequalities hold for the zero polynomial without special cases.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Tuple, Union

from .errors import (
    BothZeroError,
    DivisionByZeroError,
    MixedFieldsError,
    ParseError,
    ZeroInputError,
)
from .field import FieldElement, PrimeField

NEG_INF = float("-inf")

Degree = Union[int, float]

# Guards the x^k exponent in parsed text against memory blowups.
_MAX_PARSE_DEGREE = 1 << 16


class Polynomial:
    """A dense polynomial over a :class:`PrimeField`.

    Coefficients may be given as ints (reduced mod p) or as
    :class:`FieldElement` values of the same field, lowest power first.
    """

    __slots__ = ("field", "coeffs")

    def __init__(
        self, field: PrimeField, coeffs: Iterable[Union[int, FieldElement]] = ()
    ) -> None:
        p = field.p
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise MixedFieldsError(
                        f"coefficient from {c.field!r} in a polynomial over {field!r}"
                    )
                vals.append(c.value)
            else:
                vals.append(c % p)
        while vals and vals[-1] == 0:
            vals.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(vals))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Polynomial is immutable")

    # Structure

    @property
    def degree(self) -> Degree:
        """Degree of the polynomial; NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, i: int) -> int:
        """Coefficient of ``x^i`` (0 beyond the stored length)."""
        if i < 0:
            raise ValueError("coefficient index must be >= 0")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def is_monic(self) -> bool:
        return self.lead == 1

    def monic(self) -> "Polynomial":
        """Scalar multiple with leading coefficient 1 (zero stays zero)."""
        if self.is_zero or self.lead == 1:
            return self
        return self._scale(self.field.inv(self.lead))

    def _scale(self, c: int) -> "Polynomial":
        p = self.field.p
        c %= p
        if c == 0:
            return Polynomial(self.field)
        if c == 1:
            return self
        return Polynomial(self.field, ((v * c) % p for v in self.coeffs))

    def _check_field(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if self.field != other.field:
            raise MixedFieldsError(
                f"cannot combine polynomials over {self.field!r} and {other.field!r}"
            )

    # Ring operations

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_field(other)
        p = self.field.p
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = (out[i] + v) % p
        return Polynomial(self.field, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_field(other)
        p = self.field.p
        a, b = self.coeffs, other.coeffs
        out = list(a) + [0] * (len(b) - len(a))
        for i, v in enumerate(b):
            out[i] = (out[i] - v) % p
        return Polynomial(self.field, out)

    def __neg__(self) -> "Polynomial":
        p = self.field.p
        return Polynomial(self.field, ((-v) % p for v in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_field(other)
        if self.is_zero or other.is_zero:
            return Polynomial(self.field)
        p = self.field.p
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, av in enumerate(a):
            if av:
                for j, bv in enumerate(b):
                    if bv:
                        out[i + j] = (out[i + j] + av * bv) % p
        return Polynomial(self.field, out)

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """Euclidean division: ``self == q * other + r`` with deg(r) < deg(other)."""
        self._check_field(other)
        if other.is_zero:
            raise DivisionByZeroError("polynomial division by zero")
        if len(self.coeffs) < len(other.coeffs):
            return Polynomial(self.field), self
        p = self.field.p
        rem = list(self.coeffs)
        div = other.coeffs
        dd = len(div) - 1
        lead_inv = self.field.inv(div[-1])
        quot = [0] * (len(rem) - dd)
        for shift in range(len(rem) - dd - 1, -1, -1):
            c = rem[shift + dd]
            if c:
                factor = (c * lead_inv) % p
                quot[shift] = factor
                for j in range(dd + 1):
                    rem[shift + j] = (rem[shift + j] - factor * div[j]) % p
        return Polynomial(self.field, quot), Polynomial(self.field, rem[:dd])

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    # Value semantics

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial('{self}', p={self.field.p})"

    def __str__(self) -> str:
        """Canonical text form: descending powers joined by '+', zero is '0'."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("x" if c == 1 else f"{c}*x")
            else:
                parts.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return "+".join(parts)


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor by the Euclidean algorithm.

    ``gcd(a, 0)`` is ``a`` made monic; ``gcd(0, 0)`` raises
    :class:`BothZeroError`.  The result is normalized to monic once at the
    end rather than per remainder step, saving inversions.
    """
    a._check_field(b)
    if a.is_zero and b.is_zero:
        raise BothZeroError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def xgcd(a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """Extended Euclid: returns ``(g, s, t)`` with ``s*a + t*b = g`` and g monic."""
    a._check_field(b)
    if a.is_zero and b.is_zero:
        raise BothZeroError("xgcd(0, 0) is undefined")
    field = a.field
    one = Polynomial(field, (1,))
    zero = Polynomial(field)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = field.inv(r0.lead)
    return r0._scale(c), s0._scale(c), t0._scale(c)


def lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic least common multiple of two nonzero polynomials."""
    a._check_field(b)
    if a.is_zero or b.is_zero:
        raise ZeroInputError("lcm requires nonzero inputs")
    return ((a * b) // gcd(a, b)).monic()


_TERM_RE = re.compile(
    r"""^\s*
        (?:
            (?P<coeff>\d+)\s*(?:\*\s*x(?:\^(?P<cpow>\d+))?)?   # c, c*x, c*x^k
          | x(?:\^(?P<pow>\d+))?                               # x, x^k
        )
        \s*$""",
    re.VERBOSE,
)

_INT_RE = re.compile(r"^\s*[+-]?\d+\s*$")


def parse_polynomial(text: str, field: PrimeField) -> Polynomial:
    """Parse polynomial text into a canonical :class:`Polynomial`.

    Two input forms are accepted:

    * term form: terms joined by ``+``, each ``c*x^k``, ``x^k``, ``c*x``,
      ``x`` or ``c``; coefficients must be integers in ``[0, p)``.  Term
      order does not matter and repeated powers are summed, so any input
      that parses round-trips through the canonical descending-order form.
    * coefficient list: ``[c0,c1,...,cn]`` ascending by power; entries are
      arbitrary integers and are reduced mod p.

    Raises :class:`ParseError` with the character position of the first
    offending token.
    """
    if not isinstance(text, str):
        raise ParseError(f"expected string input, got {type(text).__name__}", 0)
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty polynomial text", 0)
    if stripped.startswith("["):
        return _parse_coeff_list(text, field)
    return _parse_terms(text, field)


def _parse_coeff_list(text: str, field: PrimeField) -> Polynomial:
    start = text.index("[")
    end = text.rfind("]")
    if end < start:
        raise ParseError("unterminated coefficient list", len(text) - 1)
    if text[end + 1 :].strip():
        raise ParseError("trailing text after coefficient list", end + 1)
    inner = text[start + 1 : end]
    if not inner.strip():
        raise ParseError("empty coefficient list", start + 1)
    coeffs = []
    offset = start + 1
    for chunk in inner.split(","):
        if not _INT_RE.match(chunk):
            raise ParseError(f"invalid coefficient {chunk.strip()!r}", offset)
        coeffs.append(int(chunk))
        offset += len(chunk) + 1
    if len(coeffs) > _MAX_PARSE_DEGREE:
        raise ParseError("coefficient list too long", start)
    return Polynomial(field, coeffs)


def _parse_terms(text: str, field: PrimeField) -> Polynomial:
    p = field.p
    powers: dict = {}
    offset = 0
    for chunk in text.split("+"):
        if not chunk.strip():
            raise ParseError("empty term", offset)
        m = _TERM_RE.match(chunk)
        if not m:
            raise ParseError(f"invalid term {chunk.strip()!r}", offset)
        if m.group("coeff") is not None:
            c = int(m.group("coeff"))
            if c >= p:
                raise ParseError(f"coefficient {c} not in [0, {p})", offset)
            star = "*" in chunk
            if star:
                k = int(m.group("cpow")) if m.group("cpow") else 1
            else:
                k = 0
        else:
            c = 1
            k = int(m.group("pow")) if m.group("pow") else 1
        if k > _MAX_PARSE_DEGREE:
            raise ParseError(f"exponent {k} too large", offset)
        powers[k] = (powers.get(k, 0) + c) % p
        offset += len(chunk) + 1
    if not powers:
        return Polynomial(field)
    coeffs = [0] * (max(powers) + 1)
    for k, c in powers.items():
        coeffs[k] = c
    return Polynomial(field, coeffs)
