"""
Integer Laurent polynomials in t^(1/2).

Exponents are stored doubled: the key ``k`` stands for ``t^(k/2)``. Alexander
polynomials of links with an odd number of components only use even keys, those
of links with an even number of components only odd keys.

>>> u = HalfLaurent({1: 1, -1: -1})
>>> str(u * u)
't - 2 + t^-1'
>>> summarize(u)
AlexSummary(degree_doubled=1, alpha=1, beta=-1, is_zero=False)
"""

from __future__ import annotations

import dataclasses
import enum
import json
import re
from typing import Iterable, Mapping


class HalfLaurent:
    """Immutable integer Laurent polynomial in t^(1/2), keyed by doubled exponent."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for k, c in items:
            if not isinstance(k, int) or not isinstance(c, int):
                raise TypeError(f"exponent and coefficient must be integers, got {k!r}, {c!r}")
            acc[k] = acc.get(k, 0) + c
        self._terms = {k: c for k, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> HalfLaurent:
        return cls({0: c})

    @classmethod
    def monomial(cls, doubled_exp: int, c: int = 1) -> HalfLaurent:
        return cls({doubled_exp: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        """Terms sorted by decreasing exponent."""
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def top(self) -> int:
        return max(self._terms)

    def bottom(self) -> int:
        return min(self._terms)

    def shift(self, doubled: int) -> HalfLaurent:
        """Multiply by t^(doubled/2)."""
        return HalfLaurent({k + doubled: c for k, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = HalfLaurent.const(other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __neg__(self):
        return HalfLaurent({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, -_coerce(other))

    def __rsub__(self, other):
        return add(_coerce(other), -self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"HalfLaurent('{self}')"

    def __str__(self):
        return to_text(self)


def _coerce(x) -> HalfLaurent:
    if isinstance(x, HalfLaurent):
        return x
    if isinstance(x, int):
        return HalfLaurent.const(x)
    raise TypeError(f"cannot combine HalfLaurent with {type(x).__name__}")


ZERO = HalfLaurent()
ONE = HalfLaurent.const(1)
# t^(1/2) - t^(-1/2), the skein factor and the positive Hopf link polynomial.
U = HalfLaurent({1: 1, -1: -1})


def add(p: HalfLaurent, q: HalfLaurent) -> HalfLaurent:
    acc = dict(p._terms)
    for k, c in q._terms.items():
        acc[k] = acc.get(k, 0) + c
    return HalfLaurent(acc)


def mul(p: HalfLaurent, q: HalfLaurent) -> HalfLaurent:
    acc: dict[int, int] = {}
    for k1, c1 in p._terms.items():
        for k2, c2 in q._terms.items():
            acc[k1 + k2] = acc.get(k1 + k2, 0) + c1 * c2
    return HalfLaurent(acc)


def coeff(p: HalfLaurent, doubled_exp: int) -> int:
    return p._terms.get(doubled_exp, 0)


@dataclasses.dataclass(frozen=True)
class AlexSummary:
    """Degree (doubled), leading coefficient and second coefficient of a polynomial."""
    degree_doubled: int
    alpha: int
    beta: int
    is_zero: bool = False

    @property
    def degree(self) -> str:
        return _half_text(self.degree_doubled)

    def to_dict(self) -> dict:
        return {
            "degree_doubled": self.degree_doubled,
            "d": self.degree,
            "alpha": self.alpha,
            "beta": self.beta,
            "is_zero": self.is_zero,
        }


def summarize(p: HalfLaurent) -> AlexSummary:
    if p.is_zero():
        return AlexSummary(0, 0, 0, is_zero=True)
    top = p.top()
    return AlexSummary(top, coeff(p, top), coeff(p, top - 2))


def substitute_power(p: HalfLaurent, w: int) -> HalfLaurent:
    """Substitute t -> t^w."""
    return HalfLaurent((k * w, c) for k, c in p._terms.items())


class Parity(str, enum.Enum):
    SYMMETRIC_INTEGRAL = "symmetric-integral"
    ANTISYMMETRIC_HALF = "antisymmetric-half"
    ZERO = "zero"
    VIOLATION = "violation"


def conway_parity(p: HalfLaurent) -> Parity:
    if p.is_zero():
        return Parity.ZERO
    keys = p._terms
    if all(k % 2 == 0 for k in keys) and all(keys.get(-k) == c for k, c in keys.items()):
        return Parity.SYMMETRIC_INTEGRAL
    if all(k % 2 == 1 for k in keys) and all(keys.get(-k) == -c for k, c in keys.items()):
        return Parity.ANTISYMMETRIC_HALF
    return Parity.VIOLATION


def parity_for_components(components: int) -> Parity:
    """Conway class expected for a link with the given number of components."""
    return Parity.SYMMETRIC_INTEGRAL if components % 2 else Parity.ANTISYMMETRIC_HALF


def divexact(p: HalfLaurent, q: HalfLaurent) -> HalfLaurent:
    """
    Exact quotient p / q in the Laurent ring; raises ArithmeticError when q does not
    divide p with integer coefficients.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    pb, qb = p.bottom(), q.bottom()
    num = to_dense(p)
    den = to_dense(q)
    quot = dense_divexact(num, den)
    return from_dense(quot, pb - qb)


# Dense helpers: lists of int coefficients in increasing powers of t^(1/2).

def to_dense(p: HalfLaurent) -> list[int]:
    """Coefficients of p * t^(-bottom/2), lowest power first."""
    b = p.bottom()
    out = [0] * (p.top() - b + 1)
    for k, c in p._terms.items():
        out[k - b] = c
    return out


def from_dense(coeffs: list[int], bottom: int = 0) -> HalfLaurent:
    return HalfLaurent((bottom + i, c) for i, c in enumerate(coeffs) if c)


def dense_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return dense_trim(out)


def dense_sub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return dense_trim(out)


def dense_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def dense_divexact(num: list[int], den: list[int]) -> list[int]:
    num = dense_trim(list(num))
    den = dense_trim(list(den))
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return []
    if len(num) < len(den):
        raise ArithmeticError("inexact polynomial division")
    rem = num
    lead = den[-1]
    quot = [0] * (len(num) - len(den) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(den) - 1]
        if c == 0:
            continue
        qc, r = divmod(c, lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[i] = qc
        for j, d in enumerate(den):
            rem[i + j] -= qc * d
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return dense_trim(quot)


# Text and JSON forms.

def _half_text(k: int) -> str:
    return str(k // 2) if k % 2 == 0 else f"{k}/2"


def _power_text(k: int) -> str:
    if k == 2:
        return "t"
    if k % 2 == 0:
        return f"t^{k // 2}"
    return f"t^({k}/2)"


def to_text(p: HalfLaurent) -> str:
    """Canonical rendering, decreasing exponents, e.g. ``t^3 - 2*t^2 + 3*t - 3``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, (k, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        elif a == 1:
            body = _power_text(k)
        else:
            body = f"{a}*{_power_text(k)}"
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+)\s*(?:\*\s*(?P<tvar1>t)(?P<exp1>\^(?:\(\s*-?\d+\s*(?:/\s*2\s*)?\)|-?\d+))?)?
          |
          (?P<tvar2>t)(?P<exp2>\^(?:\(\s*-?\d+\s*(?:/\s*2\s*)?\)|-?\d+))?
        )\s*""",
    re.VERBOSE,
)


def _parse_exponent(text: str | None) -> int:
    if not text:
        return 2
    body = text[1:].strip()
    if body.startswith("("):
        body = body[1:-1].replace(" ", "")
        if body.endswith("/2"):
            return int(body[:-2])
        return 2 * int(body)
    return 2 * int(body)


def from_text(text: str) -> HalfLaurent:
    """Parse the canonical text form (also accepts unnormalized input)."""
    s = text.strip()
    if s == "0":
        return ZERO
    pos = 0
    acc: dict[int, int] = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not first and not m.group("sign")):
            raise ValueError(f"cannot parse polynomial at position {pos}: {s[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            c = int(m.group("coef"))
            k = _parse_exponent(m.group("exp1")) if m.group("tvar1") else 0
        else:
            c = 1
            k = _parse_exponent(m.group("exp2"))
        acc[k] = acc.get(k, 0) + sign * c
        pos = m.end()
        first = False
    if first:
        raise ValueError("empty polynomial text")
    return HalfLaurent(acc)


def to_json(p: HalfLaurent) -> list[list[int]]:
    return [[k, c] for k, c in p.items()]


def from_json(data) -> HalfLaurent:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, list) or not all(isinstance(x, list) and len(x) == 2 for x in data):
        raise ValueError("expected an array of [doubled_exponent, coefficient] pairs")
    return HalfLaurent((int(k), int(c)) for k, c in data)


def parse(text: str) -> HalfLaurent:
    """Accept either the JSON pair form or the text form."""
    s = text.strip()
    if s.startswith("["):
        return from_json(s)
    return from_text(s)
