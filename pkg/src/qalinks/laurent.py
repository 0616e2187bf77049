"""Sparse integer Laurent polynomials with half-integer exponents.

A term ``c * t^(k/2)`` is stored as ``{k: c}``; ``k`` is the *twice exponent*.
The same type carries Kauffman brackets in ``A`` (twice exponent ``2 * power``
so every stored key is even) and Jones polynomials in ``t^(1/2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


@dataclass(frozen=True)
class GaussInt:
    """Exact Gaussian integer ``re + im*i``."""

    re: int = 0
    im: int = 0

    def __add__(self, other: GaussInt) -> GaussInt:
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussInt) -> GaussInt:
        return GaussInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: GaussInt) -> GaussInt:
        return GaussInt(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __str__(self):
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


# i^k for k mod 4
_I_POWERS = (GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1))


class HalfLaurent:
    """Immutable sparse polynomial in ``t^(1/2)`` with integer coefficients.

    >>> p = HalfLaurent({-1: -1, -5: -1})
    >>> str(p)
    '-t^(-5/2)-t^(-1/2)'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for k, c in items:
            if not isinstance(k, int) or not isinstance(c, int):
                raise TypeError("twice exponents and coefficients must be integers")
            acc[k] = acc.get(k, 0) + c
        self._terms = {k: c for k, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def monomial(cls, sign: int, twice_exponent: int) -> HalfLaurent:
        return cls({twice_exponent: sign})

    @classmethod
    def constant(cls, c: int) -> HalfLaurent:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, twice_exponent: int) -> int:
        return self._terms.get(twice_exponent, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = HalfLaurent.constant(other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = HalfLaurent.constant(other)
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return HalfLaurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = HalfLaurent.constant(other)
        return poly_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfLaurent({k: c * other for k, c in self._terms.items()})
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use mono_mul")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute_inverse(self) -> HalfLaurent:
        """Return ``p(t^-1)``; the Jones polynomial of the mirror image."""
        return HalfLaurent({-k: c for k, c in self._terms.items()})

    def to_text(self, var: str = "t") -> str:
        return render(self, var)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"HalfLaurent({self._terms!r})"


ZERO = HalfLaurent()
ONE = HalfLaurent.constant(1)
# -A^-2 - A^2, the value of a disjoint circle, in twice-exponent units of A
LOOP_A = HalfLaurent({-4: -1, 4: -1})


def poly_add(p: HalfLaurent, q: HalfLaurent) -> HalfLaurent:
    terms = dict(p._terms)
    for k, c in q._terms.items():
        terms[k] = terms.get(k, 0) + c
    return HalfLaurent(terms)


def poly_mul(p: HalfLaurent, q: HalfLaurent) -> HalfLaurent:
    terms: dict[int, int] = {}
    for k1, c1 in p._terms.items():
        for k2, c2 in q._terms.items():
            terms[k1 + k2] = terms.get(k1 + k2, 0) + c1 * c2
    return HalfLaurent(terms)


def mono_mul(p: HalfLaurent, sign: int, twice_exponent: int) -> HalfLaurent:
    """Multiply ``p`` by ``sign * t^(twice_exponent/2)``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return HalfLaurent({k + twice_exponent: sign * c for k, c in p._terms.items()})


def evaluate_at_i(p: HalfLaurent) -> GaussInt:
    """Evaluate at ``t^(1/2) = i`` (so ``t = -1``), exactly."""
    re_part = im_part = 0
    for k, c in p._terms.items():
        unit = _I_POWERS[k % 4]
        re_part += c * unit.re
        im_part += c * unit.im
    return GaussInt(re_part, im_part)


def degree_stats(p: HalfLaurent) -> tuple[int, int, int]:
    """Return ``(min_twice_exp, max_twice_exp, breadth_twice)``."""
    if p.is_zero():
        raise ValueError("undefined degree: zero polynomial")
    keys = list(p._terms)
    return keys[0], keys[-1], keys[-1] - keys[0]


def lattice_coefficients(p: HalfLaurent) -> list[int]:
    """Coefficients on the step-one lattice in ``t`` from the lowest term up.

    Interior gaps are filled with zeros. Raises ``ValueError`` when the support
    mixes integer and half-integer powers or when ``p`` is zero.
    """
    lo, hi, _ = degree_stats(p)
    if any((k - lo) % 2 for k in p._terms):
        raise ValueError("support is not on a single integer-step lattice "
                         "(mixed integer and half-integer exponents)")
    return [p[k] for k in range(lo, hi + 1, 2)]


def _format_exponent(twice_exponent: int) -> str:
    exp = Fraction(twice_exponent, 2)
    text = str(exp)
    if exp < 0 or exp.denominator != 1:
        return f"({text})"
    return text


def render(p: HalfLaurent, var: str = "t") -> str:
    """Canonical text: ascending exponents, e.g. ``-t^(-5/2)-t^(-1/2)``."""
    if p.is_zero():
        return "0"
    out = []
    for k, c in p._terms.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 2 else f"{var}^{_format_exponent(k)}"
            body = power if mag == 1 else f"{mag}*{power}"
        out.append(sign + body)
    text = "".join(out)
    return text[1:] if text.startswith("+") else text


_TERM = re.compile(
    r"\s*([+-])?\s*(\d+)?\s*(\*)?\s*(?:([A-Za-z])\s*(?:\^\s*(?:\(\s*(-?\d+(?:\s*/\s*2)?)\s*\)|(\d+(?:/2)?)))?)?\s*"
)


def parse_poly(text: str, var: str = "t") -> HalfLaurent:
    """Parse the canonical rendering (and close variants) back to a polynomial.

    >>> parse_poly("t^(-2)-t^(-1)+1-t+t^2") == HalfLaurent({-4: 1, -2: -1, 0: 1, 2: -1, 4: 1})
    True
    """
    s = text.strip()
    if s == "0":
        return ZERO
    if not s:
        raise ValueError("empty polynomial text")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, digits, star, name, paren_exp, bare_exp = m.groups()
        if m.end() == pos or (digits is None and name is None):
            raise ValueError(f"cannot parse polynomial term at position {pos}: {s[pos:]!r}")
        if sign is None and not first:
            raise ValueError(f"missing sign before term at position {pos}")
        if name is not None and name != var:
            raise ValueError(f"unexpected variable {name!r} at position {pos}; expected {var!r}")
        if star and name is None:
            raise ValueError(f"dangling '*' at position {pos}")
        coeff = int(digits) if digits is not None else 1
        if sign == "-":
            coeff = -coeff
        if name is None:
            twice = 0
        else:
            raw = paren_exp if paren_exp is not None else bare_exp
            exp = Fraction(raw.replace(" ", "")) if raw is not None else Fraction(1)
            if (2 * exp).denominator != 1:
                raise ValueError(f"exponent {raw} is not a multiple of 1/2")
            twice = int(2 * exp)
        terms[twice] = terms.get(twice, 0) + coeff
        pos = m.end()
        first = False
    return HalfLaurent(terms)
