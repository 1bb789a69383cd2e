"""Exact sparse polynomials with arbitrary-precision integer coefficients.

``BivariatePolynomial`` stores terms as ``{(xdeg, ydeg): coeff}`` with no zero
coefficients, so two polynomials are equal exactly when their term maps are.
The first variable is called ``x`` by default; after a monomial substitution
such as x -> y*t it is rendered as ``t`` instead (see ``names`` arguments).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

from .errors import (
    DivisionByMonomialFailed,
    NonUnitConstantTerm,
    PolynomialParseError,
    RemainderNonZero,
)

Exponent = Tuple[int, int]
Scalar = Union[int, Fraction]


def _graded(key: Exponent) -> Tuple[int, int]:
    return (key[0] + key[1], key[0])


class BivariatePolynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, int] = {}
        for (a, b), c in items:
            a, b, c = int(a), int(b), int(c)
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in term ({a}, {b})")
            if c:
                s = clean.get((a, b), 0) + c
                if s:
                    clean[(a, b)] = s
                else:
                    clean.pop((a, b), None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[Exponent, int]) -> "BivariatePolynomial":
        # caller guarantees canonical form
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "BivariatePolynomial":
        return cls._wrap({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, xdeg: int = 0, ydeg: int = 0, coeff: int = 1) -> "BivariatePolynomial":
        if xdeg < 0 or ydeg < 0:
            raise ValueError("negative exponent")
        return cls._wrap({(xdeg, ydeg): coeff} if coeff else {})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, xdeg: int, ydeg: int) -> int:
        return self._terms.get((xdeg, ydeg), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial."""
        return max((a + b for a, b in self._terms), default=-1)

    def min_total_degree(self) -> int:
        return min((a + b for a, b in self._terms), default=-1)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items(), key=lambda kv: _graded(kv[0]))

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"BivariatePolynomial({to_canonical_string(self)!r})"

    def __str__(self) -> str:
        return to_canonical_string(self)

    # -- ring operations --------------------------------------------------

    def __add__(self, other) -> "BivariatePolynomial":
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return BivariatePolynomial._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "BivariatePolynomial":
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "BivariatePolynomial":
        return (-self) + other

    def __mul__(self, other) -> "BivariatePolynomial":
        if isinstance(other, int):
            if not other:
                return ZERO
            return BivariatePolynomial._wrap({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        out: dict[Exponent, int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariatePolynomial._wrap({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BivariatePolynomial":
        return power(self, k)

    def shift(self, xdeg: int = 0, ydeg: int = 0) -> "BivariatePolynomial":
        """Multiply by the monomial x^xdeg y^ydeg."""
        return BivariatePolynomial._wrap(
            {(a + xdeg, b + ydeg): c for (a, b), c in self._terms.items()}
        )

    def divide_by_monomial(self, xdeg: int = 0, ydeg: int = 0) -> "BivariatePolynomial":
        out = {}
        for (a, b), c in self._terms.items():
            if a < xdeg or b < ydeg:
                raise DivisionByMonomialFailed(
                    f"term x^{a}*y^{b} is not divisible by x^{xdeg}*y^{ydeg}"
                )
            out[(a - xdeg, b - ydeg)] = c
        return BivariatePolynomial._wrap(out)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> list:
        return [[a, b, str(c)] for (a, b), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data) -> "BivariatePolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls((((int(a), int(b)), int(c)) for a, b, c in data))


ZERO = BivariatePolynomial()
ONE = BivariatePolynomial.constant(1)
X = BivariatePolynomial.monomial(1, 0)
Y = BivariatePolynomial.monomial(0, 1)
ONE_MINUS_X_MINUS_Y = BivariatePolynomial({(0, 0): 1, (1, 0): -1, (0, 1): -1})


def add(p: BivariatePolynomial, q: BivariatePolynomial) -> BivariatePolynomial:
    return p + q


def mul(p: BivariatePolynomial, q: BivariatePolynomial) -> BivariatePolynomial:
    return p * q


def power(p: BivariatePolynomial, k: int) -> BivariatePolynomial:
    if k < 0:
        raise ValueError("negative power")
    result, base = ONE, p
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def divide_exact(num: BivariatePolynomial, div: BivariatePolynomial) -> BivariatePolynomial:
    """Return ``q`` with ``q * div == num``.

    The divisor must have constant term +1 or -1. Minimal terms of the residual
    (graded order) are eliminated against that constant term, one total degree
    at a time; once the residual's lowest total degree exceeds the numerator's
    highest, no polynomial quotient exists and ``RemainderNonZero`` is raised.
    """
    c0 = div.coeff(0, 0)
    if c0 not in (1, -1):
        raise NonUnitConstantTerm(f"divisor constant term is {c0}, expected +-1")
    if num.is_zero():
        return ZERO
    rest = [(k, c) for k, c in div.items() if k != (0, 0)]
    bound = num.total_degree()
    residual = dict(num.items())
    quotient: dict[Exponent, int] = {}
    while residual:
        d = min(a + b for a, b in residual)
        if d > bound:
            raise RemainderNonZero(
                f"not divisible by {to_canonical_string(div)}: residual of degree {d} remains"
            )
        layer = sorted((k for k in residual if k[0] + k[1] == d), key=_graded)
        for a, b in layer:
            qc = residual.pop((a, b)) * c0
            quotient[(a, b)] = qc
            for (da, db), dc in rest:
                k = (a + da, b + db)
                s = residual.get(k, 0) - qc * dc
                if s:
                    residual[k] = s
                else:
                    residual.pop(k, None)
    return BivariatePolynomial._wrap(quotient)


def substitute_monomials(
    p: BivariatePolynomial, x_image: Exponent, y_image: Exponent
) -> BivariatePolynomial:
    """Replace x and y by single monomials given as exponent pairs.

    ``substitute_monomials(p, (1, 1), (0, 1))`` is the map x -> t*y, y -> y,
    the result being read over the variables (t, y).
    """
    (xa, xb), (ya, yb) = x_image, y_image
    if min(xa, xb, ya, yb) < 0:
        raise ValueError("monomial images must have nonnegative exponents")
    return BivariatePolynomial(
        (((a * xa + b * ya, a * xb + b * yb), c) for (a, b), c in p.items())
    )


def coefficient_slice(p: BivariatePolynomial, ydeg: int) -> "UnivariatePolynomial":
    """Terms of exact y-degree ``ydeg``, as a polynomial in the first variable."""
    return UnivariatePolynomial({a: c for (a, b), c in p.items() if b == ydeg})


def eval_rational(p: BivariatePolynomial, xv: Scalar, yv: Scalar) -> Fraction:
    xv, yv = Fraction(xv), Fraction(yv)
    xpow: dict[int, Fraction] = {}
    ypow: dict[int, Fraction] = {}
    total = Fraction(0)
    for (a, b), c in p.items():
        if a not in xpow:
            xpow[a] = xv**a
        if b not in ypow:
            ypow[b] = yv**b
        total += c * xpow[a] * ypow[b]
    return total


def _monomial_text(c: int, factors: list[str], first: bool) -> str:
    mag = abs(c)
    body = "*".join(factors)
    if not factors:
        core = str(mag)
    elif mag == 1:
        core = body
    else:
        core = f"{mag}*{body}"
    if first:
        return ("-" if c < 0 else "") + core
    return (" - " if c < 0 else " + ") + core


def _var(name: str, e: int) -> list[str]:
    if e == 0:
        return []
    return [name] if e == 1 else [f"{name}^{e}"]


def to_canonical_string(p: BivariatePolynomial, names: tuple[str, str] = ("x", "y")) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, ((a, b), c) in enumerate(p.sorted_terms()):
        parts.append(_monomial_text(c, _var(names[0], a) + _var(names[1], b), i == 0))
    return "".join(parts)


def _split_signed_terms(text: str) -> list[tuple[int, str]]:
    s = "".join(text.split())
    if not s:
        raise PolynomialParseError("empty polynomial text")
    out = []
    i, sign = 0, 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    start = i
    while i <= len(s):
        if i == len(s) or (s[i] in "+-" and i > start and s[i - 1] != "^"):
            body = s[start:i]
            if not body:
                raise PolynomialParseError(f"empty term in {text!r}")
            out.append((sign, body))
            if i < len(s):
                sign = -1 if s[i] == "-" else 1
            start = i + 1
        i += 1
    return out


def _parse_exponents(body: str, names: tuple[str, ...], text: str) -> tuple[int, list[int]]:
    coeff = None
    exps = [0] * len(names)
    seen = set()
    for idx, factor in enumerate(body.split("*")):
        if not factor:
            raise PolynomialParseError(f"dangling '*' in {text!r}")
        if factor.isdigit():
            if idx != 0 or coeff is not None:
                raise PolynomialParseError(f"coefficient must lead its term in {text!r}")
            coeff = int(factor)
            continue
        name, caret, e = factor.partition("^")
        if name not in names or name in seen:
            raise PolynomialParseError(f"unexpected factor {factor!r} in {text!r}")
        seen.add(name)
        if caret and not e.isdigit():
            raise PolynomialParseError(f"bad exponent in {factor!r}")
        exps[names.index(name)] = int(e) if caret else 1
    return (1 if coeff is None else coeff), exps


def parse_polynomial(text: str, names: tuple[str, str] = ("x", "y")) -> BivariatePolynomial:
    """Parse the text form emitted by ``to_canonical_string`` (whitespace-insensitive)."""
    if "".join(text.split()) == "0":
        return ZERO
    terms = []
    for sign, body in _split_signed_terms(text):
        c, (a, b) = _parse_exponents(body, names, text)
        terms.append(((a, b), sign * c))
    return BivariatePolynomial(terms)


class UnivariatePolynomial:
    """Sparse integer polynomial in one variable, ``{degree: coeff}``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for d, c in items:
            d, c = int(d), int(c)
            if d < 0:
                raise ValueError("negative degree")
            s = clean.get(d, 0) + c
            if s:
                clean[d] = s
            else:
                clean.pop(d, None)
        self._terms = clean

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int]) -> "UnivariatePolynomial":
        return cls(enumerate(coeffs))

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, d: int) -> int:
        return self._terms.get(d, 0)

    def degree(self) -> int:
        return max(self._terms, default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UnivariatePolynomial({0: other})
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        if isinstance(other, int):
            other = UnivariatePolynomial({0: other})
        return UnivariatePolynomial(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial({d: -c for d, c in self._terms.items()})

    def __sub__(self, other) -> "UnivariatePolynomial":
        if isinstance(other, int):
            other = UnivariatePolynomial({0: other})
        return self + (-other)

    def __mul__(self, other) -> "UnivariatePolynomial":
        if isinstance(other, int):
            return UnivariatePolynomial({d: c * other for d, c in self._terms.items()})
        out: dict[int, int] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UnivariatePolynomial":
        result = UnivariatePolynomial({0: 1})
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, value: Scalar) -> Fraction:
        value = Fraction(value)
        return sum((c * value**d for d, c in self._terms.items()), Fraction(0))

    def to_string(self, name: str = "t") -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, d in enumerate(sorted(self._terms)):
            parts.append(_monomial_text(self._terms[d], _var(name, d), i == 0))
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({self.to_string()!r})"

    def to_json(self) -> list:
        return [[d, str(self._terms[d])] for d in sorted(self._terms)]

    @classmethod
    def from_json(cls, data) -> "UnivariatePolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls((int(d), int(c)) for d, c in data)

    @classmethod
    def parse(cls, text: str, name: str = "t") -> "UnivariatePolynomial":
        if "".join(text.split()) == "0":
            return cls()
        terms = []
        for sign, body in _split_signed_terms(text):
            c, (d,) = _parse_exponents(body, (name,), text)
            terms.append((d, sign * c))
        return cls(terms)
