"""Exact sparse bivariate polynomials over the integers.

A :class:`Polynomial` maps exponent pairs ``(a, b)`` (the monomial
``x^a * y^b``) to nonzero Python integers.  Univariate coefficient slices are
dense :class:`UnivariatePolynomial` objects, stored lowest degree first.

Text input follows a small grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := INT | 'x' ['^' UINT] | 'y' ['^' UINT] | '(' 'x' '^' UINT ')'

The parenthesised block ``(x^mu)`` stands for a polynomial in x of exact
degree mu and is only accepted by :func:`parse_pattern`, which fills it with
seeded random nonzero coefficients.
"""

from __future__ import annotations

import math
import random
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import ParseError

Exponent = tuple[int, int]

VARIABLES = ("x", "y")


class UnivariatePolynomial:
    """Dense integer polynomial, ``coefficients[i]`` multiplies ``t^i``."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "UnivariatePolynomial":
        return cls([0] * degree + [coefficient])

    @property
    def degree(self) -> int | None:
        return len(self.coefficients) - 1 if self.coefficients else None

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return len(self.coefficients) <= 1

    def valuation(self) -> int | None:
        """Multiplicity of the root 0 (``None`` for the zero polynomial)."""
        for i, c in enumerate(self.coefficients):
            if c:
                return i
        return None

    def content(self) -> int:
        g = 0
        for c in self.coefficients:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "UnivariatePolynomial":
        """Content-free part with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading_coefficient < 0:
            g = -g
        return UnivariatePolynomial(c // g for c in self.coefficients)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __add__(self, other):
        if isinstance(other, int):
            other = UnivariatePolynomial([other])
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return UnivariatePolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePolynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return UnivariatePolynomial(c * other for c in self.coefficients)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return UnivariatePolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UnivariatePolynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = UnivariatePolynomial([other])
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(("upoly", self.coefficients))

    def __repr__(self):
        return f"UnivariatePolynomial({list(self.coefficients)})"

    def to_text(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        terms = {(i, 0): c for i, c in enumerate(self.coefficients) if c}
        text = Polynomial(terms).to_text()
        return text if var == "x" else text.replace("x", var)

    __str__ = to_text


def _frac_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        factor = num[-1] / den[-1]
        q[shift] = factor
        for i, d in enumerate(den):
            num[shift + i] -= factor * d
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return q, num


def _integer_primitive(coeffs: list[Fraction]) -> UnivariatePolynomial:
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return UnivariatePolynomial(int(c * lcm) for c in coeffs).primitive()


def exact_quotient(u: UnivariatePolynomial, d: UnivariatePolynomial):
    """Return ``u / d`` if ``d`` divides ``u`` over the integers, else ``None``."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if u.is_zero():
        return u
    q, r = _frac_divmod([Fraction(c) for c in u.coefficients], [Fraction(c) for c in d.coefficients])
    if r or any(c.denominator != 1 for c in q):
        return None
    return UnivariatePolynomial(int(c) for c in q)


def divides(d: UnivariatePolynomial, u: UnivariatePolynomial) -> bool:
    """True if ``d`` divides ``u`` over the rationals."""
    if d.is_zero():
        return u.is_zero()
    if u.is_zero():
        return True
    _, r = _frac_divmod([Fraction(c) for c in u.coefficients], [Fraction(c) for c in d.coefficients])
    return not r


def multiplicity(factor: UnivariatePolynomial, u: UnivariatePolynomial) -> int:
    """Largest k with ``factor**k`` dividing ``u`` (rationally).

    Constant factors carry no information and give 0.
    """
    if factor.is_constant():
        return 0
    if u.is_zero():
        raise ValueError("multiplicity in the zero polynomial is unbounded")
    den = [Fraction(c) for c in factor.coefficients]
    cur = [Fraction(c) for c in u.coefficients]
    k = 0
    while True:
        q, r = _frac_divmod(cur, den)
        if r:
            return k
        k += 1
        cur = q


def univariate_gcd(u: UnivariatePolynomial, v: UnivariatePolynomial) -> UnivariatePolynomial:
    """Greatest common divisor over Q, returned primitive with positive lead."""
    if u.is_zero() and v.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a = [Fraction(c) for c in u.coefficients]
    b = [Fraction(c) for c in v.coefficients]
    while b:
        _, r = _frac_divmod(a, b)
        a, b = b, r
    return _integer_primitive(a)


class Polynomial:
    """Immutable sparse polynomial in x and y with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean: dict[Exponent, int] = {}
        for (a, b), c in (terms or {}).items():
            a, b, c = int(a), int(b), int(c)
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in monomial x^{a}*y^{b}")
            if c:
                clean[(a, b)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def from_items(cls, items: Iterable[tuple[Exponent, int]]) -> "Polynomial":
        """Sum repeated monomials (unlike the constructor, which expects unique keys)."""
        acc: dict[Exponent, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        return cls(acc)

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> "Polynomial":
        return cls({(a, b): c})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self._terms.items())

    def coefficient(self, a: int, b: int) -> int:
        return self._terms.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # arithmetic

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial({(0, 0): other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Exponent, int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial({(0, 0): 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial({(0, 0): other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # structure

    def swap_variables(self) -> "Polynomial":
        """Exchange the roles of x and y."""
        return Polynomial({(b, a): c for (a, b), c in self._terms.items()})

    def total_degree(self) -> int | None:
        return max((a + b for a, b in self._terms), default=None)

    def evaluate(self, x, y):
        return sum(c * x**a * y**b for (a, b), c in self._terms.items())

    def to_text(self) -> str:
        """Canonical text: terms by descending y power, then descending x power."""
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self._terms.items(), key=lambda t: (-t[0][1], -t[0][0])):
            factors = []
            if a:
                factors.append("x" if a == 1 else f"x^{a}")
            if b:
                factors.append("y" if b == 1 else f"y^{b}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _check_var(var: str) -> int:
    if var not in VARIABLES:
        raise ValueError(f"variable must be 'x' or 'y', got {var!r}")
    return VARIABLES.index(var)


def degree_in(p: Polynomial, var: str) -> int | None:
    """Largest exponent of ``var`` in ``p``; ``None`` for the zero polynomial."""
    idx = _check_var(var)
    return max((e[idx] for e, _ in p.items()), default=None)


def coefficient_slice(p: Polynomial, var: str, power: int) -> UnivariatePolynomial:
    """The polynomial in the other variable multiplying ``var**power``."""
    idx = _check_var(var)
    other = 1 - idx
    coeffs: dict[int, int] = {}
    for e, c in p.items():
        if e[idx] == power:
            coeffs[e[other]] = c
    if not coeffs:
        return UnivariatePolynomial()
    dense = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        dense[k] = c
    return UnivariatePolynomial(dense)


def leading_slice(p: Polynomial, var: str) -> UnivariatePolynomial:
    """Coefficient of the top power of ``var`` (A_0 when ``var`` is y)."""
    d = degree_in(p, var)
    return UnivariatePolynomial() if d is None else coefficient_slice(p, var, d)


def support(p: Polynomial) -> frozenset[Exponent]:
    return frozenset(e for e, _ in p.items())


# parsing

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([xy])|(\^)|([-+*()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN_RE.match(stripped, pos)
        if not m or m.end() == pos:
            col = pos + 1 + (len(stripped[pos:]) - len(stripped[pos:].lstrip()))
            raise ParseError(f"unexpected character {stripped[col - 1]!r}", col, text)
        if m.group(1) is not None:
            tokens.append(("INT", int(m.group(1)), m.start(1) + 1))
        elif m.group(2) is not None:
            tokens.append(("VAR", m.group(2), m.start(2) + 1))
        elif m.group(3) is not None:
            tokens.append(("^", "^", m.start(3) + 1))
        else:
            tokens.append((m.group(4), m.group(4), m.start(4) + 1))
        pos = m.end()
    tokens.append(("END", None, len(stripped) + 1))
    return tokens


class _Parser:
    """Recursive descent over the token list.

    Produces a list of terms; each term is ``(sign, [factor, ...])`` where a
    factor is ``("int", n)``, ``("mono", (a, b))`` or ``("block", mu)``.
    """

    def __init__(self, text: str, allow_blocks: bool):
        self.text = text
        self.allow_blocks = allow_blocks
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind!r}", tok)
        self.i += 1
        return tok

    def fail(self, message, tok):
        got = "end of input" if tok[0] == "END" else repr(str(tok[1]))
        raise ParseError(f"{message}, got {got}", tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "END":
            raise ParseError("empty input", 1, self.text)
        terms = []
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        terms.append((sign, self.term()))
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            terms.append((sign, self.term()))
        tok = self.peek()
        if tok[0] != "END":
            self.fail("expected '+', '-' or '*'", tok)
        return terms

    def term(self):
        factors = [self.factor()]
        while self.peek()[0] == "*":
            self.take()
            factors.append(self.factor())
        return factors

    def exponent(self):
        self.take("^")
        tok = self.peek()
        if tok[0] == "-":
            raise ParseError("negative exponent", tok[2], self.text)
        if tok[0] != "INT":
            self.fail("expected exponent", tok)
        return self.take()[1]

    def factor(self):
        tok = self.peek()
        if tok[0] == "INT":
            self.take()
            return ("int", tok[1])
        if tok[0] == "VAR":
            self.take()
            power = self.exponent() if self.peek()[0] == "^" else 1
            return ("mono", (power, 0) if tok[1] == "x" else (0, power))
        if tok[0] == "(":
            if not self.allow_blocks:
                raise ParseError("'(x^mu)' blocks are only allowed in patterns", tok[2], self.text)
            self.take()
            var = self.take("VAR")
            if var[1] != "x":
                raise ParseError("pattern blocks must be in x", var[2], self.text)
            mu = self.exponent()
            self.take(")")
            return ("block", mu)
        self.fail("expected a number, 'x', 'y' or '('", tok)


def _expand(terms, draw) -> Polynomial:
    acc: dict[Exponent, int] = {}
    for sign, factors in terms:
        partial: dict[Exponent, int] = {(0, 0): sign}
        for kind, val in factors:
            if kind == "int":
                partial = {e: c * val for e, c in partial.items()}
            elif kind == "mono":
                partial = {(e[0] + val[0], e[1] + val[1]): c for e, c in partial.items()}
            else:
                block = draw(val)
                nxt: dict[Exponent, int] = {}
                for (a, b), c in partial.items():
                    for j, cj in enumerate(block):
                        nxt[(a + j, b)] = nxt.get((a + j, b), 0) + c * cj
                partial = nxt
        for e, c in partial.items():
            acc[e] = acc.get(e, 0) + c
    return Polynomial(acc)


def parse_polynomial(text: str) -> Polynomial:
    """Parse a concrete polynomial such as ``"x^2*y^3 + 5"``."""
    return _expand(_Parser(text, allow_blocks=False).parse(), None)


def random_nonzero(rng: random.Random, bound: int) -> int:
    """Uniform draw from the nonzero integers in ``[-bound, bound]``."""
    v = rng.randint(1, 2 * bound)
    return v if v <= bound else bound - v


def parse_pattern(text: str, seed: int, bound: int = 99) -> Polynomial:
    """Parse a pattern and fill each ``(x^mu)`` block with random coefficients.

    Every coefficient of every block is a nonzero integer in
    ``[-bound, bound]`` drawn from ``random.Random(seed)`` in reading order,
    so the block has exact degree mu.  The result depends only on
    ``(text, seed, bound)``.
    """
    if bound < 1:
        raise ValueError("coefficient bound must be positive")
    rng = random.Random(seed)
    return _expand(
        _Parser(text, allow_blocks=True).parse(),
        lambda mu: [random_nonzero(rng, bound) for _ in range(mu + 1)],
    )
