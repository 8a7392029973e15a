"""Sparse multivariate polynomials with exact (int or Fraction) coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class Poly:
    """Polynomial over named variables, stored as ``{exponent tuple: coefficient}``.

    Zero coefficients are never stored. Scalars (ints, Fractions) are promoted
    automatically in arithmetic, so ``1 + x * q`` works when ``x`` and ``q``
    are generator polynomials over the same variables.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: dict | None = None):
        self.vars = tuple(vars)
        self.terms = {}
        for exps, c in (terms or {}).items():
            if c:
                exps = tuple(exps)
                if len(exps) != len(self.vars) or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent tuple {exps} for variables {self.vars}")
                self.terms[exps] = self.terms.get(exps, 0) + c
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def constant(cls, vars, c) -> Poly:
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def gens(cls, *vars: str) -> tuple[Poly, ...]:
        out = []
        for i in range(len(vars)):
            e = [0] * len(vars)
            e[i] = 1
            out.append(cls(vars, {tuple(e): 1}))
        return tuple(out)

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        if isinstance(other, Rational):
            return Poly.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def __call__(self, *values):
        """Evaluate exactly at the given point (ints or Fractions)."""
        if len(values) != len(self.vars):
            raise ValueError(f"expected {len(self.vars)} values")
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                term *= Fraction(v) ** k if isinstance(v, Fraction) else v**k
            total += term
        return total

    def coefficient(self, *exps: int):
        return self.terms.get(tuple(exps), 0)

    def degree(self, var: str) -> int:
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=0)

    def substitute(self, var: str, value: Poly) -> Poly:
        """Replace ``var`` by a polynomial over the same variables."""
        i = self.vars.index(var)
        out = Poly(self.vars)
        for e, c in self.terms.items():
            rest = list(e)
            rest[i] = 0
            out = out + Poly(self.vars, {tuple(rest): c}) * value ** e[i]
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: tuple(reversed(e))):
            c = self.terms[e]
            factors = [f"{v}^{k}" for v, k in zip(self.vars, e) if k]
            parts.append("*".join([str(c)] + factors) if factors else str(c))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.vars}, {str(self)!r})"


def bipoly(terms: dict | None = None) -> Poly:
    """Polynomial in ``x`` (half the vertical count) and ``q`` (rank)."""
    return Poly(("x", "q"), terms)


def parse_poly(text: str, vars: tuple[str, ...]) -> Poly:
    """Inverse of ``str(Poly)``."""
    terms: dict = {}
    text = text.strip()
    if text == "0":
        return Poly(vars)
    for part in text.split(" + "):
        pieces = part.strip().split("*")
        c = Fraction(pieces[0])
        c = int(c) if c.denominator == 1 else c
        e = [0] * len(vars)
        for f in pieces[1:]:
            name, _, k = f.partition("^")
            e[vars.index(name)] += int(k or 1)
        terms[tuple(e)] = terms.get(tuple(e), 0) + c
    return Poly(vars, terms)
