"""Sparse multivariate polynomials over the integers.

The coefficient ring of the Hecke algebras is Z[a] or Z[a, b_1..b_{d-1}];
a polynomial is a map from exponent vectors (fixed arity = number of
variables, variable 0 is ``a``) to nonzero Python ints.  Values are
immutable and hashable, equal polynomials have identical term maps, and
text rendering uses a fixed degree-lex order so renderings are canonical.

No GCDs, no factorization, no Laurent exponents: the Hecke relations are
normalized to live over the plain polynomial ring.
"""

from __future__ import annotations

from .errors import ArityMismatch

__all__ = ["Poly", "var_names"]


def var_names(arity: int) -> list[str]:
    return ["a"] + [f"b_{i}" for i in range(1, arity)]


class Poly:
    """Immutable sparse polynomial with arbitrary-precision int coefficients."""

    __slots__ = ("arity", "terms", "_hash")

    def __init__(self, arity: int, terms: dict[tuple[int, ...], int]):
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", {m: c for m, c in terms.items() if c})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def const(arity: int, c: int) -> Poly:
        return Poly(arity, {(0,) * arity: c} if c else {})

    @staticmethod
    def variable(arity: int, i: int) -> Poly:
        mono = tuple(1 if j == i else 0 for j in range(arity))
        return Poly(arity, {mono: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: Poly) -> None:
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Poly(self.arity, terms)

    def __neg__(self) -> Poly:
        return Poly(self.arity, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        terms: dict[tuple[int, ...], int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return Poly(self.arity, terms)

    def scaled(self, c: int) -> Poly:
        return Poly(self.arity, {m: c * v for m, v in self.terms.items()})

    def specialize(self, assignment) -> int:
        """Evaluate at integer values; ``assignment`` is a full dict over
        variable names or a sequence of length arity."""
        if isinstance(assignment, dict):
            names = var_names(self.arity)
            missing = [nm for nm in names if nm not in assignment]
            if missing:
                raise ArityMismatch(f"assignment is missing {missing}")
            values = [assignment[nm] for nm in names]
        else:
            values = list(assignment)
            if len(values) != self.arity:
                raise ArityMismatch(f"need {self.arity} values, got {len(values)}")
        total = 0
        for mono, coeff in self.terms.items():
            prod = coeff
            for v, p in zip(values, mono):
                if p:
                    prod *= v**p
            total += prod
        return total

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.arity, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        if not self.terms:
            return "0"
        names = var_names(self.arity)
        # degree-lex, a before b_1 before b_2 ..., highest first
        order = sorted(self.terms, key=lambda m: (sum(m), m), reverse=True)
        pieces = []
        for mono in order:
            coeff = self.terms[mono]
            factors = []
            for name, p in zip(names, mono):
                if p == 1:
                    factors.append(name)
                elif p > 1:
                    factors.append(f"{name}^{p}")
            if not factors:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(coeff))] + factors)
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Poly({self})"
