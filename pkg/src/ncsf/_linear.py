"""Shared plumbing for sparse linear combinations with exact coefficients."""

from fractions import Fraction

from .errors import BasisMismatchError

_SCALARS = (int, Fraction)


def normalize_terms(terms, check_index) -> dict:
    """Canonicalize indices, coerce coefficients to Fraction, drop zeros."""
    out = {}
    for index, coeff in dict(terms).items():
        idx = check_index(index)
        if not isinstance(coeff, _SCALARS):
            raise TypeError(f"coefficients must be exact (int or Fraction): {coeff!r}")
        c = Fraction(coeff)
        if c:
            out[idx] = out.get(idx, Fraction(0)) + c
    return {k: v for k, v in out.items() if v}


class LinearCombinationOps:
    """Mixin: +, -, unary -, and exact scalar multiples for basis-tagged elements."""

    def _peer(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if other.basis != self.basis:
            raise BasisMismatchError(
                f"cannot combine {self.basis!r} terms with {other.basis!r} terms; convert first"
            )
        return other

    def __add__(self, other):
        other = self._peer(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self.terms)
        for idx, c in other.terms.items():
            merged[idx] = merged.get(idx, Fraction(0)) + c
        return type(self)(self.basis, merged)

    def __sub__(self, other):
        other = self._peer(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self.terms)
        for idx, c in other.terms.items():
            merged[idx] = merged.get(idx, Fraction(0)) - c
        return type(self)(self.basis, merged)

    def __neg__(self):
        return type(self)(self.basis, {idx: -c for idx, c in self.terms.items()})

    def __mul__(self, scalar):
        if not isinstance(scalar, _SCALARS):
            return NotImplemented
        return type(self)(self.basis, {idx: c * scalar for idx, c in self.terms.items()})

    __rmul__ = __mul__

    def degrees(self) -> set[int]:
        return {sum(idx) for idx in self.terms}

    def is_zero(self) -> bool:
        return not self.terms
