"""Group algebras of symmetric groups and their descent subalgebras.

Permutations are 1-based tuples in one-line notation, composed by
(sigma . tau)(i) = sigma(tau(i)).  The descent algebra of degree n is
spanned by the class sums over descent sets; ``xi`` and ``delta`` build
the two standard spanning families, and ``psi`` / ``psi_inverse`` realize
the linear isomorphism with NSym that sends the equal-descent-set class
sum of alpha to the ribbon element of alpha.

Building a group algebra of degree above the configured bound (default 8,
override with the NCSF_MAX_N environment variable) raises
ResourceLimitError: degree 9 already means 362880 basis permutations.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import accumulate, permutations

from .compositions import Composition, Partition, check_composition, comp_of
from .errors import DegreeMismatchError, NotInDescentSpanError, ResourceLimitError
from .nsym import NSymElement, nsym_convert

__all__ = [
    "DEFAULT_MAX_DEGREE",
    "max_group_degree",
    "Permutation",
    "check_permutation",
    "identity_permutation",
    "compose",
    "cycle_type",
    "descent_set_perm",
    "descent_composition_perm",
    "GroupAlgebraElement",
    "group_algebra_element",
    "xi",
    "delta",
    "convolve",
    "descent_span_coordinates",
    "psi",
    "psi_inverse",
]

DEFAULT_MAX_DEGREE = 8

Permutation = tuple[int, ...]


def max_group_degree() -> int:
    """The configured degree bound, from NCSF_MAX_N when set."""
    value = os.environ.get("NCSF_MAX_N")
    if value is None or not value.strip():
        return DEFAULT_MAX_DEGREE
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"NCSF_MAX_N must be an integer: {value!r}") from None


def _check_degree(n: int) -> None:
    if n < 0:
        raise ValueError(f"degree must be nonnegative: {n}")
    bound = max_group_degree()
    if n > bound:
        raise ResourceLimitError(
            f"degree {n} exceeds the group-algebra bound {bound}"
            " (set NCSF_MAX_N to raise it)"
        )


def check_permutation(seq) -> Permutation:
    sigma = tuple(seq)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"not a permutation of [{len(sigma)}] in one-line notation: {sigma}")
    return sigma


def identity_permutation(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """(sigma . tau)(i) = sigma(tau(i))."""
    if len(sigma) != len(tau):
        raise DegreeMismatchError(f"cannot compose degrees {len(sigma)} and {len(tau)}")
    return tuple(sigma[t - 1] for t in tau)


def cycle_type(sigma: Permutation) -> Partition:
    sigma = check_permutation(sigma)
    seen = [False] * len(sigma)
    lengths = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = sigma[i] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def descent_set_perm(sigma: Permutation) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1])


def descent_composition_perm(sigma: Permutation) -> Composition:
    sigma = check_permutation(sigma)
    if not sigma:
        return ()
    return comp_of(descent_set_perm(sigma), len(sigma))


@cache
def descent_classes(n: int) -> dict[tuple[int, ...], tuple[Permutation, ...]]:
    """Permutations of [n] grouped by descent set."""
    _check_degree(n)
    classes: dict[tuple[int, ...], list[Permutation]] = {}
    for sigma in permutations(range(1, n + 1)):
        classes.setdefault(descent_set_perm(sigma), []).append(sigma)
    return {key: tuple(value) for key, value in classes.items()}


@dataclass(frozen=True)
class GroupAlgebraElement:
    """A rational combination of permutations of a common degree."""

    n: int
    terms: dict

    def __post_init__(self):
        _check_degree(self.n)
        out = {}
        for sigma, coeff in dict(self.terms).items():
            sigma = check_permutation(sigma)
            if len(sigma) != self.n:
                raise DegreeMismatchError(
                    f"permutation {sigma} does not have degree {self.n}"
                )
            if not isinstance(coeff, (int, Fraction)):
                raise TypeError(f"coefficients must be exact (int or Fraction): {coeff!r}")
            c = Fraction(coeff)
            if c:
                out[sigma] = out.get(sigma, Fraction(0)) + c
        object.__setattr__(self, "terms", {k: v for k, v in out.items() if v})

    def _peer(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if other.n != self.n:
            raise DegreeMismatchError(f"degrees differ: {self.n} vs {other.n}")
        return other

    def __add__(self, other):
        other = self._peer(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self.terms)
        for sigma, c in other.terms.items():
            merged[sigma] = merged.get(sigma, Fraction(0)) + c
        return GroupAlgebraElement(self.n, merged)

    def __sub__(self, other):
        other = self._peer(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self.terms)
        for sigma, c in other.terms.items():
            merged[sigma] = merged.get(sigma, Fraction(0)) - c
        return GroupAlgebraElement(self.n, merged)

    def __neg__(self):
        return GroupAlgebraElement(self.n, {s: -c for s, c in self.terms.items()})

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return GroupAlgebraElement(self.n, {s: c * scalar for s, c in self.terms.items()})

    __rmul__ = __mul__


def group_algebra_element(n: int, terms) -> GroupAlgebraElement:
    return GroupAlgebraElement(n, dict(terms))


def _cut_points(alpha: Composition) -> tuple[int, ...]:
    return tuple(accumulate(alpha))[:-1] if alpha else ()


def xi(alpha) -> GroupAlgebraElement:
    """Sum of all permutations whose descent set is contained in the cut
    set of ``alpha``; equivalently the sum over the minimal-length left
    coset representatives of the Young subgroup of ``alpha``."""
    alpha = check_composition(alpha)
    n = sum(alpha)
    target = set(_cut_points(alpha))
    terms = {}
    for descents, sigmas in descent_classes(n).items():
        if set(descents) <= target:
            for sigma in sigmas:
                terms[sigma] = 1
    return GroupAlgebraElement(n, terms)


def delta(alpha) -> GroupAlgebraElement:
    """Sum of all permutations whose descent set equals the cut set of
    ``alpha``."""
    alpha = check_composition(alpha)
    n = sum(alpha)
    sigmas = descent_classes(n).get(_cut_points(alpha), ())
    return GroupAlgebraElement(n, {sigma: 1 for sigma in sigmas})


def convolve(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """The group-ring product, extending permutation composition bilinearly."""
    if a.n != b.n:
        raise DegreeMismatchError(f"degrees differ: {a.n} vs {b.n}")
    out = {}
    for sigma, c1 in a.terms.items():
        for tau, c2 in b.terms.items():
            product = tuple(sigma[t - 1] for t in tau)
            out[product] = out.get(product, Fraction(0)) + c1 * c2
    return GroupAlgebraElement(a.n, out)


def descent_span_coordinates(a: GroupAlgebraElement):
    """Coordinates of ``a`` over the equal-descent-set class sums, or None
    if some descent class does not carry a constant coefficient."""
    coords = {}
    for descents, sigmas in descent_classes(a.n).items():
        value = a.terms.get(sigmas[0], Fraction(0))
        for sigma in sigmas[1:]:
            if a.terms.get(sigma, Fraction(0)) != value:
                return None
        if value:
            key = comp_of(descents, a.n) if a.n else ()
            coords[key] = value
    return coords


def psi(d: GroupAlgebraElement) -> NSymElement:
    """The descent-span element ``d`` as an NSym element: the class sum of
    alpha maps to the ribbon element of alpha."""
    coords = descent_span_coordinates(d)
    if coords is None:
        raise NotInDescentSpanError(
            f"element of degree {d.n} is not constant on descent classes"
        )
    return NSymElement("R", coords)


def psi_inverse(f: NSymElement) -> GroupAlgebraElement:
    """Pull a homogeneous NSym element back to the descent algebra."""
    r = nsym_convert(f, "R")
    degrees = {sum(alpha) for alpha in r.terms}
    if not degrees:
        return GroupAlgebraElement(0, {})
    if len(degrees) > 1:
        raise DegreeMismatchError(
            f"psi_inverse requires a homogeneous element; found degrees {sorted(degrees)}"
        )
    n = degrees.pop()
    _check_degree(n)
    out = {}
    for alpha, c in r.terms.items():
        for sigma in descent_classes(n)[_cut_points(alpha)]:
            out[sigma] = out.get(sigma, Fraction(0)) + c
    return GroupAlgebraElement(n, out)
