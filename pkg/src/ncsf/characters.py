"""Class functions of symmetric groups and the character-level maps.

A class function of degree n stores one exact rational per partition of n
(the cycle types).  The characteristic map ``frobenius_ch`` sends it to
the z-weighted power-sum expansion; its inverse reads the values back off
the power-sum coordinates and insists they are integers, which catches
pipeline corruption early.  ``theta`` evaluates descent-algebra elements
as class functions through the Young characters, and
``verify_main_theorem`` checks, for one degree, that the preimages of the
(Young) noncommutative Schur elements are noncommutative irreducible
characters, together with the commuting square relating the four maps.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .compositions import (
    Composition,
    check_composition,
    check_partition,
    compositions_of,
    partitions_of,
    underlying_partition,
    z_stat,
)
from .descent import (
    GroupAlgebraElement,
    descent_span_coordinates,
    psi,
    psi_inverse,
    xi,
)
from .errors import (
    DegreeMismatchError,
    InternalConsistencyError,
    NotInDescentSpanError,
)
from .nsym import NSymElement, forgetful_map
from .sym import SymElement, schur, sym_convert, sym_multiply

__all__ = [
    "ClassFunction",
    "class_function",
    "frobenius_ch",
    "ch_inverse",
    "young_character",
    "irreducible_character",
    "class_products",
    "theta",
    "noncommutative_character",
    "Check",
    "VerificationReport",
    "verify_main_theorem",
]


@dataclass(frozen=True)
class ClassFunction:
    """A map from the partitions of n (cycle types) to exact rationals."""

    n: int
    values: dict

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"degree must be nonnegative: {self.n}")
        expected = partitions_of(self.n)
        out = {}
        for mu, value in dict(self.values).items():
            mu = check_partition(mu)
            if not isinstance(value, (int, Fraction)):
                raise TypeError(f"values must be exact (int or Fraction): {value!r}")
            out[mu] = Fraction(value)
        if set(out) != set(expected):
            raise ValueError(
                f"class function of degree {self.n} needs exactly one value per"
                f" partition of {self.n}"
            )
        object.__setattr__(self, "values", {mu: out[mu] for mu in expected})

    def __call__(self, mu) -> Fraction:
        return self.values[check_partition(mu)]


def class_function(n: int, values) -> ClassFunction:
    return ClassFunction(n, dict(values))


def frobenius_ch(f: ClassFunction) -> SymElement:
    """sum over cycle types mu of f(mu)/z_mu times the power sum of mu."""
    terms = {mu: value / z_stat(mu) for mu, value in f.values.items()}
    return SymElement("p", terms)


def ch_inverse(g: SymElement) -> ClassFunction:
    """The class function whose characteristic is ``g``; requires ``g``
    homogeneous and raises InternalConsistencyError on non-integer values."""
    gp = sym_convert(g, "p")
    degrees = gp.degrees()
    if len(degrees) != 1:
        raise DegreeMismatchError(
            f"ch_inverse requires a homogeneous element; found degrees {sorted(degrees)}"
        )
    n = degrees.pop()
    values = {}
    for mu in partitions_of(n):
        value = z_stat(mu) * gp.terms.get(mu, Fraction(0))
        if value.denominator != 1:
            raise InternalConsistencyError(
                f"non-integral character value {value} at cycle type {mu}"
            )
        values[mu] = value
    return ClassFunction(n, values)


@cache
def young_character(alpha) -> ClassFunction:
    """The character induced by the trivial character of the Young subgroup
    of ``alpha``; depends only on the underlying partition."""
    alpha = check_composition(alpha)
    lam = underlying_partition(alpha)
    return ch_inverse(SymElement("h", {lam: Fraction(1)}))


@cache
def irreducible_character(lam) -> ClassFunction:
    """The irreducible character of shape ``lam``, read off the Schur
    function through the inverse characteristic map."""
    return ch_inverse(schur(check_partition(lam)))


def class_products(f: ClassFunction, g: ClassFunction, mode: str) -> ClassFunction:
    """``pointwise`` multiplies values class by class (equal degrees);
    ``induction`` is the graded outer product, computed through ch."""
    if mode == "pointwise":
        if f.n != g.n:
            raise DegreeMismatchError(f"degrees differ: {f.n} vs {g.n}")
        return ClassFunction(f.n, {mu: f.values[mu] * g.values[mu] for mu in f.values})
    if mode == "induction":
        return ch_inverse(sym_multiply(frobenius_ch(f), frobenius_ch(g)))
    raise ValueError(f"mode must be 'pointwise' or 'induction': {mode!r}")


def theta(d: GroupAlgebraElement) -> ClassFunction:
    """Evaluate a descent-span element as a class function, by rewriting it
    over the contained-descent-set sums and sending the sum of alpha to the
    Young character of alpha."""
    coords = descent_span_coordinates(d)
    if coords is None:
        raise NotInDescentSpanError(
            f"element of degree {d.n} is not constant on descent classes"
        )
    n = d.n
    if n == 0:
        return ClassFunction(0, {(): coords.get((), Fraction(0))})
    # mobius inversion over subsets of the cut set: delta coords -> xi coords
    xi_coords: dict[Composition, Fraction] = {}
    for beta, c in coords.items():
        cuts = [sum(beta[: i + 1]) for i in range(len(beta) - 1)]
        for mask in range(1 << len(cuts)):
            subset = [cuts[i] for i in range(len(cuts)) if mask >> i & 1]
            sign = -1 if (len(cuts) - len(subset)) % 2 else 1
            alpha = tuple(
                b - a
                for a, b in zip([0] + subset, subset + [n])
            )
            xi_coords[alpha] = xi_coords.get(alpha, Fraction(0)) + sign * c
    values = {mu: Fraction(0) for mu in partitions_of(n)}
    for alpha, c in xi_coords.items():
        if not c:
            continue
        for mu, value in young_character(alpha).values.items():
            values[mu] += c * value
    return ClassFunction(n, values)


def noncommutative_character(alpha, family: str) -> GroupAlgebraElement:
    """The descent-algebra preimage of the noncommutative Schur element
    (``family="S"``) or Young noncommutative Schur element (``"YS"``) of
    ``alpha``; theta sends it to the irreducible character of the
    underlying partition."""
    if family not in ("S", "YS"):
        raise ValueError(f"family must be 'S' or 'YS': {family!r}")
    alpha = check_composition(alpha)
    return psi_inverse(NSymElement(family, {alpha: Fraction(1)}))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class VerificationReport:
    n: int
    checks: tuple

    @property
    def failures(self) -> tuple:
        return tuple(c for c in self.checks if not c.passed)

    @property
    def all_passed(self) -> bool:
        return not self.failures


def _format_composition(alpha) -> str:
    return ",".join(str(part) for part in alpha) if alpha else "0"


def verify_main_theorem(n: int) -> VerificationReport:
    """For every composition of ``n`` and both Schur-like families, check
    that theta of the descent-algebra preimage is the irreducible character
    of the underlying partition; additionally check the commuting square
    ch(theta(...)) = forgetful(psi(...)) on the contained-descent-set sums."""
    checks = []
    for family in ("S", "YS"):
        for alpha in compositions_of(n):
            got = theta(noncommutative_character(alpha, family))
            want = irreducible_character(underlying_partition(alpha))
            name = f"noncommutative-character/{family}/{_format_composition(alpha)}"
            witness = "" if got == want else f"theta image {got.values} != {want.values}"
            checks.append(Check(name, got == want, witness))
    for alpha in compositions_of(n):
        lhs = sym_convert(frobenius_ch(theta(xi(alpha))), "h")
        rhs = forgetful_map(psi(xi(alpha)))
        expected = SymElement("h", {underlying_partition(alpha): Fraction(1)})
        passed = lhs == rhs == expected
        name = f"commuting-square/{_format_composition(alpha)}"
        witness = "" if passed else f"ch.theta {lhs.terms} vs forgetful.psi {rhs.terms}"
        checks.append(Check(name, passed, witness))
    return VerificationReport(n, tuple(checks))
