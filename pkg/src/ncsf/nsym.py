"""The free algebra of noncommutative symmetric functions.

Composition-indexed bases: noncommutative elementary ``E``, complete
homogeneous ``H``, ribbon ``R``, noncommutative Schur ``S``, and Young
noncommutative Schur ``YS``.  The hub basis is ``H``:

* E <-> H by the alternating sums over compositions of each part, with
  indices concatenated in order (the algebra is free, so products of the
  generators never collide);
* R -> H by the signed sum over coarsenings, H -> R by the unsigned one;
* R expands in YS with SYCT counts (shape index transposed against the
  descent-composition index) and in S with both indices reversed; the S
  and YS directions come from exact inverses of those expansions.

The dual pairing with quasisymmetric functions and the forgetful map onto
Sym live here as well.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from ._linear import LinearCombinationOps, normalize_terms
from .compositions import (
    check_composition,
    coarsenings,
    composition_index,
    compositions_of,
    refinements,
    reversal,
    underlying_partition,
)
from .linalg import Matrix, identity, invert, matmul, transpose
from .qsym import QSymElement, qsym_convert
from .sym import SymElement
from .tableaux import dhat_matrix

__all__ = [
    "NSYM_BASES",
    "NSymElement",
    "nsym_element",
    "nsym_basis_element",
    "nsym_convert",
    "nsym_multiply",
    "star_antiautomorphism",
    "forgetful_map",
    "duality_pairing",
    "transition_matrix",
]

NSYM_BASES = ("E", "H", "R", "S", "YS")


@dataclass(frozen=True)
class NSymElement(LinearCombinationOps):
    """A rational combination of basis elements, indexed by compositions."""

    basis: str
    terms: dict

    def __post_init__(self):
        if self.basis not in NSYM_BASES:
            raise ValueError(f"unknown NSym basis {self.basis!r}; expected one of {NSYM_BASES}")
        object.__setattr__(self, "terms", normalize_terms(self.terms, check_composition))


def nsym_element(basis: str, terms) -> NSymElement:
    return NSymElement(basis, dict(terms))


def nsym_basis_element(basis: str, alpha) -> NSymElement:
    return NSymElement(basis, {check_composition(alpha): Fraction(1)})


@cache
def _alternating_expansion(alpha) -> dict:
    """Expansion of a product of generators over the other generator family:
    the coefficient of gamma is (-1)^(len(gamma) - n) for each gamma refining
    alpha.  Serves both E -> H and H -> E."""
    n = sum(alpha)
    out = {}
    for gamma in refinements(alpha):
        out[gamma] = Fraction(-1 if (len(gamma) - n) % 2 else 1)
    return out


@cache
def _dhat_fractions(n: int) -> Matrix:
    if n == 0:
        return ((Fraction(1),),)
    return tuple(tuple(Fraction(x) for x in row) for row in dhat_matrix(n))


@cache
def _r_in_ys_matrix(n: int) -> Matrix:
    """Row gamma holds the YS coordinates of the ribbon element of gamma."""
    return transpose(_dhat_fractions(n))


@cache
def _r_in_s_matrix(n: int) -> Matrix:
    """Row gamma holds the S coordinates of the ribbon element of gamma."""
    comps = compositions_of(n)
    index = composition_index(n)
    dhat = _dhat_fractions(n)
    return tuple(
        tuple(dhat[index[reversal(beta)]][index[reversal(gamma)]] for beta in comps)
        for gamma in comps
    )


@cache
def _to_h_matrix(basis: str, n: int) -> Matrix:
    comps = compositions_of(n)
    index = composition_index(n)
    if basis == "H":
        return identity(len(comps))
    if basis == "E":
        rows = []
        for alpha in comps:
            dense = [Fraction(0)] * len(comps)
            for gamma, c in _alternating_expansion(alpha).items():
                dense[index[gamma]] = c
            rows.append(tuple(dense))
        return tuple(rows)
    if basis == "R":
        rows = []
        for alpha in comps:
            dense = [Fraction(0)] * len(comps)
            sign_alpha = -1 if len(alpha) % 2 else 1
            for beta in coarsenings(alpha):
                sign = sign_alpha * (-1 if len(beta) % 2 else 1)
                dense[index[beta]] = Fraction(sign)
            rows.append(tuple(dense))
        return tuple(rows)
    if basis == "YS":
        return matmul(invert(_r_in_ys_matrix(n)), _to_h_matrix("R", n))
    if basis == "S":
        return matmul(invert(_r_in_s_matrix(n)), _to_h_matrix("R", n))
    raise ValueError(f"unknown NSym basis {basis!r}")


@cache
def _from_h_matrix(basis: str, n: int) -> Matrix:
    comps = compositions_of(n)
    index = composition_index(n)
    if basis == "H":
        return identity(len(comps))
    if basis == "E":
        return _to_h_matrix("E", n)
    if basis == "R":
        # H_alpha is the unsigned sum of ribbon elements over coarsenings
        rows = []
        for alpha in comps:
            dense = [Fraction(0)] * len(comps)
            for beta in coarsenings(alpha):
                dense[index[beta]] = Fraction(1)
            rows.append(tuple(dense))
        return tuple(rows)
    if basis == "YS":
        return matmul(_from_h_matrix("R", n), _r_in_ys_matrix(n))
    if basis == "S":
        return matmul(_from_h_matrix("R", n), _r_in_s_matrix(n))
    raise ValueError(f"unknown NSym basis {basis!r}")


def _apply_matrix(terms: dict, matrix: Matrix, n: int) -> dict:
    comps = compositions_of(n)
    index = composition_index(n)
    out = [Fraction(0)] * len(comps)
    for alpha, c in terms.items():
        for j, entry in enumerate(matrix[index[alpha]]):
            if entry:
                out[j] += c * entry
    return {comps[j]: v for j, v in enumerate(out) if v}


def nsym_convert(x: NSymElement, target: str) -> NSymElement:
    """Express ``x`` in the ``target`` basis, degree by degree."""
    if target not in NSYM_BASES:
        raise ValueError(f"unknown NSym basis {target!r}; expected one of {NSYM_BASES}")
    if target == x.basis:
        return x
    by_degree = {}
    for alpha, c in x.terms.items():
        by_degree.setdefault(sum(alpha), {})[alpha] = c
    converted = {}
    for n, terms in by_degree.items():
        if x.basis != "H":
            terms = _apply_matrix(terms, _to_h_matrix(x.basis, n), n)
        if target != "H":
            terms = _apply_matrix(terms, _from_h_matrix(target, n), n)
        converted.update(terms)
    return NSymElement(target, converted)


def nsym_multiply(x: NSymElement, y: NSymElement) -> NSymElement:
    """Product in the free algebra: indices concatenate in the H basis."""
    xh = nsym_convert(x, "H")
    yh = nsym_convert(y, "H")
    out = {}
    for i1, c1 in xh.terms.items():
        for i2, c2 in yh.terms.items():
            idx = i1 + i2
            out[idx] = out.get(idx, Fraction(0)) + c1 * c2
    return nsym_convert(NSymElement("H", out), x.basis)


def star_antiautomorphism(x: NSymElement) -> NSymElement:
    """The involutive anti-automorphism sending each ribbon element to the
    one indexed by the reversed composition.  Carries S elements to YS
    elements; the image is returned in the R basis."""
    r = nsym_convert(x, "R")
    return NSymElement("R", {reversal(alpha): c for alpha, c in r.terms.items()})


def forgetful_map(x: NSymElement) -> SymElement:
    """The algebra map onto Sym determined by sending the degree-r complete
    homogeneous generator to h_r; returns an h-basis element."""
    xh = nsym_convert(x, "H")
    out = {}
    for alpha, c in xh.terms.items():
        lam = underlying_partition(alpha)
        out[lam] = out.get(lam, Fraction(0)) + c
    return SymElement("h", out)


def duality_pairing(q: QSymElement, f: NSymElement) -> Fraction:
    """The bilinear pairing with <F_alpha, R_beta> = delta_{alpha beta}."""
    qf = qsym_convert(q, "F")
    fr = nsym_convert(f, "R")
    total = Fraction(0)
    for alpha, c in qf.terms.items():
        other = fr.terms.get(alpha)
        if other:
            total += c * other
    return total


def transition_matrix(source: str, target: str, n: int) -> Matrix:
    """Row i expands the i-th degree-n ``source`` element in ``target``
    coordinates; rows and columns in canonical composition order."""
    for basis in (source, target):
        if basis not in NSYM_BASES:
            raise ValueError(f"unknown NSym basis {basis!r}; expected one of {NSYM_BASES}")
    if source == target:
        return identity(len(compositions_of(n)))
    if source == "H":
        return _from_h_matrix(target, n)
    if target == "H":
        return _to_h_matrix(source, n)
    return matmul(_to_h_matrix(source, n), _from_h_matrix(target, n))
