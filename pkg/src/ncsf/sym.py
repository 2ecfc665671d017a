"""The algebra of symmetric functions over the rationals.

Elements are sparse rational combinations of partition-indexed basis
elements in one of five bases: elementary ``e``, complete homogeneous
``h``, power sum ``p``, monomial ``m``, and Schur ``s``.  All pairwise
conversions route through the hub basis ``h`` with per-degree transition
matrices that are computed once and cached:

* e <-> h by the alternating sums over compositions of each part,
* p <-> h by the Newton recurrences r*h_r = sum_k p_k h_{r-k},
* s -> h by the Jacobi-Trudi determinant, h -> s by exact inversion,
* m <-> p by the ordered-block-sum expansion of p_mu in monomials and
  its exact inverse.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations

from ._linear import LinearCombinationOps, normalize_terms
from .compositions import (
    Partition,
    check_partition,
    compositions_of,
    partition_index,
    partitions_of,
)
from .linalg import Matrix, identity, invert, matmul

__all__ = [
    "SYM_BASES",
    "SymElement",
    "sym_element",
    "sym_basis_element",
    "sym_convert",
    "sym_multiply",
    "schur",
    "transition_matrix",
]

SYM_BASES = ("e", "h", "p", "m", "s")


@dataclass(frozen=True)
class SymElement(LinearCombinationOps):
    """A rational combination of basis elements, indexed by partitions."""

    basis: str
    terms: dict

    def __post_init__(self):
        if self.basis not in SYM_BASES:
            raise ValueError(f"unknown Sym basis {self.basis!r}; expected one of {SYM_BASES}")
        object.__setattr__(self, "terms", normalize_terms(self.terms, check_partition))


def sym_element(basis: str, terms) -> SymElement:
    return SymElement(basis, dict(terms))


def sym_basis_element(basis: str, lam) -> SymElement:
    return SymElement(basis, {check_partition(lam): Fraction(1)})


def _merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


def _product_row(factors) -> dict:
    """Product of expansions over a multiplicative partition-indexed basis."""
    acc = {(): Fraction(1)}
    for factor in factors:
        nxt = {}
        for i1, c1 in acc.items():
            for i2, c2 in factor.items():
                idx = _merge(i1, i2)
                nxt[idx] = nxt.get(idx, Fraction(0)) + c1 * c2
        acc = {k: v for k, v in nxt.items() if v}
    return acc


@cache
def _alternating_row(r: int) -> dict:
    """sum over compositions beta of r of (-1)^(len(beta)-r), collected by
    underlying partition.  Expands e_r in h, and equally h_r in e."""
    out = {}
    for beta in compositions_of(r):
        idx = tuple(sorted(beta, reverse=True))
        sign = -1 if (len(beta) - r) % 2 else 1
        out[idx] = out.get(idx, 0) + sign
    return {k: Fraction(v) for k, v in out.items() if v}


@cache
def _p_in_h(r: int) -> dict:
    """p_r = r*h_r - sum_{k<r} p_k h_{r-k}."""
    if r == 0:
        return {(): Fraction(1)}
    out = {(r,): Fraction(r)}
    for k in range(1, r):
        for idx, c in _p_in_h(k).items():
            midx = _merge(idx, (r - k,))
            out[midx] = out.get(midx, Fraction(0)) - c
    return {k: v for k, v in out.items() if v}


@cache
def _h_in_p(r: int) -> dict:
    """h_r = (1/r) sum_{k=1..r} p_k h_{r-k}."""
    if r == 0:
        return {(): Fraction(1)}
    out = {}
    for k in range(1, r + 1):
        for idx, c in _h_in_p(r - k).items():
            midx = _merge(idx, (k,))
            out[midx] = out.get(midx, Fraction(0)) + Fraction(c, r)
    return {k: v for k, v in out.items() if v}


def _perm_sign(sigma) -> int:
    inversions = sum(
        1
        for i in range(len(sigma))
        for j in range(i + 1, len(sigma))
        if sigma[i] > sigma[j]
    )
    return -1 if inversions % 2 else 1


@cache
def _jacobi_trudi_h(lam: Partition) -> dict:
    """det(h_{lam_i - i + j}) expanded as a permutation sum, h-indexed."""
    if not lam:
        return {(): Fraction(1)}
    ell = len(lam)
    out = {}
    for sigma in permutations(range(ell)):
        exps = [lam[i] - (i + 1) + (sigma[i] + 1) for i in range(ell)]
        if any(e < 0 for e in exps):
            continue
        idx = tuple(sorted((e for e in exps if e > 0), reverse=True))
        out[idx] = out.get(idx, Fraction(0)) + _perm_sign(sigma)
    return {k: v for k, v in out.items() if v}


def _ordered_block_count(mu: Partition, lam: Partition) -> int:
    """Assignments of the parts of mu to len(lam) labeled blocks with block
    j summing to lam[j]; the coefficient of the monomial basis element m_lam
    in p_mu."""
    remaining = list(lam)

    def rec(i):
        if i == len(mu):
            return 1
        part = mu[i]
        total = 0
        for j, cap in enumerate(remaining):
            if cap >= part:
                remaining[j] = cap - part
                total += rec(i + 1)
                remaining[j] = cap
        return total

    return rec(0)


@cache
def _p_in_m_matrix(n: int) -> Matrix:
    parts_list = partitions_of(n)
    return tuple(
        tuple(Fraction(_ordered_block_count(mu, lam)) for lam in parts_list)
        for mu in parts_list
    )


def _dense(rows, n: int) -> Matrix:
    index = partition_index(n)
    size = len(index)
    out = []
    for row in rows:
        dense = [Fraction(0)] * size
        for idx, c in row.items():
            dense[index[idx]] = c
        out.append(tuple(dense))
    return tuple(out)


@cache
def _to_h_matrix(basis: str, n: int) -> Matrix:
    parts_list = partitions_of(n)
    if basis == "h":
        return identity(len(parts_list))
    if basis == "e":
        return _dense([_product_row([_alternating_row(p) for p in lam]) for lam in parts_list], n)
    if basis == "p":
        return _dense([_product_row([_p_in_h(p) for p in lam]) for lam in parts_list], n)
    if basis == "s":
        return _dense([_jacobi_trudi_h(lam) for lam in parts_list], n)
    if basis == "m":
        return matmul(invert(_p_in_m_matrix(n)), _to_h_matrix("p", n))
    raise ValueError(f"unknown Sym basis {basis!r}")


@cache
def _from_h_matrix(basis: str, n: int) -> Matrix:
    parts_list = partitions_of(n)
    if basis == "h":
        return identity(len(parts_list))
    if basis == "e":
        return _dense([_product_row([_alternating_row(p) for p in lam]) for lam in parts_list], n)
    if basis == "p":
        return _dense([_product_row([_h_in_p(p) for p in lam]) for lam in parts_list], n)
    if basis == "s":
        return invert(_to_h_matrix("s", n))
    if basis == "m":
        return matmul(_from_h_matrix("p", n), _p_in_m_matrix(n))
    raise ValueError(f"unknown Sym basis {basis!r}")


def _apply_matrix(terms: dict, matrix: Matrix, n: int) -> dict:
    parts_list = partitions_of(n)
    index = partition_index(n)
    out = [Fraction(0)] * len(parts_list)
    for lam, c in terms.items():
        for j, entry in enumerate(matrix[index[lam]]):
            if entry:
                out[j] += c * entry
    return {parts_list[j]: v for j, v in enumerate(out) if v}


def sym_convert(x: SymElement, target: str) -> SymElement:
    """Express ``x`` in the ``target`` basis, degree by degree."""
    if target not in SYM_BASES:
        raise ValueError(f"unknown Sym basis {target!r}; expected one of {SYM_BASES}")
    if target == x.basis:
        return x
    by_degree = {}
    for lam, c in x.terms.items():
        by_degree.setdefault(sum(lam), {})[lam] = c
    converted = {}
    for n, terms in by_degree.items():
        if x.basis != "h":
            terms = _apply_matrix(terms, _to_h_matrix(x.basis, n), n)
        if target != "h":
            terms = _apply_matrix(terms, _from_h_matrix(target, n), n)
        converted.update(terms)
    return SymElement(target, converted)


def sym_multiply(x: SymElement, y: SymElement) -> SymElement:
    """Product in Sym, computed through the multiplicative power-sum basis."""
    xp = sym_convert(x, "p")
    yp = sym_convert(y, "p")
    out = {}
    for i1, c1 in xp.terms.items():
        for i2, c2 in yp.terms.items():
            idx = _merge(i1, i2)
            out[idx] = out.get(idx, Fraction(0)) + c1 * c2
    return sym_convert(SymElement("p", out), x.basis)


def schur(lam) -> SymElement:
    """The Schur function of shape ``lam``, in the h basis, via Jacobi-Trudi."""
    return SymElement("h", dict(_jacobi_trudi_h(check_partition(lam))))


def transition_matrix(source: str, target: str, n: int) -> Matrix:
    """Row i expands the i-th degree-n ``source`` element in ``target``
    coordinates; rows and columns in reverse lexicographic partition order."""
    for basis in (source, target):
        if basis not in SYM_BASES:
            raise ValueError(f"unknown Sym basis {basis!r}; expected one of {SYM_BASES}")
    if source == target:
        return identity(len(partitions_of(n)))
    if source == "h":
        return _from_h_matrix(target, n)
    if target == "h":
        return _to_h_matrix(source, n)
    return matmul(_to_h_matrix(source, n), _from_h_matrix(target, n))
