"""Dense exact linear algebra over Fraction, sized for transition matrices."""

from fractions import Fraction

from .errors import InternalConsistencyError

__all__ = ["Matrix", "identity", "matmul", "invert", "is_identity", "transpose"]

Matrix = tuple[tuple[Fraction, ...], ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def identity(k: int) -> Matrix:
    return tuple(
        tuple(_ONE if i == j else _ZERO for j in range(k)) for i in range(k)
    )


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    for row in a:
        out = [_ZERO] * (len(b[0]) if b else 0)
        for coeff, brow in zip(row, b):
            if not coeff:
                continue
            for j, entry in enumerate(brow):
                if entry:
                    out[j] += coeff * entry
        rows.append(tuple(out))
    return tuple(rows)


def invert(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse; exact, no pivoting heuristics needed over Q."""
    k = len(m)
    aug = [
        [Fraction(x) for x in row] + [_ONE if i == j else _ZERO for j in range(k)]
        for i, row in enumerate(m)
    ]
    for col in range(k):
        pivot = next((r for r in range(col, k) if aug[r][col]), None)
        if pivot is None:
            raise InternalConsistencyError(
                f"singular {k}x{k} matrix; a claimed basis is not a basis"
            )
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = aug[col][col]
        if scale != 1:
            aug[col] = [x / scale for x in aug[col]]
        for r in range(k):
            if r == col or not aug[r][col]:
                continue
            factor = aug[r][col]
            aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[k:]) for row in aug)


def is_identity(m: Matrix) -> bool:
    return all(
        entry == (_ONE if i == j else _ZERO)
        for i, row in enumerate(m)
        for j, entry in enumerate(row)
    )
