"""Basis blades of Cl(p, q) encoded as bitmasks.

Bit ``i`` of a mask is set when generator ``i`` is a factor of the blade.
Products are computed in this binary layout; the grade-lex layout used by
printed multiplication tables is a permutation applied at the edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

BINARY = "binary"
GRADE_LEX = "grade-lex"
CONVENTIONS = (BINARY, GRADE_LEX)

# Tie-break used to order blades of equal grade.
#   "tuple": compare ascending element tuples, {0,1} < {0,2} < {0,3} < {1,2}
#   "word":  compare the bit words eps_{n-1}..eps_0, i.e. plain integer order
TIE_BREAKS = ("tuple", "word")


class DimensionError(ValueError):
    """Operands live in algebras with different generator counts."""


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"negative signature counts ({self.p}, {self.q})")
        if self.p + self.q < 1:
            raise ValueError("signature needs at least one generator")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def eta(self) -> tuple[int, ...]:
        return (1,) * self.p + (-1,) * self.q

    def __str__(self):
        return f"({self.p},{self.q})"


def make_signature(p: int, q: int) -> Signature:
    return Signature(p, q)


@dataclass(frozen=True)
class Blade:
    mask: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"generator count must be positive, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise IndexError(f"blade mask {self.mask} out of range for n={self.n}")

    @classmethod
    def from_indices(cls, indices, n: int) -> "Blade":
        return cls(set_to_index(indices, n), n)

    @property
    def indices(self) -> frozenset[int]:
        return index_to_set(self.mask, self.n)

    @property
    def grade(self) -> int:
        return self.mask.bit_count()


@dataclass(frozen=True)
class SignedBlade:
    sign: int
    blade: Blade

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    def __str__(self):
        return f"{'+' if self.sign > 0 else '-'}{self.blade.mask}"


def index_to_set(j: int, n: int) -> frozenset[int]:
    if not 0 <= j < (1 << n):
        raise IndexError(f"index {j} out of range for n={n}")
    return frozenset(i for i in range(n) if (j >> i) & 1)


def set_to_index(indices, n: int) -> int:
    mask = 0
    for i in indices:
        if not 0 <= i < n:
            raise IndexError(f"generator {i} out of range for n={n}")
        mask |= 1 << i
    return mask


def _popcounts(masks: np.ndarray, n: int) -> np.ndarray:
    counts = np.zeros(masks.shape, dtype=np.int8)
    for i in range(n):
        counts += ((masks >> i) & 1).astype(np.int8)
    return counts


def _bit_reverse(masks: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros_like(masks)
    for i in range(n):
        out |= ((masks >> i) & 1) << (n - 1 - i)
    return out


def _grade_sorted_masks(n: int, tie_break: str) -> np.ndarray:
    """Masks listed by (grade, tie-break) as an int32 array of length 2**n."""
    if tie_break not in TIE_BREAKS:
        raise ValueError(f"unknown tie-break {tie_break!r}")
    masks = np.arange(1 << n, dtype=np.int32)
    grades = _popcounts(masks, n)
    if tie_break == "word":
        ties = masks
    else:
        # Within a grade, a smaller leading element means a higher reversed bit.
        ties = -_bit_reverse(masks, n)
    return masks[np.lexsort((ties, grades))]


@dataclass(frozen=True)
class OrderingConvention:
    """A basis ordering: ``permutation[k]`` is the mask shown at position k."""

    kind: str
    n: int
    permutation: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if self.kind not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.kind!r}")
        if sorted(self.permutation) != list(range(1 << self.n)):
            raise ValueError("permutation is not a bijection on the blade masks")

    @property
    def positions(self) -> tuple[int, ...]:
        """Inverse permutation: ``positions[mask]`` is the displayed index."""
        return _inverse(self.permutation)

    def mask_at(self, k: int) -> int:
        return self.permutation[k]

    def index_of(self, mask: int) -> int:
        return self.positions[mask]


@lru_cache(maxsize=None)
def _inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for k, m in enumerate(perm):
        inv[m] = k
    return tuple(inv)


@lru_cache(maxsize=32)
def grade_lex_permutation(n: int, tie_break: str = "tuple") -> OrderingConvention:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    perm = _grade_sorted_masks(n, tie_break)
    return OrderingConvention(GRADE_LEX, n, tuple(int(m) for m in perm))


@lru_cache(maxsize=32)
def binary_convention(n: int) -> OrderingConvention:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return OrderingConvention(BINARY, n, tuple(range(1 << n)))


def convention(kind: str, n: int) -> OrderingConvention:
    if kind == BINARY:
        return binary_convention(n)
    if kind == GRADE_LEX:
        return grade_lex_permutation(n)
    raise ValueError(f"unknown convention {kind!r}")


def cycle_count(perm: np.ndarray) -> int:
    """Number of cycles of a permutation of range(len(perm)).

    Labels each element with the smallest element of its orbit by pointer
    doubling, so the work is O(N log N) array operations instead of a
    Python-level walk.
    """
    perm = np.asarray(perm)
    size = len(perm)
    if size == 0:
        return 0
    label = np.arange(size, dtype=perm.dtype)
    step = perm.copy()
    span = 1
    while span < size:
        np.minimum(label, label[step], out=label)
        step = step[step]
        span *= 2
    return int(np.count_nonzero(label == np.arange(size, dtype=perm.dtype)))


def permutation_parity(perm: Sequence[int]) -> int:
    """Sign of a permutation: +1 when even, -1 when odd."""
    perm = np.asarray(perm)
    return 1 if (len(perm) - cycle_count(perm)) % 2 == 0 else -1


def permutation_orientation(n: int, tie_break: str = "word") -> int:
    """Determinant sign of the basis reordering that sorts blades by grade.

    The default tie-break orders equal-grade blades by their bit words,
    which is the reading under which the flips at n = 3, 4, 5, 8, 9, 16, 17
    occur. ``tie_break="tuple"`` gives the ordering of the printed tables.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return permutation_parity(_grade_sorted_masks(n, tie_break))


def reorder_sign(a: int, b: int) -> int:
    """Sign from moving the generators of ``b`` left past those of ``a``."""
    swaps = 0
    a >>= 1
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def metric_sign(a: int, b: int, eta: Sequence[int]) -> int:
    common = a & b
    sign = 1
    i = 0
    while common:
        if common & 1:
            sign *= eta[i]
        common >>= 1
        i += 1
    return sign


def mask_product(a: int, b: int, eta: Sequence[int]) -> tuple[int, int]:
    """(sign, mask) of e_a * e_b for an arbitrary metric vector ``eta``."""
    return reorder_sign(a, b) * metric_sign(a, b, eta), a ^ b


def blade_product(a: Blade, b: Blade, sig: Signature) -> SignedBlade:
    if a.n != b.n or a.n != sig.n:
        raise DimensionError(
            f"blade sizes {a.n}, {b.n} do not match signature {sig} (n={sig.n})"
        )
    sign, mask = mask_product(a.mask, b.mask, sig.eta)
    return SignedBlade(sign, Blade(mask, a.n))


def star(i: int, j: int, n: int) -> int:
    limit = 1 << n
    if not (0 <= i < limit and 0 <= j < limit):
        raise IndexError(f"indices ({i}, {j}) out of range for n={n}")
    return i ^ j


@lru_cache(maxsize=64)
def sign_table(eta: tuple[int, ...]) -> np.ndarray:
    """Signs of e_i * e_j over binary masks, shape (2**n, 2**n), int8."""
    n = len(eta)
    masks = np.arange(1 << n, dtype=np.int64)
    a = masks[:, None]
    b = masks[None, :]
    swaps = np.zeros((1 << n, 1 << n), dtype=np.int64)
    for j in range(n):
        higher = _popcounts(masks >> (j + 1), n).astype(np.int64)
        swaps += ((b >> j) & 1) * higher[:, None]
    sign = np.where(swaps % 2 == 0, 1, -1).astype(np.int8)
    common = a & b
    for i, e in enumerate(eta):
        if e < 0:
            sign = np.where((common >> i) & 1, -sign, sign)
    return sign.astype(np.int8)
