"""Isomorphism type of the real Clifford algebra R^{p,q} by the mod 8 table."""

from __future__ import annotations

from dataclasses import dataclass

REAL = "R"
COMPLEX = "C"
QUATERNION = "H"

_BASE_WIDTH = {REAL: 1, COMPLEX: 2, QUATERNION: 4}


@dataclass(frozen=True)
class AlgebraDescriptor:
    """The matrix algebra base^{size x size}, block-doubled when ``doubled``."""

    base: str
    size: int
    doubled: bool = False

    def __post_init__(self):
        if self.base not in _BASE_WIDTH:
            raise ValueError(f"unknown base {self.base!r}")
        if self.size < 1:
            raise ValueError(f"size must be positive, got {self.size}")
        if self.doubled and self.base == COMPLEX:
            raise ValueError("doubled algebras are real or quaternionic")

    def __str__(self):
        inner = self.base if self.size == 1 else f"{self.base}^{self.size}x{self.size}"
        return f"diag2({inner})" if self.doubled else inner

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "size": self.size,
            "doubled": self.doubled,
            "real_dim": descriptor_real_dimension(self),
        }


def descriptor_real_dimension(d: AlgebraDescriptor) -> int:
    return _BASE_WIDTH[d.base] * d.size * d.size * (2 if d.doubled else 1)


def classify(p: int, q: int) -> AlgebraDescriptor:
    if p < 0 or q < 0:
        raise ValueError(f"negative signature counts ({p}, {q})")
    n = p + q
    if n < 1:
        raise ValueError("signature needs at least one generator")
    r = (p - q) % 8
    if n % 2 == 0:
        if r in (0, 2):
            return AlgebraDescriptor(REAL, 2 ** (n // 2))
        # n even forces p - q even, so r is 4 or 6 here.
        return AlgebraDescriptor(QUATERNION, 2 ** ((n - 2) // 2))
    if r == 1:
        return AlgebraDescriptor(REAL, 2 ** ((n - 1) // 2), doubled=True)
    if r in (3, 7):
        return AlgebraDescriptor(COMPLEX, 2 ** ((n - 1) // 2))
    return AlgebraDescriptor(QUATERNION, 2 ** ((n - 3) // 2), doubled=True)


def sweep(max_n: int) -> list[tuple[int, int, AlgebraDescriptor]]:
    """Every split (p, q) with 1 <= p + q <= max_n, ordered by n then p."""
    return [(p, n - p, classify(p, n - p)) for n in range(1, max_n + 1) for p in range(n + 1)]
