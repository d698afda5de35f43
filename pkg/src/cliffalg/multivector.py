"""Dense multivectors over R or C and the geometric product."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Number
from typing import Sequence

import numpy as np

from .blades import (
    BINARY,
    CONVENTIONS,
    GRADE_LEX,
    Blade,
    DimensionError,
    SignedBlade,
    Signature,
    convention,
    mask_product,
    sign_table,
)

REAL = "real"
COMPLEX = "complex"

# Above this generator count the product is evaluated row by row instead of
# through a cached 2**n x 2**n sign table.
TABLE_CAP = 8


class AlgebraMismatch(ValueError):
    """Multivectors from different algebras or layouts were combined."""


def _coerce(values) -> np.ndarray:
    arr = np.asarray(values)
    if arr.dtype.kind == "b":
        arr = arr.astype(np.int64)
    if arr.dtype.kind == "O":
        arr = arr.copy()
    elif arr.dtype.kind not in "iufc":
        raise TypeError(f"unsupported coefficient dtype {arr.dtype}")
    return arr


def _infer_field(coeffs: np.ndarray) -> str:
    if coeffs.dtype.kind == "c":
        return COMPLEX
    if coeffs.dtype.kind == "O" and any(isinstance(c, complex) for c in coeffs):
        return COMPLEX
    return REAL


def _half(coeffs: np.ndarray):
    return 0.5 if coeffs.dtype.kind in "fc" else Fraction(1, 2)


@dataclass(frozen=True, eq=False)
class Multivector:
    sig: Signature
    coeffs: np.ndarray
    field: str = REAL
    convention: str = GRADE_LEX

    def __post_init__(self):
        coeffs = _coerce(self.coeffs)
        if coeffs.shape != (1 << self.sig.n,):
            raise ValueError(
                f"expected {1 << self.sig.n} coefficients for {self.sig}, got shape {coeffs.shape}"
            )
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.field not in (REAL, COMPLEX):
            raise ValueError(f"unknown field {self.field!r}")
        if self.field == REAL and _infer_field(coeffs) == COMPLEX:
            raise ValueError("complex coefficients in a real multivector")
        object.__setattr__(self, "coeffs", coeffs)

    # construction

    @classmethod
    def from_coeffs(cls, sig, coeffs, convention=GRADE_LEX, field=None) -> "Multivector":
        arr = _coerce(coeffs)
        return cls(sig, arr, field or _infer_field(arr), convention)

    @classmethod
    def zero(cls, sig, convention=GRADE_LEX, field=REAL, dtype=np.int64) -> "Multivector":
        if field == COMPLEX and np.dtype(dtype).kind in "iu":
            dtype = np.complex128
        return cls(sig, np.zeros(1 << sig.n, dtype=dtype), field, convention)

    @classmethod
    def basis(cls, sig, index: int, convention=GRADE_LEX, coefficient=1) -> "Multivector":
        """``coefficient`` times the basis element at ``index`` of the layout."""
        arr = _coerce([coefficient])
        coeffs = np.zeros(1 << sig.n, dtype=arr.dtype)
        coeffs[index] = arr[0]
        return cls(sig, coeffs, _infer_field(arr), convention)

    @classmethod
    def scalar(cls, sig, value=1, convention=GRADE_LEX) -> "Multivector":
        return cls.basis(sig, 0, convention, value)

    @property
    def n(self) -> int:
        return self.sig.n

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def _check_compatible(self, other: "Multivector"):
        if self.sig != other.sig:
            raise AlgebraMismatch(f"signatures differ: {self.sig} vs {other.sig}")
        if self.field != other.field:
            raise AlgebraMismatch(f"fields differ: {self.field} vs {other.field}")
        if self.convention != other.convention:
            raise AlgebraMismatch(
                f"conventions differ: {self.convention} vs {other.convention}"
            )

    def _with(self, coeffs) -> "Multivector":
        return Multivector(self.sig, _coerce(coeffs), self.field, self.convention)

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_compatible(other)
        return self._with(self.coeffs + other.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_compatible(other)
        return self._with(self.coeffs - other.coeffs)

    def __neg__(self):
        return self._with(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, Number):
            if isinstance(other, complex) and self.field == REAL:
                return NotImplemented
            return self._with(self.coeffs * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number) and not isinstance(other, Multivector):
            if isinstance(other, complex) and self.field == REAL:
                return NotImplemented
            return self._with(other * self.coeffs)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return (
            self.sig == other.sig
            and self.convention == other.convention
            and bool(np.all(self.coeffs == other.coeffs))
        )

    __hash__ = None

    def isclose(self, other: "Multivector", rtol: float = 1e-12, atol: float = 0.0) -> bool:
        self._check_compatible(other)
        a = self.coeffs.astype(complex)
        b = other.coeffs.astype(complex)
        scale = max(np.abs(a).max(initial=0.0), np.abs(b).max(initial=0.0))
        return bool(np.all(np.abs(a - b) <= atol + rtol * scale))

    def support(self) -> dict[int, object]:
        """Nonzero coefficients keyed by index in this multivector's layout."""
        return {k: c for k, c in enumerate(self.coeffs) if c != 0}

    def grades(self) -> set[int]:
        conv = convention(self.convention, self.n)
        return {conv.mask_at(k).bit_count() for k, c in enumerate(self.coeffs) if c != 0}

    def __repr__(self):
        terms = " + ".join(f"{c}*e{k}" for k, c in self.support().items()) or "0"
        return f"Multivector{self.sig}[{self.convention}]({terms})"


@lru_cache(maxsize=32)
def _order_array(n: int) -> np.ndarray:
    order = np.array(convention(GRADE_LEX, n).permutation, dtype=np.intp)
    order.flags.writeable = False
    return order


def reindex(x: Multivector, target: str) -> Multivector:
    """Return ``x`` with coefficients laid out in the ``target`` convention."""
    if target not in CONVENTIONS:
        raise ValueError(f"unknown convention {target!r}")
    if x.convention == target:
        return x
    order = _order_array(x.n)
    if target == BINARY:
        coeffs = np.empty_like(x.coeffs)
        coeffs[order] = x.coeffs
    else:
        coeffs = x.coeffs[order]
    return Multivector(x.sig, coeffs, x.field, target)


@lru_cache(maxsize=64)
def _product_tables(eta: tuple[int, ...]):
    signs = sign_table(eta)
    masks = np.arange(len(signs))
    # Column k of row i pairs e_i with e_(i ^ k); the product lands on e_k.
    partner = masks[:, None] ^ masks[None, :]
    return np.take_along_axis(signs, partner, axis=1), partner


def _binary_product(x: np.ndarray, y: np.ndarray, eta: tuple[int, ...]) -> np.ndarray:
    n = len(eta)
    if x.dtype.kind == "O" or y.dtype.kind == "O":
        # Exact scalars (Fractions, big ints): loop over nonzero pairs only.
        z = np.zeros(1 << n, dtype=object)
        z[:] = 0
        ys = [(int(j), y[j]) for j in np.flatnonzero(y)]
        for i in np.flatnonzero(x):
            xi = x[i]
            for j, yj in ys:
                sign, k = mask_product(int(i), j, eta)
                z[k] += xi * yj if sign > 0 else -(xi * yj)
        return z
    if n <= TABLE_CAP:
        signs, partner = _product_tables(eta)
        return (x[:, None] * signs * y[partner]).sum(axis=0)

    size = 1 << n
    masks = np.arange(size)
    z = np.zeros(size, dtype=np.result_type(x.dtype, y.dtype))
    for i in np.flatnonzero(x):
        row = np.array([mask_product(int(i), int(j), eta)[0] for j in masks], dtype=np.int8)
        targets = masks ^ i
        np.add.at(z, targets, x[i] * row * y)
    return z


def geometric_product(x: Multivector, y: Multivector) -> Multivector:
    x._check_compatible(y)
    xb = reindex(x, BINARY).coeffs
    yb = reindex(y, BINARY).coeffs
    z = Multivector(x.sig, _binary_product(xb, yb, x.sig.eta), x.field, BINARY)
    return reindex(z, x.convention)


def grade_project(x: Multivector, k: int) -> Multivector:
    if not 0 <= k <= x.n:
        raise ValueError(f"grade {k} out of range 0..{x.n}")
    conv = convention(x.convention, x.n)
    keep = np.array([conv.mask_at(i).bit_count() == k for i in range(len(x))])
    coeffs = x.coeffs.copy()
    coeffs[~keep] = 0
    return x._with(coeffs)


def grade_space(n: int, k: int, kind: str = GRADE_LEX) -> list[int]:
    """Indices (in layout ``kind``) of the blades of grade ``k``."""
    if not 0 <= k <= n:
        raise ValueError(f"grade {k} out of range 0..{n}")
    conv = convention(kind, n)
    return [i for i in range(1 << n) if conv.mask_at(i).bit_count() == k]


def embed_vector(v: Sequence, sig: Signature, kind: str = GRADE_LEX) -> Multivector:
    """Multivector sum_j v[j] * e_{j}, one coefficient per generator."""
    if len(v) != sig.n:
        raise DimensionError(f"expected {sig.n} components, got {len(v)}")
    arr = _coerce(list(v))
    coeffs = np.zeros(1 << sig.n, dtype=arr.dtype)
    conv = convention(kind, sig.n)
    for j, value in enumerate(arr):
        coeffs[conv.index_of(1 << j)] = value
    return Multivector(sig, coeffs, _infer_field(arr), kind)


def vector_part(x: Multivector) -> list:
    """Components of a grade-1 multivector, in generator order."""
    conv = convention(x.convention, x.n)
    return [x.coeffs[conv.index_of(1 << j)] for j in range(x.n)]


def polarize(x: Multivector, y: Multivector) -> tuple[Multivector, Multivector]:
    """Symmetric and antisymmetric halves of the product of two 1-vectors."""
    x._check_compatible(y)
    for name, v in (("x", x), ("y", y)):
        if not v.grades() <= {1}:
            raise ValueError(f"{name} is not a 1-vector (grades {sorted(v.grades())})")
    xy = geometric_product(x, y)
    yx = geometric_product(y, x)
    half = _half(xy.coeffs)
    return (xy + yx) * half, (xy - yx) * half


def product_table(
    sig: Signature, kind: str = GRADE_LEX, cap: int = TABLE_CAP
) -> list[list[SignedBlade]]:
    """Signed products of all basis pairs; entry masks are layout indices."""
    n = sig.n
    if n > cap:
        raise ValueError(f"table for n={n} exceeds cap {cap}")
    conv = convention(kind, n)
    eta = sig.eta
    rows = []
    for i in range(1 << n):
        row = []
        for j in range(1 << n):
            sign, mask = mask_product(conv.mask_at(i), conv.mask_at(j), eta)
            row.append(SignedBlade(sign, Blade(conv.index_of(mask), n)))
        rows.append(row)
    return rows


def table_to_csv(table: list[list[SignedBlade]]) -> str:
    return "".join(",".join(str(e) for e in row) + "\n" for row in table)


def table_to_json(table: list[list[SignedBlade]]) -> list[list[dict]]:
    return [[{"sign": e.sign, "index": e.blade.mask} for e in row] for row in table]


# JSON documents


def _scalar_to_json(c):
    if isinstance(c, (complex, np.complexfloating)):
        return [_scalar_to_json(c.real), _scalar_to_json(c.imag)]
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    if isinstance(c, (int, np.integer)):
        return int(c)
    value = float(c)
    return int(value) if value.is_integer() and abs(value) < 2**53 else value


def _scalar_from_json(c, field: str):
    if isinstance(c, bool):
        raise ValueError(f"boolean is not a coefficient: {c!r}")
    if isinstance(c, list):
        if field != COMPLEX or len(c) != 2:
            raise ValueError(f"bad complex coefficient {c!r} for field {field}")
        re, im = (_scalar_from_json(v, REAL) for v in c)
        return complex(re, im)
    if isinstance(c, str):
        return Fraction(c)
    if isinstance(c, (int, float)):
        return c
    raise ValueError(f"bad coefficient {c!r}")


def to_json(x: Multivector) -> dict:
    return {
        "p": x.sig.p,
        "q": x.sig.q,
        "field": x.field,
        "convention": x.convention,
        "coeffs": [_scalar_to_json(c) for c in x.coeffs],
    }


def from_json(doc: dict) -> Multivector:
    try:
        p, q = doc["p"], doc["q"]
        field = doc.get("field", REAL)
        kind = doc.get("convention", GRADE_LEX)
        raw = doc["coeffs"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed multivector document: {exc}") from None
    if not isinstance(p, int) or not isinstance(q, int) or isinstance(p, bool):
        raise ValueError("p and q must be integers")
    if field not in (REAL, COMPLEX):
        raise ValueError(f"unknown field {field!r}")
    if not isinstance(raw, list):
        raise ValueError("coeffs must be a list")
    values = [_scalar_from_json(c, field) for c in raw]
    if field == COMPLEX:
        coeffs = np.array([complex(v) for v in values], dtype=np.complex128)
    elif any(isinstance(v, Fraction) for v in values):
        coeffs = np.array([Fraction(v) for v in values], dtype=object)
    elif any(isinstance(v, float) for v in values):
        coeffs = np.array(values, dtype=np.float64)
    else:
        coeffs = np.array(values, dtype=object if values and max(map(abs, values)) >= 2**31 else np.int64)
    return Multivector(Signature(p, q), coeffs, field, kind)
