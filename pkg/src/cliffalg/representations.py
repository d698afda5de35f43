"""Explicit matrix representations of Clifford algebras and their verification."""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field

from .blades import Signature, mask_product
from .division import ONE, I, J, K, Quaternion, phi0_embed, phi1_embed
from .rings import (
    COMPLEX,
    CQUATERNION,
    IMAG,
    QUATERNION,
    REAL,
    RingMatrix,
    ambient_real_dim,
    flatten_real,
    real_rank,
)

EXACT = "exact"
UP_TO_PERMUTATION = "up-to-permutation"
MISMATCH = "mismatch"

MONOMORPHISM = "monomorphism"
ISOMORPHISM = "isomorphism"
FAILURE = "failure"


class UnknownRepresentation(KeyError):
    pass


@dataclass(frozen=True)
class Representation:
    name: str
    claimed_sig: Signature
    generators: tuple[RingMatrix, ...]
    ring: str
    description: str = ""

    def __post_init__(self):
        if len(self.generators) != self.claimed_sig.n:
            raise ValueError(
                f"{self.name}: {len(self.generators)} generators for signature {self.claimed_sig}"
            )
        shapes = {g.shape for g in self.generators}
        rings = {g.ring for g in self.generators}
        if len(shapes) != 1 or rings != {self.ring}:
            raise ValueError(f"{self.name}: generators differ in shape or ring")
        (rows, cols), = shapes
        if rows != cols:
            raise ValueError(f"{self.name}: generators are not square")

    @property
    def dim(self) -> int:
        return self.generators[0].rows

    @property
    def n(self) -> int:
        return len(self.generators)


# Generator matrices, transcribed entry by entry.

_r = lambda rows: RingMatrix.from_rows(rows, REAL)
_c = lambda rows: RingMatrix.from_rows(rows, COMPLEX)
_h = lambda rows: RingMatrix.from_rows(rows, QUATERNION)
_i = 1j

SIGMA0 = _c([[1, 0], [0, 1]])
SIGMA1 = _c([[0, 1], [1, 0]])
SIGMA2 = _c([[0, -_i], [_i, 0]])
SIGMA3 = _c([[1, 0], [0, -1]])
PAULI = (SIGMA1, SIGMA2, SIGMA3)

A1 = _r([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
A2 = _r([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
A3 = _r([[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]])
A4 = _r([[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]])

B1 = _c([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
B2 = _c([[0, 0, 0, -_i], [0, 0, _i, 0], [0, -_i, 0, 0], [_i, 0, 0, 0]])
B3 = _c([[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]])
B4 = _c([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])

_Q0 = Quaternion()
HAT_I = _h([[_Q0, I], [I, _Q0]])
HAT_J = _h([[_Q0, J], [J, _Q0]])
HAT_K = _h([[_Q0, K], [K, _Q0]])
L = _h([[1, 0], [0, -1]])


def _ci(u: Quaternion):
    """The complexified-quaternion entry i*u."""
    return IMAG * u


C0 = RingMatrix.from_rows([[0, 1], [1, 0]], CQUATERNION)
C1 = RingMatrix.from_rows([[0, -_ci(I)], [_ci(I), 0]], CQUATERNION)
C2 = RingMatrix.from_rows([[0, -_ci(J)], [_ci(J), 0]], CQUATERNION)
C3 = RingMatrix.from_rows([[0, -_ci(K)], [_ci(K), 0]], CQUATERNION)
L_CH = L.to_ring(CQUATERNION)


def _blocks(tl, tr, bl, br) -> RingMatrix:
    """4x4 complex matrix from four 2x2 blocks."""
    rows = []
    for top, bottom in ((tl, tr), (bl, br)):
        for r in range(2):
            rows.append(list(top.row(r)) + list(bottom.row(r)))
    return _c(rows)


_Z2 = RingMatrix.zeros(2, 2, COMPLEX)
D0 = _blocks(_Z2, SIGMA0, SIGMA0, _Z2)
D1, D2, D3 = (_blocks(_Z2, -s, s, _Z2) for s in PAULI)


def _catalog() -> dict[str, Representation]:
    reps = [
        Representation("pauli", Signature(3, 0), PAULI, COMPLEX, "Pauli matrices in C^2x2"),
        Representation("majorana", Signature(3, 1), (A1, A2, A3, A4), REAL, "Majorana spinors, R^4x4"),
        Representation("dirac", Signature(3, 1), (B1, B2, B3, B4), COMPLEX, "Dirac spinors, C^4x4"),
        Representation(
            "psi41", Signature(4, 1), (B1, B2, B3, A1.to_ring(COMPLEX), B4), COMPLEX,
            "R^{4,1} onto C^4x4",
        ),
        Representation("quat13", Signature(1, 3), (HAT_I, HAT_J, HAT_K, L), QUATERNION, "quaternion pairs, H^2x2"),
        Representation("c23", Signature(2, 3), (C0, C1, C2, C3, L_CH), CQUATERNION, "complexified H^2x2"),
        Representation("d13", Signature(1, 3), (D0, D1, D2, D3), COMPLEX, "Pauli blocks in C^4x4"),
        Representation(
            "phi0_quat", Signature(0, 2),
            tuple(RingMatrix.from_array(phi0_embed(u), COMPLEX) for u in (I, J)), COMPLEX,
            "quaternions R^{0,2} in C^2x2",
        ),
        Representation(
            "phi1_quat", Signature(0, 2),
            tuple(RingMatrix.from_array(phi1_embed(u), REAL) for u in (I, J)), REAL,
            "quaternions R^{0,2} in R^4x4",
        ),
    ]
    return {r.name: r for r in reps}


CATALOG = _catalog()
BUILTIN_NAMES = tuple(CATALOG)


def builtin(name: str) -> Representation:
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownRepresentation(
            f"unknown representation {name!r}; choose from {', '.join(BUILTIN_NAMES)}"
        ) from None


def extend_to_blades(rep: Representation) -> dict[int, RingMatrix]:
    """Image of every blade mask: ordered product of generators, ascending index."""
    images = {0: RingMatrix.identity(rep.dim, rep.ring)}
    for mask in range(1, 1 << rep.n):
        top = mask.bit_length() - 1
        images[mask] = images[mask ^ (1 << top)] @ rep.generators[top]
    return images


@dataclass
class VerificationReport:
    name: str
    claimed: tuple[int, int]
    realized_squares: list
    anticommute_ok: bool
    realized_matches_claimed: str
    permutation: list[int] | None
    blade_image_rank: int
    expected_rank: int
    ambient_real_dim: int
    verdict: str
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        doc = asdict(self)
        doc["claimed"] = {"p": self.claimed[0], "q": self.claimed[1]}
        return doc


def _match_signature(realized: list, eta: tuple[int, ...]):
    if list(realized) == list(eta):
        return EXACT, list(range(len(eta)))
    if None in realized or sorted(realized) != sorted(eta):
        return MISMATCH, None
    # perm[k] is the generator standing in for the k-th claimed slot.
    unused = list(range(len(realized)))
    perm = []
    for want in eta:
        g = next(g for g in unused if realized[g] == want)
        unused.remove(g)
        perm.append(g)
    return UP_TO_PERMUTATION, perm


def verify(rep: Representation) -> VerificationReport:
    gens = rep.generators
    failures = []

    squares = [(g @ g).is_scalar_identity() for g in gens]
    for k, s in enumerate(squares):
        if s is None:
            failures.append(f"generator {k} does not square to +/- identity")

    anticommute_ok = True
    for a, b in itertools.combinations(range(len(gens)), 2):
        ga, gb = gens[a], gens[b]
        residual = ga @ gb + gb @ ga
        if residual != RingMatrix.zeros(rep.dim, rep.dim, rep.ring):
            anticommute_ok = False
            failures.append(f"generators {a} and {b} do not anticommute")

    match, perm = _match_signature(squares, rep.claimed_sig.eta)
    if match == MISMATCH:
        failures.append("realized squares do not match the claimed signature")

    images = extend_to_blades(rep)
    rank = real_rank(flatten_real(m) for m in images.values())
    expected = 1 << rep.n
    ambient = ambient_real_dim(rep.dim, rep.ring)
    if rank < expected:
        failures.append(f"blade images span only {rank} of {expected} dimensions")

    if failures:
        verdict = FAILURE
    elif rank == ambient:
        verdict = ISOMORPHISM
    else:
        verdict = MONOMORPHISM

    return VerificationReport(
        name=rep.name,
        claimed=(rep.claimed_sig.p, rep.claimed_sig.q),
        realized_squares=squares,
        anticommute_ok=anticommute_ok,
        realized_matches_claimed=match,
        permutation=perm if match == UP_TO_PERMUTATION else None,
        blade_image_rank=rank,
        expected_rank=expected,
        ambient_real_dim=ambient,
        verdict=verdict,
        failures=failures,
    )


def homomorphism_defects(rep: Representation, eta=None) -> list[tuple[int, int]]:
    """Blade pairs (a, b) where image(a) image(b) != sign(a, b) image(a ^ b).

    ``eta`` defaults to the generators' realized squares, so reordered
    signatures are checked against the metric they actually carry.
    """
    if eta is None:
        eta = tuple((g @ g).is_scalar_identity() for g in rep.generators)
    images = extend_to_blades(rep)
    bad = []
    for a, b in itertools.product(images, repeat=2):
        sign, mask = mask_product(a, b, eta)
        expected = images[mask] if sign > 0 else -images[mask]
        if images[a] @ images[b] != expected:
            bad.append((a, b))
    return bad


def check_identity_products() -> dict:
    """The two pseudoscalar identities and the rank test behind them."""
    dirac_pseudo = (B1 @ B2 @ B3 @ B4).scale(1j)
    c_pseudo = (C0 @ C1 @ C2 @ C3).scale(IMAG)

    dirac_images = [flatten_real(m) for m in extend_to_blades(builtin("dirac")).values()]
    i_identity = flatten_real(RingMatrix.identity(4, COMPLEX).scale(1j))
    base = real_rank(dirac_images)
    extended = real_rank(dirac_images + [i_identity])
    return {
        "A1 = i B1 B2 B3 B4": dirac_pseudo == A1.to_ring(COMPLEX),
        "L = i C0 C1 C2 C3": c_pseudo == L_CH,
        "iI outside dirac image": extended == base + 1,
        "dirac_rank": base,
        "dirac_rank_with_iI": extended,
    }


def _coords(m: RingMatrix, basis: list[RingMatrix]) -> list[float]:
    """Coordinates of ``m`` in a Frobenius-orthogonal basis."""
    v = flatten_real(m)
    out = []
    for b in basis:
        w = flatten_real(b)
        out.append(sum(x * y for x, y in zip(v, w)) / sum(y * y for y in w))
    return out


def pauli_quaternion_subalgebra() -> dict:
    """Check that span{1, i s1, i s2, i s3} is a copy of H and which sign maps realize it."""
    basis = [SIGMA0] + [s.scale(1j) for s in PAULI]
    flat = [flatten_real(b) for b in basis]
    rank = real_rank(flat)

    closed = True
    products = {}
    for a, b in itertools.product(range(4), repeat=2):
        prod = basis[a] @ basis[b]
        coords = _coords(prod, basis)
        rebuilt = RingMatrix.zeros(2, 2, COMPLEX)
        for c, bm in zip(coords, basis):
            rebuilt = rebuilt + bm.scale(c)
        if not rebuilt.isclose(prod, 1e-12):
            closed = False
        products[(a, b)] = coords

    variants = []
    for signs in itertools.product((1, -1), repeat=3):
        images = [ONE] + [s * u for s, u in zip(signs, (I, J, K))]

        def phi(coords):
            total = Quaternion()
            for c, u in zip(coords, images):
                total = total + u * c
            return total

        multiplicative = all(
            phi(products[(a, b)]).isclose(images[a] * images[b])
            for a, b in itertools.product(range(4), repeat=2)
        )
        variants.append({"signs": list(signs), "multiplicative": multiplicative})

    return {
        "closed": closed,
        "rank": rank,
        "variants": variants,
        "literal_map_multiplicative": variants[0]["multiplicative"],
    }
