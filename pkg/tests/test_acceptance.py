"""Exit criteria for the package, one test per criterion.

Each test records its outcome through the ``criterion`` fixture; the
terminal summary prints one PASS/FAIL line per criterion.
"""

import itertools
import json
import math
import time
from fractions import Fraction
from pathlib import Path

import numpy as np

from cliffalg import classification, representations
from cliffalg.blades import Signature, convention, mask_product, permutation_orientation, star
from cliffalg.cli import render_table
from cliffalg.classification import COMPLEX, QUATERNION, REAL, AlgebraDescriptor
from cliffalg.division import (
    AxisAngle,
    I,
    J,
    K,
    ONE,
    Octonion,
    Quaternion,
    oct_mul,
    phi0_embed,
    phi1_embed,
    quat_exp,
    quat_rotate,
)
from cliffalg.multivector import Multivector, embed_vector, geometric_product, polarize

import oracles

DATA = Path(__file__).parent / "data"
SEED = 20261019


def signatures(max_n):
    return [Signature(p, n - p) for n in range(1, max_n + 1) for p in range(n + 1)]


def test_golden_tables(criterion):
    with criterion("1 golden tables (1,3) and (3,1), 512 entries, < 1 s"):
        start = time.perf_counter()
        outputs = {pq: render_table(*pq, order="grade-lex", fmt="csv") for pq in ((1, 3), (3, 1))}
        elapsed = time.perf_counter() - start
        for (p, q), text in outputs.items():
            golden = (DATA / f"table_{p}{q}.csv").read_text()
            got = [row.split(",") for row in text.splitlines()]
            want = [row.split(",") for row in golden.splitlines()]
            assert len(got) == len(want) == 16
            mismatches = [(i, j) for i in range(16) for j in range(16) if got[i][j] != want[i][j]]
            assert mismatches == []
            assert text == golden
        assert elapsed < 1.0


def test_orientation_claim(criterion):
    with criterion("2 orientation flips exactly at n in {3,4,5,8,9,16,17} for n <= 20, < 10 s"):
        start = time.perf_counter()
        flips = {n for n in range(1, 21) if permutation_orientation(n) == -1}
        elapsed = time.perf_counter() - start
        assert flips == {3, 4, 5, 8, 9, 16, 17}
        assert elapsed < 10.0


# Products of two 1-vectors, x = sum x_i e_i and y = sum y_j e_j with i, j in 1..4,
# keyed by grade-lex output index. Every unlisted output index is zero.
_BIVECTOR_ROWS = {
    5: lambda x, y: -x[2] * y[1] + x[1] * y[2],
    6: lambda x, y: -x[3] * y[1] + x[1] * y[3],
    7: lambda x, y: -x[4] * y[1] + x[1] * y[4],
    8: lambda x, y: -x[3] * y[2] + x[2] * y[3],
    9: lambda x, y: -x[4] * y[2] + x[2] * y[4],
    10: lambda x, y: -x[4] * y[3] + x[3] * y[4],
}
VECTOR_FORMULAS = {
    (1, 3): {0: lambda x, y: x[1] * y[1] - x[2] * y[2] - x[3] * y[3] - x[4] * y[4], **_BIVECTOR_ROWS},
    (3, 1): {0: lambda x, y: x[1] * y[1] + x[2] * y[2] + x[3] * y[3] - x[4] * y[4], **_BIVECTOR_ROWS},
}


def test_coefficient_formulas(criterion):
    with criterion("3 coefficient formulas: 2x256 indicator probes and vector-product formulas"):
        rng = np.random.default_rng(SEED)
        for p, q in ((1, 3), (3, 1)):
            sig = Signature(p, q)
            terms = json.loads((DATA / f"coefficients_{p}{q}.json").read_text())
            # coefficient of x_i y_j in z_k
            expected = {}
            for k, row in enumerate(terms):
                for sign, i, j in row:
                    assert (i, j) not in expected
                    expected[(i, j)] = (k, sign)
            assert len(expected) == 256
            for i, j in itertools.product(range(16), repeat=2):
                z = Multivector.basis(sig, i) * Multivector.basis(sig, j)
                k, sign = expected[(i, j)]
                assert z.support() == {k: sign}

            formulas = VECTOR_FORMULAS[(p, q)]
            probes = [np.eye(4, dtype=np.int64)[a] for a in range(4)]
            probes += [rng.integers(-50, 51, 4) for _ in range(50)]
            for u, v in itertools.product(probes, repeat=2):
                if len(probes) > 4 and rng.random() > 0.2:
                    continue
                z = embed_vector(list(u), sig) * embed_vector(list(v), sig)
                x, y = [0, *u], [0, *v]
                for k in range(16):
                    want = formulas[k](x, y) if k in formulas else 0
                    assert z.coeffs[k] == want


def test_closed_form_matches_recursion(criterion):
    with criterion("4 closed-form blade product == recursive definition, all pairs, p+q <= 6"):
        mismatches = 0
        pairs = 0
        for sig in signatures(6):
            size = 1 << sig.n
            for a in range(size):
                for b in range(size):
                    pairs += 1
                    if mask_product(a, b, sig.eta) != oracles.recursive_mask_product(a, b, sig.eta):
                        mismatches += 1
        assert pairs == sum((n + 1) * 4**n for n in range(1, 7))
        assert mismatches == 0


def test_algebra_laws(criterion):
    with criterion("5 associativity (1000 int triples/signature, p+q <= 5), unit law, star group = Z2^n"):
        rng = np.random.default_rng(SEED)
        for sig in signatures(5):
            size = 1 << sig.n
            one = Multivector.scalar(sig)
            for _ in range(1000):
                x, y, z = (Multivector.from_coeffs(sig, rng.integers(-9, 10, size)) for _ in range(3))
                assert (x * y) * z == x * (y * z)
                assert one * x == x == x * one

        for n in range(1, 7):
            size = 1 << n
            a = np.arange(size)
            table = np.array([[star(i, j, n) for j in range(size)] for i in range(size)])
            assert set(table.ravel()) <= set(range(size))
            # associativity over all triples
            left = table[table[:, :, None], a[None, None, :]]
            right = table[a[:, None, None], table[None, :, :]]
            assert np.array_equal(left, right)
            assert np.array_equal(table[0], a) and np.array_equal(table[:, 0], a)
            assert np.all(np.diag(table) == 0)
            # bit vectors add mod 2 under the codec
            bits = (a[:, None] >> np.arange(n)) & 1
            assert np.array_equal(bits[table], (bits[:, None, :] + bits[None, :, :]) % 2)
            # the unsigned shadow of the blade product is the group law
            eta = Signature(n, 0).eta
            assert all(mask_product(i, j, eta)[1] == table[i, j] for i in range(size) for j in range(size))


def _random_rational(rng):
    return Fraction(int(rng.integers(-30, 31)), int(rng.integers(1, 12)))


def _check_polarization(sig, u, v):
    x, y = embed_vector(u, sig), embed_vector(v, sig)
    sym, anti = polarize(x, y)
    dot = sum(ui * e * vi for ui, e, vi in zip(u, sig.eta, v))
    assert sym == Multivector.scalar(sig, dot)
    wedge = Multivector.zero(sig)
    for i, j in itertools.combinations(range(sig.n), 2):
        idx = (1 << i) | (1 << j)
        k = convention("grade-lex", sig.n).index_of(idx)
        wedge = wedge + Multivector.basis(sig, k, coefficient=Fraction(u[i] * v[j] - v[i] * u[j]))
    assert anti == wedge
    assert sym + anti == geometric_product(x, y)


def test_polarization(criterion):
    with criterion("6 polarization identities: all basis pairs + 1000 rational pairs/signature, p+q <= 5"):
        rng = np.random.default_rng(SEED)
        for sig in signatures(5):
            n = sig.n
            units = [[int(a == b) for b in range(n)] for a in range(n)]
            for u, v in itertools.product(units, repeat=2):
                _check_polarization(sig, u, v)
            for _ in range(1000):
                u = [_random_rational(rng) for _ in range(n)]
                v = [_random_rational(rng) for _ in range(n)]
                _check_polarization(sig, u, v)


def _random_unit_axis(rng):
    w = rng.normal(size=3)
    return tuple(w / np.linalg.norm(w))


def test_division_algebras(criterion):
    with criterion("7 division algebras: norm multiplicativity, embeddings, rotation vs Rodrigues, octonion witness"):
        rng = np.random.default_rng(SEED)
        for _ in range(1000):
            g, h = (Quaternion(*rng.normal(size=4)) for _ in range(2))
            assert math.isclose((g * h).norm(), g.norm() * h.norm(), rel_tol=1e-10)
            x, y = (Octonion.from_seq(rng.normal(size=8)) for _ in range(2))
            assert math.isclose((x * y).norm(), x.norm() * y.norm(), rel_tol=1e-10)

        for _ in range(100):
            g, h = (Quaternion(*(int(c) for c in rng.integers(-20, 21, 4))) for _ in range(2))
            assert np.array_equal(phi0_embed(g) @ phi0_embed(h), phi0_embed(g * h))
            assert np.array_equal(phi1_embed(g) @ phi1_embed(h), phi1_embed(g * h))

        for _ in range(1000):
            axis = _random_unit_axis(rng)
            angle = rng.uniform(-math.pi, math.pi)
            v = rng.uniform(-1, 1, 3)
            got = quat_rotate(quat_exp(AxisAngle(angle, axis)), tuple(v))
            want = oracles.rodrigues(axis, 2 * angle, v)
            assert max(abs(a - b) for a, b in zip(got, want)) <= 1e-12

        Z = Quaternion()
        e_i, e_j, unit = Octonion(I, Z), Octonion(J, Z), Octonion(Z, ONE)
        left = oct_mul(oct_mul(e_i, e_j), unit)
        right = oct_mul(e_i, oct_mul(e_j, unit))
        assert left == Octonion(Z, -K)
        assert right == Octonion(Z, K)
        assert left != right


def test_representations(criterion):
    with criterion("8 representations: 9 builtins injective, majorana/psi41 onto, both identities, quat13/c23 permuted"):
        reports = {name: representations.verify(representations.builtin(name))
                   for name in representations.BUILTIN_NAMES}
        assert len(reports) == 9
        for name, r in reports.items():
            assert r.verdict in (representations.MONOMORPHISM, representations.ISOMORPHISM), name
            assert r.blade_image_rank == 1 << representations.builtin(name).n, name
        assert reports["majorana"].verdict == representations.ISOMORPHISM
        assert reports["majorana"].blade_image_rank == reports["majorana"].ambient_real_dim == 16
        assert reports["psi41"].verdict == representations.ISOMORPHISM
        assert reports["psi41"].blade_image_rank == reports["psi41"].ambient_real_dim == 32
        ids = representations.check_identity_products()
        assert ids["A1 = i B1 B2 B3 B4"] is True
        assert ids["L = i C0 C1 C2 C3"] is True
        assert reports["quat13"].realized_matches_claimed == representations.UP_TO_PERMUTATION
        assert reports["c23"].realized_matches_claimed == representations.UP_TO_PERMUTATION


def test_classification(criterion):
    with criterion("9 classification: dimension law on all 90 splits with 1 <= p+q <= 12, spot values"):
        splits = classification.sweep(12)
        assert len(splits) == 90
        for p, q, d in splits:
            assert classification.descriptor_real_dimension(d) == 2 ** (p + q)
        spots = {
            (3, 1): AlgebraDescriptor(REAL, 4),
            (1, 3): AlgebraDescriptor(QUATERNION, 2),
            (3, 0): AlgebraDescriptor(COMPLEX, 2),
            (4, 1): AlgebraDescriptor(COMPLEX, 4),
            (1, 0): AlgebraDescriptor(REAL, 1, doubled=True),
            (0, 2): AlgebraDescriptor(QUATERNION, 1),
        }
        for (p, q), d in spots.items():
            assert classification.classify(p, q) == d
