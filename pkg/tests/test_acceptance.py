"""Acceptance criteria, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line; the same lines are
repeated in the terminal summary so they survive output capture.
"""

import random
import time

from partial_cramer.determinant import det_fast, det_leibniz, leading_minors
from partial_cramer.full import residual, solve_full
from partial_cramer.matrix import ColumnVector, identity, leading_submatrix, matmul, replace_column
from partial_cramer.models import ChainSpec, build_chain_system, chain_closed_form, chain_inverse_matrix, chain_matrix
from partial_cramer.oracle import partial_solve_by_substitution, solve_elimination
from partial_cramer.partial import check_induction_identity, perp_contribution, random_consistent_point, solve_partial
from partial_cramer.sampling import (
    random_float_system,
    random_fraction,
    random_positive_fraction,
    random_rational_matrix,
    random_rational_system,
)
from partial_cramer.scalars import ScalarKind

from conftest import SEED

RESULTS: dict[int, str] = {}


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS[number] = line
    print(line)
    assert ok, line


def _rational_system(n, rng, **kw):
    # alternate integer-valued and properly fractional draws
    return random_rational_system(n, rng, max_den=rng.choice([1, 7]), **kw)


def test_criterion_1_chain_partial_solve():
    rng = random.Random(SEED + 1)
    start = time.perf_counter()
    bad = 0
    for _ in range(50):
        m1, m2, m3 = (random_positive_fraction(rng) for _ in range(3))
        a, t4 = random_fraction(rng), random_fraction(rng)
        sol = solve_partial(build_chain_system(ChainSpec.of([m1, m2, m3, random_positive_fraction(rng)], a or 1)), 3)
        ok = (
            sol.prime_coeffs.to_rows() == [[1, 1, 1], [0, 1, 1], [0, 0, 1]]
            and sol.tail_coeffs.to_rows() == [[1], [1], [1]]
            and sol.evaluate([m1 * a, m2 * a, m3 * a], [t4])
            == ((m1 + m2 + m3) * a + t4, (m2 + m3) * a + t4, m3 * a + t4)
        )
        bad += not ok
    elapsed = time.perf_counter() - start
    report(1, bad == 0 and elapsed < 1.0, f"50 instantiations, {bad} mismatches, {elapsed:.3f}s < 1s")


def test_criterion_2_chain_full_solve():
    rng = random.Random(SEED + 2)
    start = time.perf_counter()
    bad = []
    for n in (1, 2, 5, 20, 100):
        spec = ChainSpec.of([random_positive_fraction(rng) for _ in range(n)], random_positive_fraction(rng))
        if solve_full(build_chain_system(spec)).x != chain_closed_form(spec):
            bad.append(f"closed form n={n}")
    for n in range(1, 51):
        if matmul(chain_inverse_matrix(n), chain_matrix(n)) != identity(n):
            bad.append(f"inverse n={n}")
    elapsed = time.perf_counter() - start
    report(2, not bad and elapsed < 5.0, f"failures={bad}, {elapsed:.3f}s < 5s")


def test_criterion_3_intermediate_determinants():
    rng = random.Random(SEED + 3)
    bad = 0
    r = chain_matrix(4)
    block = leading_submatrix(r, 3)
    d3 = det_leibniz(block)
    for _ in range(20):
        m1, m2, m3 = (random_positive_fraction(rng) for _ in range(3))
        a, t4 = random_fraction(rng), random_fraction(rng)
        xp = ColumnVector.of([m1 * a, m2 * a, m3 * a])
        v = xp - perp_contribution(r, 3).vector([t4], ScalarKind.RATIONAL)
        got = tuple(det_leibniz(replace_column(block, i, v)) for i in (1, 2, 3))
        bad += got != ((m1 + m2 + m3) * a + t4, (m2 + m3) * a + t4, m3 * a + t4)
    report(3, d3 == 1 and bad == 0, f"D3 = {d3}, 20 points, {bad} mismatches")


def test_criterion_4_specialization():
    rng = random.Random(SEED + 4)
    bad = 0
    for _ in range(300):
        sys_ = _rational_system(rng.randint(1, 7), rng, nonzero_minors=True)
        full = solve_full(sys_)
        sol = solve_partial(sys_, sys_.n)
        bad += sol.tail_coeffs is not None or sol.d_j != full.det_r or sol.evaluate(list(sys_.x_prime)) != tuple(full.x)
    report(4, bad == 0, f"300 systems, {bad} mismatches")


def test_criterion_5_oracle_equivalence():
    rng = random.Random(SEED + 5)
    start = time.perf_counter()
    bad = cuts = 0
    for _ in range(500):
        sys_ = _rational_system(rng.randint(1, 8), rng)
        bad += solve_full(sys_).x != solve_elimination(sys_).x
        minors = leading_minors(sys_.r)
        for j in range(1, sys_.n + 1):
            if minors[j] == 0:
                continue
            cuts += 1
            bad += not solve_partial(sys_, j).matches(partial_solve_by_substitution(sys_, j))
    elapsed = time.perf_counter() - start
    report(5, bad == 0 and elapsed < 30.0, f"500 systems, {cuts} partial cuts, {bad} mismatches, {elapsed:.2f}s < 30s")


def test_criterion_6_induction_and_determinant_properties():
    rng = random.Random(SEED + 6)
    bad_identity = steps = 0
    for _ in range(200):
        n = rng.randint(2, 7)
        r = _rational_system(n, rng, nonzero_minors=True).r
        for p in range(2, n + 1):
            x, xp = random_consistent_point(r, p, rng)
            lhs, rhs = check_induction_identity(r, p, x, xp)
            bad_identity += lhs != rhs
            steps += 1

    bad_linear = 0
    for _ in range(200):
        n = rng.randint(1, 6)
        m = random_rational_matrix(n, rng, max_den=5)
        i = rng.randint(1, n)
        u = ColumnVector.of([random_fraction(rng) for _ in range(n)])
        v = ColumnVector.of([random_fraction(rng) for _ in range(n)])
        alpha, beta = random_fraction(rng), random_fraction(rng)
        lhs = det_leibniz(replace_column(m, i, u.scaled(alpha) + v.scaled(beta)))
        rhs = alpha * det_leibniz(replace_column(m, i, u)) + beta * det_leibniz(replace_column(m, i, v))
        bad_linear += lhs != rhs

    bad_swap = 0
    for _ in range(200):
        n = rng.randint(2, 6)
        m = random_rational_matrix(n, rng, max_den=5)
        a, b = rng.sample(range(1, n + 1), 2)  # 1-based, as replace_column expects
        swapped = replace_column(replace_column(m, a, ColumnVector.of(m.column(b - 1))), b, ColumnVector.of(m.column(a - 1)))
        bad_swap += det_leibniz(swapped) != -det_leibniz(m)

    ok = bad_identity == bad_linear == bad_swap == 0
    report(6, ok, f"identity {steps} steps/{bad_identity} bad, multilinearity {bad_linear}/200 bad, swap {bad_swap}/200 bad")


def test_criterion_7_determinant_cross_check():
    rng = random.Random(SEED + 7)
    bad_det = bad_minor = with_zero = 0
    for t in range(500):
        n = rng.randint(1, 7)
        # the narrow range in every other draw makes singular blocks common
        m = random_rational_matrix(n, rng, *((-1, 1) if t % 2 else (-9, 9)), max_den=rng.choice([1, 4]))
        bad_det += det_fast(m) != det_leibniz(m)
        minors = leading_minors(m)
        expected = [det_leibniz(leading_submatrix(m, j)) for j in range(1, n + 1)]
        bad_minor += list(minors) != expected
        with_zero += 0 in expected
    ok = bad_det == bad_minor == 0 and with_zero > 0
    report(7, ok, f"500 matrices, det {bad_det} bad, minors {bad_minor} bad, {with_zero} with a zero minor")


def test_criterion_8_float_residual():
    rng = random.Random(SEED + 8)
    worst = 0.0
    for _ in range(100):
        sys_ = random_float_system(rng.randint(1, 8), rng, min_abs_det=1e-6)
        x = solve_full(sys_).x
        ratio = residual(sys_, x).norm_inf() / (1 + sys_.x_prime.norm_inf())
        worst = max(worst, ratio)
    report(8, worst <= 1e-9, f"100 systems, worst residual/(1+|X'|) = {worst:.2e} <= 1e-9")

