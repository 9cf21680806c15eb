import math

import pytest

from tritperm.experiments import (
    bench,
    exact_zero_count,
    montecarlo_zero,
    pi_matrix,
    sample_trial_matrix,
)
from tritperm.permanent import perm_mod3_fast, perm_ryser_reference


def test_exact_counts_small():
    r1 = exact_zero_count(1)
    assert (r1.z, r1.plus_ones, r1.minus_ones, r1.total) == (1, 1, 1, 3)
    r2 = exact_zero_count(2)
    assert (r2.z, r2.total) == (33, 81)
    assert r2.plus_ones == r2.minus_ones == 24
    assert r2.ratio == pytest.approx(33 / 81)


def test_exact_count_refuses_large_n():
    with pytest.raises(ValueError):
        exact_zero_count(5)
    with pytest.raises(ValueError):
        exact_zero_count(0)


def test_counts_partition_the_space():
    r = exact_zero_count(3)
    assert r.z + r.plus_ones + r.minus_ones == r.total == 3**9


def test_montecarlo_determinism_and_fields():
    a = montecarlo_zero(5, 4000, seed=11, jobs=1)
    b = montecarlo_zero(5, 4000, seed=11, jobs=4)
    assert a == b
    assert a.n == 5 and a.trials == 4000 and a.seed == 11
    assert 0 <= a.zero_count <= a.trials
    assert a.p_hat == a.zero_count / 4000
    assert a.stderr == pytest.approx(math.sqrt(a.p_hat * (1 - a.p_hat) / 4000))


def test_montecarlo_different_seeds_differ():
    # seed separation shows up directly in the sampled matrices
    assert sample_trial_matrix(4, 0, 1) != sample_trial_matrix(4, 0, 2)
    counts = {montecarlo_zero(4, 3000, seed=s).zero_count for s in range(6)}
    assert len(counts) > 1


def test_montecarlo_n1_estimates_one_third():
    r = montecarlo_zero(1, 30000, seed=5)
    assert abs(r.p_hat - 1 / 3) < 6 * r.stderr


def test_montecarlo_guards():
    with pytest.raises(ValueError):
        montecarlo_zero(0, 10)
    with pytest.raises(ValueError):
        montecarlo_zero(64, 10)
    with pytest.raises(ValueError):
        montecarlo_zero(3, 0)


def test_trial_matrices_reproduce_the_tally():
    n, trials, seed = 4, 400, 77
    r = montecarlo_zero(n, trials, seed=seed, jobs=2)
    rebuilt = sum(
        perm_mod3_fast(sample_trial_matrix(n, t, seed)) == 0 for t in range(trials)
    )
    assert rebuilt == r.zero_count


def test_pi_matrix_values():
    assert pi_matrix(3).rows == ((0, 1, 1), (1, -1, 0), (-1, 0, -1))
    assert pi_matrix(3, skip_integer_part=True).rows == (
        (1, 1, 1),
        (-1, 0, -1),
        (0, -1, 0),
    )
    assert pi_matrix(1).rows == ((0,),)


def test_pi_matrix_engines_agree():
    m = pi_matrix(6)
    assert perm_mod3_fast(m) == perm_ryser_reference(m)


def test_pi_matrix_guards():
    with pytest.raises(ValueError):
        pi_matrix(0)
    with pytest.raises(ValueError):
        pi_matrix(101)
    # exactly at the table boundary
    assert pi_matrix(100).n == 100
    with pytest.raises(ValueError):
        pi_matrix(100, skip_integer_part=True)


def test_bench_reps_zero_is_empty():
    (res,) = bench(["fast"], 8, 10, reps=0)
    assert res.rows == ()
    assert res.fit_constant is None
    assert res.rms_rel is None


def test_bench_rows_and_fit():
    results = bench(["reference", "fast"], 8, 12, reps=1)
    assert [r.method for r in results] == ["reference", "fast"]
    for res in results:
        assert [row.n for row in res.rows] == [8, 10, 12]
        assert all(row.seconds > 0 for row in res.rows)
        assert res.fit_constant > 0
        assert len(res.residuals) == len(res.rows)
    assert results[0].model == "n * 2**n"
    assert results[1].model == "2**n"


def test_bench_rejects_unknown_method():
    with pytest.raises(ValueError):
        bench(["warp"], 8, 10, reps=1)
    with pytest.raises(ValueError):
        bench(["fast"], 0, 4, reps=1)
