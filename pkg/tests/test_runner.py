import math

import numpy as np
import pytest

from nkdecisions import (
    RunConfig,
    builtin_scenario,
    derive_trial_seed,
    hash64,
    parse_scenario_config,
    run_scenario,
    run_trial,
    run_trials,
    scenario_stream_key,
    splitmix64,
    summarize_trials,
    wilson_interval,
)

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def splitmix64_numpy(values):
    """Vectorized reimplementation used as an independent cross-check."""
    with np.errstate(over="ignore"):
        z = (values.astype(np.uint64) + np.uint64(GAMMA))
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))


class TestSeeding:
    def test_splitmix64_reference_stream(self):
        # successive outputs of the standard generator seeded at 0
        assert splitmix64(0) == 0xE220A8397B1DCDAF
        assert splitmix64(GAMMA) == 0x6E789E6AA1B965F4
        assert splitmix64((2 * GAMMA) & MASK64) == 0x06C45D188009454F

    def test_splitmix64_matches_vectorized_reimplementation(self):
        rng = np.random.default_rng(9)
        samples = rng.integers(0, 1 << 64, size=1000, dtype=np.uint64)
        expected = splitmix64_numpy(samples)
        for value, want in zip(samples.tolist(), expected.tolist()):
            assert splitmix64(value) == want

    def test_derive_is_deterministic(self):
        a = derive_trial_seed(42, "split:1-3", 17)
        b = derive_trial_seed(42, "split:1-3", 17)
        assert a == b

    def test_derive_no_collisions_over_a_million_indices(self):
        base = (np.uint64(42) ^ np.uint64(hash64("split:1-3")))
        with np.errstate(over="ignore"):
            seeds = splitmix64_numpy(base + np.arange(1_000_000, dtype=np.uint64))
        assert np.unique(seeds).size == 1_000_000
        # spot-check the vectorized scan against the scalar contract
        for idx in (0, 1, 999_999):
            assert int(seeds[idx]) == derive_trial_seed(42, "split:1-3", idx)

    def test_distinct_keys_give_distinct_seeds(self):
        codes = [f"L{i:02d}" for i in range(1, 15)]
        seeds = {derive_trial_seed(7, code, 0) for code in codes}
        assert len(seeds) == len(codes)

    def test_paired_scenarios_share_stream_key(self):
        assert scenario_stream_key(builtin_scenario("L01")) == scenario_stream_key(
            builtin_scenario("L02")
        )
        assert scenario_stream_key(builtin_scenario("L01")) != scenario_stream_key(
            builtin_scenario("L03")
        )


class TestWilson:
    def test_boundaries(self):
        low, high = wilson_interval(0, 50, 0.95)
        assert low == 0.0 and high > 0.0
        low, high = wilson_interval(50, 50, 0.95)
        assert high == 1.0 and low < 1.0

    def test_known_value(self):
        low, high = wilson_interval(50, 100, 0.95)
        assert low == pytest.approx(0.404, abs=1e-3)
        assert high == pytest.approx(0.596, abs=1e-3)

    def test_matches_direct_formula(self):
        z = 1.959963984540054
        for successes, trials in [(3, 10), (250, 1000), (9999, 10000)]:
            p = successes / trials
            denom = 1 + z * z / trials
            center = (p + z * z / (2 * trials)) / denom
            half = (z / denom) * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials**2))
            low, high = wilson_interval(successes, trials, 0.95)
            assert low == pytest.approx(max(0.0, center - half), abs=1e-9)
            assert high == pytest.approx(min(1.0, center + half), abs=1e-9)

    def test_brackets_the_point_estimate(self):
        for trials in (1, 7, 100, 5000):
            for successes in range(0, trials + 1, max(1, trials // 7)):
                low, high = wilson_interval(successes, trials, 0.95)
                assert 0.0 <= low <= successes / trials <= high <= 1.0

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            wilson_interval(-1, 10, 0.95)
        with pytest.raises(ValueError):
            wilson_interval(11, 10, 0.95)
        with pytest.raises(ValueError):
            wilson_interval(1, 0, 0.95)
        with pytest.raises(ValueError):
            wilson_interval(1, 10, 1.0)


class TestRunConfig:
    def test_defaults(self):
        config = RunConfig()
        assert config.trials == 10_000
        assert config.confidence == 0.95
        assert config.workers == 1

    @pytest.mark.parametrize(
        "kwargs", [{"trials": 0}, {"confidence": 0.0}, {"confidence": 1.0}, {"workers": 0}]
    )
    def test_rejects_invalid(self, kwargs):
        with pytest.raises(ValueError):
            RunConfig(**kwargs)


def oracle_trial(n, k, weights, n_a, active, trial_seed):
    """Straight-line single-trial reimplementation sharing no package code.

    Follows the documented seed-derivation and search rules end to end;
    every field must match run_trial exactly.
    """
    def mix(x):
        z = (x + GAMMA) & MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    landscape_seed = mix(trial_seed)
    status_quo_seed = mix(landscape_seed)
    tables = np.random.default_rng(landscape_seed).random((n, 2 ** (k + 1)))

    def fit(bits):
        total = 0.0
        for i in range(n):
            key = bits[i]
            for j in sorted((i + d) % n for d in range(1, k + 1)):
                key = key * 2 + bits[j]
            total = total + weights[i] * float(tables[i, key])
        return total

    all_fits = []
    for idx in range(2 ** n):
        all_fits.append(fit([(idx >> (n - 1 - i)) & 1 for i in range(n)]))
    optimum = max(all_fits)

    def climb(bits, comps):
        cur = list(bits)
        best_f = fit(cur)
        while True:
            move, move_f = None, best_f
            for c in comps:
                cand = list(cur)
                cand[c] ^= 1
                f = fit(cand)
                if f > move_f:
                    move, move_f = cand, f
            if move is None:
                return cur, best_f
            cur, best_f = move, move_f

    sq = [int(b) for b in np.random.default_rng(status_quo_seed).integers(0, 2, size=n)]
    a_bits, _ = climb(sq, range(n_a))
    b_bits, _ = climb(sq, range(n_a, n))
    assembled = a_bits[:n_a] + b_bits[n_a:]
    if active:
        final, final_f = climb(assembled, range(n))
    else:
        final, final_f = assembled, fit(assembled)
    return final_f, optimum, final_f == optimum, final_f / optimum


class TestRunTrial:
    @pytest.mark.parametrize("code,seed", [("L01", 42), ("L01", 7), ("L07", 42), ("L14", 123)])
    def test_matches_straight_line_oracle_exactly(self, code, seed):
        spec = builtin_scenario(code)
        result = run_trial(spec, seed)
        final_f, optimum, is_opt, rate = oracle_trial(
            spec.n, spec.k, list(spec.weights), spec.split[0],
            spec.mode.value == "active", seed,
        )
        assert result.final_fitness == final_f
        assert result.optimum_fitness == optimum
        assert result.is_optimal == is_opt
        assert result.fitness_rate == rate

    def test_optimal_trial_has_unit_rate(self):
        spec = parse_scenario_config('{"code":"K0","mode":"active","split":[1,2],"k":0}')
        for seed in range(5):
            result = run_trial(spec, derive_trial_seed(0, "split:1-2", seed))
            assert result.is_optimal
            assert result.fitness_rate == 1.0

    def test_suboptimal_trial_rate_below_one(self):
        spec = builtin_scenario("L09")
        seen_suboptimal = False
        for seed in range(20):
            result = run_trial(spec, derive_trial_seed(3, "split:3-3", seed))
            assert 0.0 < result.fitness_rate <= 1.0
            assert result.is_optimal == (result.fitness_rate == 1.0)
            seen_suboptimal |= not result.is_optimal
        assert seen_suboptimal

    def test_pure_function_of_seed(self):
        spec = builtin_scenario("L05")
        assert run_trial(spec, 99, 0) == run_trial(spec, 99, 0)


class TestRunScenario:
    def test_single_optimal_trial(self):
        spec = parse_scenario_config('{"code":"K0","mode":"active","split":[1,1],"k":0}')
        result = run_scenario(spec, RunConfig(trials=1, master_seed=5))
        assert result.poo == 1.0
        assert result.mean_fitness_rate == 1.0
        assert result.fitness_rate_se == 0.0

    def test_bit_identical_reruns(self):
        spec = builtin_scenario("L03")
        config = RunConfig(trials=400, master_seed=11)
        assert run_scenario(spec, config) == run_scenario(spec, config)

    def test_parallel_equals_serial(self):
        spec = builtin_scenario("L07")
        serial = run_trials(spec, RunConfig(trials=300, master_seed=2, workers=1))
        parallel = run_trials(spec, RunConfig(trials=300, master_seed=2, workers=4))
        assert serial == parallel
        agg_s = summarize_trials(spec, serial, RunConfig(trials=300, master_seed=2, workers=1))
        agg_p = summarize_trials(spec, parallel, RunConfig(trials=300, master_seed=2, workers=4))
        assert agg_s == agg_p

    def test_paired_scenarios_share_landscapes(self):
        config = RunConfig(trials=150, master_seed=6)
        passive = run_trials(builtin_scenario("L01"), config)
        active = run_trials(builtin_scenario("L02"), config)
        for p, a in zip(passive, active):
            assert p.optimum_fitness == a.optimum_fitness

    def test_active_dominates_passive_pairwise(self):
        config = RunConfig(trials=500, master_seed=8)
        passive = run_trials(builtin_scenario("L03"), config)
        active = run_trials(builtin_scenario("L04"), config)
        assert all(a.fitness_rate >= p.fitness_rate for p, a in zip(passive, active))
        agg_p = summarize_trials(builtin_scenario("L03"), passive, config)
        agg_a = summarize_trials(builtin_scenario("L04"), active, config)
        assert agg_a.poo >= agg_p.poo
        assert agg_a.mean_fitness_rate >= agg_p.mean_fitness_rate

    def test_results_ordered_by_trial_index(self):
        results = run_trials(builtin_scenario("L01"), RunConfig(trials=50, master_seed=1))
        assert [r.trial_index for r in results] == list(range(50))

    def test_ci_brackets_poo(self):
        result = run_scenario(builtin_scenario("L05"), RunConfig(trials=300, master_seed=4))
        low, high = result.poo_ci
        assert low <= result.poo <= high

    def test_empty_batch_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            summarize_trials(builtin_scenario("L01"), [], RunConfig())
