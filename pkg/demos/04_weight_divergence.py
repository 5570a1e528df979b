"""What changes when decision components stop mattering equally?

Re-runs the 1-2 split pair (L03 passive, L04 active) with the 'skewed'
preset, which makes the first component four times as important as the
others.  Trials share landscape tables with the equal-weight run, so the
comparison is paired.

Two effects to look for:

- The probability of reaching the optimum barely moves.  With every
  component coupled to every other, fitness values are independent draws
  across genotypes under ANY weighting, and local search only ever compares
  values, so reweighting hardly disturbs which searches succeed.
- The passive fitness rate drops.  Skewed weights spread the fitness
  distribution, which makes a miss cost more relative to the optimum; the
  active decision maker recovers most of that.

Run:  python demos/04_weight_divergence.py  [trials]
"""

import sys

from nkdecisions import RunConfig, builtin_scenario, run_scenario, with_preset

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 5000
config = RunConfig(trials=trials, master_seed=42)

print(f"{trials} paired trials per cell (master seed {config.master_seed})")
print()
print(f"{'scenario':<10} {'weights':<22} {'poo':>7} {'fitness rate':>13}")
for code in ("L03", "L04"):
    base = builtin_scenario(code)
    for label, spec in (("equal", base), ("skewed 4-1-1", with_preset(base, "skewed"))):
        result = run_scenario(spec, config)
        weights = ", ".join(f"{w:.3f}" for w in spec.weights)
        print(f"{code:<10} {label:<22} {result.poo:>7.4f} {result.mean_fitness_rate:>13.4f}")
    print()
