"""Tour of an NK landscape: tables, lookup keys, fitness, global optimum.

Run:  python demos/01_landscape_tour.py
"""

import json

from nkdecisions import enumerate_global_optimum, generate_landscape

# A small fully-coupled landscape: 4 binary decisions, each one's payoff
# contribution depends on every other decision (k = n - 1).
land = generate_landscape(n=4, k=3, seed=2024)
print(f"landscape: n={land.n}, k={land.k}, seed={land.seed}")
print(f"weights:   {land.weights.tolist()}  (equal by default)")
print(f"influence: {dict(enumerate(land.influence))}")
print()

# Component 0's contribution table: 2^(k+1) entries, one per local
# configuration (own bit first, then influencer bits ascending).
print("component 0 contribution table:")
for key in range(land.tables.shape[1]):
    print(f"  {key:0{land.k + 1}b} -> {land.tables[0, key]:.4f}")
print()

# Fitness is the weighted sum of per-component contributions.
g = (1, 0, 1, 1)
print(f"genotype {g}:")
for i in range(land.n):
    key = land.local_configuration(i, g)
    print(f"  component {i}: key {key} -> contribution {land.tables[i, int(key, 2)]:.4f}")
print(f"  fitness = {land.fitness(g):.4f}")
print()

# Exhaustive search over all 2^n genotypes finds the global optimum.
report = enumerate_global_optimum(land)
print(f"global optimum: {report.optima} at fitness {report.fitness:.4f}")
print()

# The full landscape, ranked. With k = n - 1 there is no structure to
# exploit: neighbouring genotypes have unrelated fitness (a rugged landscape).
values = land.fitness_values()
ranked = sorted(enumerate(values), key=lambda pair: -pair[1])
print("all 16 genotypes, best to worst:")
for idx, fit in ranked:
    bits = "".join(str(b) for b in format(idx, f"0{land.n}b"))
    marker = "  <- optimum" if fit == report.fitness else ""
    print(f"  {bits}  {fit:.4f}{marker}")
print()

# Landscapes serialize to JSON for inspection or archiving.
doc = json.loads(land.to_json())
print(f"JSON dump keys: {sorted(doc)}; tables[0]['0000'] = {doc['tables'][0]['0000']:.4f}")
