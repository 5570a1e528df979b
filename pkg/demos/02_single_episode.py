"""One decision episode, step by step: how coordination failure happens.

Two subordinates improve their own decisions against a frozen status quo.
Each move is individually rational, but with fully coupled components the
combined result can be worse than not moving at all.  An active decision
maker repairs this by re-searching from the assembled proposal.

Run:  python demos/02_single_episode.py
"""

from nkdecisions import (
    DecisionAssignment,
    Mode,
    climb_path,
    enumerate_global_optimum,
    generate_landscape,
    run_episode_from,
)

land = generate_landscape(n=4, k=3, seed=1)
assignment = DecisionAssignment.from_split(1, 3)
status_quo = (0, 0, 0, 0)

print(f"landscape n={land.n}, k={land.k}; subordinate A owns {assignment.masks[0]}, "
      f"B owns {assignment.masks[1]}")
print(f"status quo {status_quo} at fitness {land.fitness(status_quo):.4f}")
print()

for name, mask in zip("AB", assignment.masks):
    path = climb_path(land, status_quo, mask)
    print(f"subordinate {name} climbs within {mask}:")
    for g in path:
        print(f"  {g} -> {land.fitness(g):.4f}")

passive = run_episode_from(land, status_quo, assignment, Mode.PASSIVE)
print()
print(f"proposals: {[(p.subordinate, p.bits) for p in passive.proposals]}")
print(f"assembled: {passive.assembled} at fitness {passive.final_fitness:.4f}")
if passive.final_fitness < land.fitness(status_quo):
    print("  ... WORSE than the status quo: each move was an improvement only")
    print("      while the other side stood still.")

active = run_episode_from(land, status_quo, assignment, Mode.ACTIVE)
report = enumerate_global_optimum(land)
print()
print(f"passive decision maker keeps {passive.final} -> {passive.final_fitness:.4f}")
print(f"active decision maker re-searches: {active.final} -> {active.final_fitness:.4f}")
print(f"global optimum: {report.optima[0]} -> {report.fitness:.4f}")
print()
print(f"passive reached the optimum: {passive.final in report.optima}")
print(f"active reached the optimum:  {active.final in report.optima}")
