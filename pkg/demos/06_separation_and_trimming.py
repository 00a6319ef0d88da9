"""Separated families, ham-sandwich cuts, and the trimming loop.

A family is separated when, in every triple of bodies, each side of
every split can be cut off strictly by a line; equivalently no line
meets all three convex hulls.  The trimming loop discards points with
oriented ham-sandwich cuts until {O} and the three hulls are separated;
O sits on every anchored cut, so it survives every step.
"""

from rainbowdepth import (
    GeneratorSpec,
    deepest_point,
    generate,
    ham_sandwich_cut,
    hyperplane_transversal_exists,
    is_separated_family,
    order_type,
    point,
    satisfies_bisection_contract,
    trim_to_separated,
)

collinear = [[point(0, 0)], [point(1, 0)], [point(2, 0)]]
witness = is_separated_family(collinear)
print("collinear singletons separated?", witness is None)
print("  failing split:", witness.split, "of tuple", witness.tuple_indices)
exists, line = hyperplane_transversal_exists(collinear)
print("  matching transversal found:", exists, "->", line)

s1 = [point(0, 0), point(4, 1), point(2, 5)]
s2 = [point(1, 2), point(5, 4)]
cut = ham_sandwich_cut([s1, s2])
print("\nham-sandwich cut of two sets:", cut)
print("contract (each open side holds at most half of each set):",
      satisfies_bisection_contract(cut, [s1, s2]))

cfg = generate(GeneratorSpec(seed=5, n=8, d=2))
o_point = deepest_point(cfg, seed=5).witness
q_sets, trace = trim_to_separated([list(c) for c in cfg.colors], o_point)
print(f"\ntrimming from sizes (8, 8, 8): {trace.step_count} steps "
      f"-> final sizes {trace.final_sizes}")
for i, step in enumerate(trace.steps):
    dropped = [len(d) for d in step.discarded]
    print(f"  step {i}: tuple {step.tuple_indices} split {step.split}, "
          f"discarded {dropped}")
print("separated afterwards:",
      is_separated_family([[o_point]] + [list(q) for q in q_sets]) is None)

reps = [q[0] for q in q_sets]
print("order type of one representative choice:", order_type([o_point] + reps))
