#!/usr/bin/env python3
"""The ladder-weighted monogamy bound, where it tightens, and where it breaks.

The weighted lower bound multiplies the pairwise entanglement powers by the
ladder (2^mu - 1)^k, which lifts the right-hand side above the unweighted
baseline whenever mu >= 2.  On the reference three-qubit state the weighted
bound holds with room to spare.  It does NOT hold universally: the uniform W
state satisfies the ordering hypothesis (with ties) and violates the weighted
bound outright, because the spectral function is subadditive, not
superadditive.  This script shows both sides of that story.
"""

import numpy as np

from monoq import (
    AlphaMu,
    ckw_check,
    detect_ordering,
    haar_random_state,
    lemma1_check,
    theorem_bound,
    w_state,
    weight_ladder,
)
from monoq.harness import figure_rows, reference_schmidt_state

print("=" * 72)
print("1. Base inequalities that do hold universally")
print("=" * 72)

print("Squared-concurrence monogamy on 200 Haar 3-qubit states:")
worst = min(ckw_check(haar_random_state(3, seed=s)).margin for s in range(200))
print(f"  worst margin = {worst:.3e}  (never below -1e-10)")

print("Weighted concurrence-power inequality (x = 2, 3, 4), same ensemble:")
worst = min(
    lemma1_check(haar_random_state(3, seed=s), x).margin
    for s in range(200)
    for x in (2.0, 3.0, 4.0)
)
print(f"  worst margin = {worst:.3e}")
eq = lemma1_check(w_state(), 2.0)
print(f"  W state saturates x=2 exactly: lhs={eq.lhs:.9f} rhs={eq.rhs:.9f}")

print()
print("=" * 72)
print("2. The weight ladder")
print("=" * 72)

print("mu=2, fully ordered:", weight_ladder(5, "full", 2.0))
print("mu=2, split at m=1 (4 parties):", weight_ladder(4, 1, 2.0))
print("Every weight is >= 1 for mu >= 2, so the weighted right-hand side")
print("always sits on or above the unweighted baseline.")

print()
print("=" * 72)
print("3. The reference state: bound holds and tightens")
print("=" * 72)

psi = reference_schmidt_state()
profile = detect_ordering(psi)
print(f"pair concurrences : {np.round(profile.pair_concurrences, 6)}")
print(f"tail concurrences : {np.round(profile.tail_concurrences, 6)}")
print(f"split             : {profile.split_index}")
for mu in (2.0, 3.0, 5.0):
    rep = theorem_bound(psi, profile, AlphaMu(0.823, mu))
    print(f"  mu={mu}: lhs={rep.lhs:.6f}  weighted rhs={rep.rhs:.6f}  "
          f"baseline={rep.baseline_rhs:.6f}  margin={rep.margin:+.6f}")

print("\nCurve data for the same state (first rows of the fig1 table):")
header, rows = figure_rows("fig1")
print("  " + ",".join(header))
for row in rows[:4]:
    print("  " + ",".join(f"{v:.9f}" for v in row))

print()
print("=" * 72)
print("4. The W state: hypothesis satisfied, weighted bound violated")
print("=" * 72)

wpsi = w_state()
wprof = detect_ordering(wpsi)
print(f"pair concurrences : {np.round(wprof.pair_concurrences, 6)}  (ties)")
print(f"tail concurrences : {np.round(wprof.tail_concurrences, 6)}")
print(f"split             : {wprof.split_index}")
rep = theorem_bound(wpsi, wprof, AlphaMu(0.823, 2.0))
print(f"mu=2: lhs = {rep.lhs:.6f}")
print(f"      weighted rhs = {rep.rhs:.6f}   -> margin = {rep.margin:+.6f}  (VIOLATED)")
print(f"      unweighted baseline = {rep.baseline_rhs:.6f} -> the plain sum still holds")
print()
print("The weighted step needs f(x+y) >= f(x) + f(y) for the spectral")
print("function, but f is subadditive (cf. the polygamy direction), so the")
print("ladder overshoots whenever the pair terms are comparable and the")
print("squared-concurrence budget is nearly exhausted.  The fuzz harness")
print("(see demo 04) finds such witnesses in bulk; they are reported, not")
print("hidden, and every witness replays from its recorded seed.")
