"""Shape of the performance curve and the two lower bounds.

First the full sweep of expected cut weight against the threshold at a
fixed degree: flat at 1/2 at both ends (never flip / always flip preserve a
uniform cut), a dip below 1/2 for small thresholds, then a single sharp
maximum just past d/2. Then the guarantee as the degree grows: the optimal
threshold rule against its proven floor 1/2 + 9/(32 sqrt(d)) and the older
three-cut rule's floor 1/2 + sqrt(2)/(8 sqrt(d)).
"""

from localcut import alpha_sweep, optimal_tau, shearer_bound, threshold_bound

d = 39
print(f"alpha(tau, {d}) for every threshold:")
values = alpha_sweep(d)
peak = max(av.value for av in values)
for av in values:
    bar = "#" * round(160 * (float(av.value) - 0.3))
    marker = " <- max" if av.value == peak else ""
    print(f"  tau={av.tau:>2} {float(av.value):.6f} {bar}{marker}")

print()
print("guarantee by degree (floats shown; comparisons inside the package are exact):")
print(f"{'d':>5} {'alpha_opt':>10} {'our floor':>10} {'older floor':>11}")
for d in (2, 3, 4, 5, 8, 16, 32, 64, 128, 256, 512, 1000):
    _, value = optimal_tau(d)
    ours = threshold_bound(d).to_float()
    older = shearer_bound(d).to_float()
    tight = "  (floor met exactly)" if float(value) == ours else ""
    print(f"{d:>5} {float(value):>10.6f} {ours:>10.6f} {older:>11.6f}{tight}")

print()
print("the two floors meet the curve differently: ours touches it at d = 4")
print("and runs below it everywhere else; the older floor never touches.")
