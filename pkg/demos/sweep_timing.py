"""Full sweeps at n=4 and n=5 and a sampled sweep at n=6, with timings."""

from splitstar import pancyclicity_sweep

for n, policy in ((4, "full"), (5, "full"), (6, ("sample", 500, 1))):
    rep = pancyclicity_sweep(n, policy)
    print(f"n={n}: {rep.passed}/{rep.instances} valid in {rep.seconds:.2f} s")
    for line in rep.failures[:5]:
        print("  ", line)
