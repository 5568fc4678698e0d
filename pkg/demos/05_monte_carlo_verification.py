"""Seeded Monte-Carlo verification of the closed forms.

Every law in the library can be checked by simulation: draw n component
lifetimes, sort them, and count events.  The generator is numpy's PCG64,
so every number below reproduces exactly for a given seed.  This script
also demonstrates the dependence structure: conditioning on the sample
maximum keeps components independent, conditioning on the minimum or an
interior order statistic does not.
"""

import ordstat as os_
from ordstat.oracle import first_observation_leq, order_stat_in_window, order_stat_leq

model = os_.Exponential(1.0)
REPS = 500_000

print(f"All estimates: {REPS:,} replications, seed shown per line.\n")

cfg = os_.SystemConfig(15, 7)
event = lambda s, o: (s[:, 0] <= 1.0) & (o[:, cfg.r - 1] <= 2.0)
est = os_.mc_event_prob(cfg, model, event, REPS, seed=101)
exact = os_.joint_cdf_single(cfg, model, 1.0, 2.0)
print("P{X_1 <= 1, system failed by 2}  (n=15, r=7, seed 101)")
print(f"  simulated {est.estimate:.5f} +- {est.std_error:.5f}   closed form {exact:.5f}\n")

cfg = os_.SystemConfig(10, 4)
w = os_.Window(1.0, 2.0)
est = os_.mc_event_prob(
    cfg, model, first_observation_leq(1.5), REPS, seed=102, given=order_stat_in_window(cfg, w)
)
exact = os_.cond_cdf_between(cfg, model, 1.5, w)
print("P{X_1 <= 1.5 | system failed in (1, 2)}  (n=10, r=4, seed 102)")
print(f"  kept {est.conditioned_fraction:.3%} of draws")
print(f"  simulated {est.estimate:.5f} +- {est.std_error:.5f}   closed form {exact:.5f}\n")

est = os_.mc_event_mean(
    cfg, model, lambda s, o: s[:, 0] - 2.0, REPS, seed=103, given=order_stat_in_window(cfg, w)
)
exact = os_.mean_residual(cfg, model, w)
print("E{X_1 - 2 | system failed in (1, 2)}  (seed 103)")
print(f"  simulated {est.estimate:.5f} +- {est.std_error:.5f}   quadrature {exact:.5f}\n")

print("Dependence of components under different conditionings:")
top = os_.SystemConfig(4, 4)
joint = os_.pair_cond_joint_cdf(top, model, 1.0, 1.2, 1.5, "max_leq")
marg1 = os_.cond_cdf_given_leq(top, model, 1.0, 1.5)
marg2 = os_.cond_cdf_given_leq(top, model, 1.2, 1.5)
print(f"  given max <= t: joint {joint:.6f}   product of marginals {marg1 * marg2:.6f}  (equal)")

bottom = os_.SystemConfig(4, 1)
joint = os_.pair_cond_joint_cdf(bottom, model, 2.0, 2.0, 1.0, "min_leq")
marg = os_.cond_cdf_given_leq(bottom, model, 2.0, 1.0)
est = os_.mc_event_prob(
    bottom, model, lambda s, o: (s[:, 0] <= 2.0) & (s[:, 1] <= 2.0), REPS, seed=104,
    given=order_stat_leq(bottom, 1.0),
)
print(f"  given min <= t: joint {joint:.6f}   product of marginals {marg * marg:.6f}  (differ)")
print(f"                  simulated joint {est.estimate:.6f} +- {est.std_error:.6f}")

mid = os_.SystemConfig(5, 2)
est = os_.mc_event_prob(
    mid, model, lambda s, o: (s[:, 0] <= 1.0) & (s[:, 1] <= 1.0), REPS, seed=105,
    given=order_stat_leq(mid, 0.5),
)
marg = os_.cond_cdf_given_leq(mid, model, 1.0, 0.5)
gap = abs(est.estimate - marg * marg) / est.std_error
print(f"  given 2nd smallest <= t: simulated joint {est.estimate:.6f}, "
      f"product {marg * marg:.6f}, gap = {gap:.1f} standard errors")
