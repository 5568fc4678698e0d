"""Conditioning on the system failing between two inspections.

If the system was alive at t1 but found failed at t2, the component law is
the conditional CDF given t1 <= X_{r:n} <= t2.  Shrinking the window onto a
single time t produces the exact-failure-time law, which is no longer
continuous: it jumps by exactly 1/n at x = t, because with probability 1/n
the inspected component is the one whose failure took the system down.
"""

import ordstat as os_

cfg = os_.SystemConfig(n=10, r=4)
model = os_.Exponential(1.0)
window = os_.Window(1.0, 2.0)

print("Window law: P{X_1 <= x | system failed between t1=1 and t2=2}")
print(f"window probability = {os_.window_prob(cfg, model, window):.6f}\n")
for x in [0.5, 0.9, 1.0, 1.5, 2.0, 2.5, 4.0]:
    v = os_.cond_cdf_between(cfg, model, x, window)
    print(f"  x = {x:4.1f}   {v:.6f}")

print()
print("Internal consistency: value * window probability must equal the")
print("difference of the joint CDF at the window edges, for every x:")
for x in [0.5, 1.5, 3.0]:
    lhs = os_.cond_cdf_between(cfg, model, x, window) * os_.window_prob(cfg, model, window)
    rhs = os_.joint_cdf_single(cfg, model, x, 2.0) - os_.joint_cdf_single(cfg, model, x, 1.0)
    print(f"  x = {x:3.1f}:  {lhs:.12f}  vs  {rhs:.12f}")

print()
print("Shrinking the window onto t = 2 (widths 1e-1 .. 1e-4) at x = 1.5:")
target = os_.cond_cdf_given_eq(cfg, model, 1.5, 2.0)
for width in [1e-1, 1e-2, 1e-3, 1e-4]:
    approx = os_.cond_cdf_between(cfg, model, 1.5, os_.Window(2.0, 2.0 + width))
    print(f"  width {width:7.0e}: {approx:.8f}   (limit {target:.8f})")

print()
print("Exact-failure-time law around x = t = 2 (n = 10, jump must be 1/10):")
for x in [1.90, 1.99, 1.999, 2.0, 2.001, 2.01, 2.10]:
    v = os_.cond_cdf_given_eq(cfg, model, x, 2.0)
    print(f"  x = {x:6.3f}   {v:.6f}")
left = os_.cond_cdf_given_eq(cfg, model, 2.0 - 1e-12, 2.0)
at = os_.cond_cdf_given_eq(cfg, model, 2.0, 2.0)
print(f"jump size = {at - left:.12f} (1/n = {1 / cfg.n})")
