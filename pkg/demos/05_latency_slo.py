"""Latency-constrained inference: profiles, interference, LCAO.

Profiles a compute-heavy model across the k grid, once isolated and
once next to a busy co-located worker, then shows the LCAO selector
picking the largest k that fits each latency budget.  On a single-core
host the interfered tail is dominated by scheduler time slices, so the
selector gets very conservative there; with spare cores the two columns
stay much closer.
"""

import os

from slonn import confidence, importance, latency, model


def main():
    seed = 6
    m = model.gen_cluster_model(seed, 128, [768, 768], 8, 8)
    ds = model.gen_synthetic_dataset(seed, 1500, 128, 8, 8, 0.1)
    bundle = importance.fit_importance(m, ds.features[:1200], K=6, L=4,
                                       seed=seed, store_top_m=32)

    grid = confidence.KGrid([5, 10, 20, 50, 100])
    colo = latency.Scenario("colo1", 1, "one busy neighbor")
    print(f"profiling on {os.cpu_count()} core(s), this takes a moment...")
    prof = latency.profile(m, bundle, ds.features[1200:1300], grid,
                           [latency.ISOLATED, colo], reps=40, warmup=5,
                           seed=seed)

    print(f"\n{'k%':>5}  {'iso med':>8}  {'iso p95':>8}  {'colo med':>9}  "
          f"{'colo p95':>9}   (us)")
    for k in grid.values:
        i = prof.get("isolated", k)
        c = prof.get("colo1", k)
        print(f"{k:5.0f}  {i.median_us:8.0f}  {i.p95_us:8.0f}  "
              f"{c.median_us:9.0f}  {c.p95_us:9.0f}")

    t0 = 20.0
    full_med = prof.get("isolated", 100.0).median_us
    budgets = [0.3 * full_med, 0.6 * full_med, 1.2 * full_med, 8.0 * full_med]
    print(f"\nLCAO picks (t0={t0:.0f}us, stat=p95)")
    print(f"{'budget us':>10}  {'isolated k':>12}  {'colo1 k':>12}")
    for tau in budgets:
        ki, fi = latency.select_k_lcao(tau, t0, "isolated", prof)
        kc, fc = latency.select_k_lcao(tau, t0, "colo1", prof)
        tag_i = "" if fi else " infeasible"
        tag_c = "" if fc else " infeasible"
        print(f"{tau:10.0f}  {ki:6.0f}{tag_i:>6}  {kc:6.0f}{tag_c:>6}")


if __name__ == "__main__":
    main()
