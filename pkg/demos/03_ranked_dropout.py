"""Importance-ranked dropout vs the random baseline, across k.

Fits node-importance tables on a clustered task, then sweeps the
compute fraction k and prints test accuracy for ranked top-k selection,
random selection of the same budget, and the full network.  Ranked
selection should win clearly at small k and match full at k=100.
"""

import numpy as np

from slonn import bench, confidence, engine, importance, model


def main():
    seed = 2
    ds = model.gen_synthetic_dataset(seed, 3600, 32, 8, 6, 0.12)
    m = model.gen_cluster_model(seed, 32, [96, 96], 6, 8)
    train, test = ds.split(3000)

    bundle = importance.fit_importance(m, train.features, K=6, L=4, seed=seed)
    eng = engine.Engine(m, bundle)

    counts = [t.spec.K for t in bundle.tables.values()]
    print(f"activators on layers {sorted(bundle.tables)}  (K={counts[0]}, "
          f"L={bundle.tables[0].spec.L})")

    rows = bench.sweep_k(eng, test, confidence.KGrid([1, 2, 5, 10, 20, 50, 100]))
    print(f"\n{'k%':>5}  {'nodes/layer':>11}  {'ranked':>6}  {'random':>6}  "
          f"{'full':>5}")
    for r in rows:
        print(f"{r['k_percent']:5.0f}  {r['nodes_per_layer']:11.1f}  "
              f"{r['acc_ranked']:6.3f}  {r['acc_random']:6.3f}  "
              f"{r['acc_full']:5.3f}")

    ranked = np.array([r["acc_ranked"] for r in rows])
    random_ = np.array([r["acc_random"] for r in rows])
    print(f"\nmean ranked-over-random gain: {(ranked - random_).mean():+.3f}")


if __name__ == "__main__":
    main()
