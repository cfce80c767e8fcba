"""Accuracy-constrained inference: confidence tables, calibration, ACLO.

Trains confidence tables over a k grid, calibrates a threshold-accuracy
curve on held-out data, then serves queries under accuracy targets.
Looser targets let the selector pick smaller k; each query reports the
confidence estimate that justified its choice.
"""

import numpy as np

from slonn import confidence, engine, importance, model


def main():
    seed = 4
    ds = model.gen_synthetic_dataset(seed, 4000, 32, 8, 6, 0.12)
    m = model.gen_cluster_model(seed, 32, [96, 96], 6, 8)
    train, rest = ds.split(3000)
    held, test = rest.split(500)

    grid = confidence.KGrid([5, 10, 20, 50, 100])
    bundle = importance.fit_importance(m, train.features, K=6, L=4, seed=seed)
    bundle.confidence = confidence.train_confidence_tables(
        m, bundle, train.features, grid, K=6, L=4, seed=seed)
    curve = confidence.build_calibration(m, bundle, bundle.confidence, held, grid)

    print("calibration curve (threshold -> empirical accuracy, coverage)")
    for t, a, c in zip(curve.thresholds[::6], curve.accuracy[::6],
                       curve.coverage[::6]):
        print(f"  t={t:9.4f}  acc={a:.3f}  cov={c:.3f}")

    eng = engine.Engine(m, bundle, calibration=curve)
    print(f"\n{'target a*':>9}  {'t*':>8}  {'mean k':>6}  {'accuracy':>8}  "
          f"{'feasible':>8}")
    for a_star in (0.99, 0.95, 0.90, 0.80):
        t_star = curve.certify(a_star)
        ks, hits, feas = [], 0, 0
        for i in range(test.n):
            res = engine.infer(
                eng, engine.SloQuery(x=test.features[i], a_star=a_star),
                engine.SloMode.aclo())
            ks.append(res.k_used)
            hits += res.prediction.top_class() == test.labels[i]
            feas += res.feasible
        print(f"{a_star:9.2f}  {t_star:8.3f}  {np.mean(ks):6.1f}  "
              f"{hits / test.n:8.3f}  {feas / test.n:8.2f}")


if __name__ == "__main__":
    main()
