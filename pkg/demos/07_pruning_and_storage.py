"""Neuron pruning and the activator storage footprint.

Prunes a trained-ish network to a fraction of its hidden width by
incoming-weight magnitude, checks accuracy survives, then fits
activators on the pruned model and measures the table file size
against the model file size.
"""

import os
import tempfile

import numpy as np

from slonn import importance, model


def accuracy(m, ds):
    hits = 0
    for i in range(ds.n):
        trace = model.forward_dense(m, ds.features[i])
        pred = model.predict(trace, m.output_semantics)
        hits += pred.values.argmax() == ds.labels[i]
    return hits / ds.n


def main():
    seed = 8
    ds = model.gen_synthetic_dataset(seed, 2000, 48, 8, 8, 0.1)
    m = model.gen_cluster_model(seed, 48, [160, 160], 8, 8)
    train, test = ds.split(1600)

    acc_dense = accuracy(m, test)
    pruned = model.prune_neurons(m, 0.8)
    acc_pruned = accuracy(pruned, test)
    print(f"dims   {m.dims} -> {pruned.dims}")
    print(f"acc    {acc_dense:.3f} -> {acc_pruned:.3f}  "
          f"(drop {acc_dense - acc_pruned:+.3f})")

    bundle = importance.fit_importance(pruned, train.features, K=6, L=4,
                                       seed=seed, store_top_m=16)
    print(f"tables on layers {sorted(bundle.tables)}, buckets per table "
          f"{[t.n_buckets() for t in bundle.tables.values()]}")

    with tempfile.TemporaryDirectory() as tmp:
        mp = os.path.join(tmp, "m.slnn")
        ap = os.path.join(tmp, "a.slac")
        model.save_model(mp, pruned)
        importance.save_activator(ap, bundle)
        ratio = importance.storage_overhead(ap, mp)
        print(f"files  model {os.path.getsize(mp)} B, "
              f"activator {os.path.getsize(ap)} B, "
              f"overhead {ratio:.1%}")


if __name__ == "__main__":
    main()
