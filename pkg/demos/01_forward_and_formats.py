"""Dense vs node-masked forward passes, and the binary file formats.

Generates a small seeded network and a clustered dataset, runs a full
forward pass, then reruns it with a hand-built active-set plan that
drops half of each hidden layer.  Finishes with a save/load roundtrip
showing the .slnn / .slds files are bit-exact.
"""

import os
import tempfile

import numpy as np

from slonn import model


def main():
    m = model.gen_synthetic_model(0, (16, 32, 32, 4))
    ds = model.gen_synthetic_dataset(0, 8, 16, 4, 4, 0.1)
    x = ds.features[0]

    trace = model.forward_dense(m, x)
    pred = model.predict(trace, m.output_semantics)
    print(f"model dims          {m.dims}")
    print(f"dense argmax        {pred.values.argmax()}  "
          f"(prob {pred.values.max():.3f})")

    # keep the even-indexed half of each hidden layer, every output node
    plan = model.ActiveSetPlan(
        [np.arange(0, 32, 2), np.arange(0, 32, 2), np.arange(4)],
        k_percent=50.0)
    masked = model.forward_masked(m, x, plan)
    mpred = model.predict(masked, m.output_semantics)
    print(f"masked argmax       {mpred.values.argmax()}  "
          f"(prob {mpred.values.max():.3f})")
    zeroed = masked.activations[0][1::2]
    print(f"dropped nodes zero  {bool((zeroed == 0).all())}")

    with tempfile.TemporaryDirectory() as tmp:
        mp = os.path.join(tmp, "m.slnn")
        dp = os.path.join(tmp, "d.slds")
        model.save_model(mp, m)
        model.save_dataset(dp, ds)
        m2 = model.load_model(mp)
        ds2 = model.load_dataset(dp)
        same_w = all(np.array_equal(a.weights, b.weights)
                     for a, b in zip(m.layers, m2.layers))
        print(f"model roundtrip     weights equal: {same_w}")
        print(f"dataset roundtrip   features equal: "
              f"{np.array_equal(ds.features, ds2.features)}")
        print(f"file sizes          model {os.path.getsize(mp)} B, "
              f"dataset {os.path.getsize(dp)} B")


if __name__ == "__main__":
    main()
