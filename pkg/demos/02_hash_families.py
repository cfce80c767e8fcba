"""The two hash families behind every table: SRP and FreeHash.

Part 1 checks signed random projections against theory: two unit
vectors at angle theta land in the same bucket bit with probability
1 - theta/pi.  Part 2 reuses first-layer network rows as FreeHash
hyperplanes and shows that inputs from one cluster collide on their
full K-bit key far more often than inputs from different clusters.
"""

import numpy as np

from slonn import lsh, model


def rotated_pair(rng, dim, theta):
    a = rng.standard_normal(dim)
    a /= np.linalg.norm(a)
    b = rng.standard_normal(dim)
    b -= (b @ a) * a
    b /= np.linalg.norm(b)
    return a.astype(np.float32), (np.cos(theta) * a + np.sin(theta) * b).astype(np.float32)


def key_bits(spec, x):
    keys, _pre = lsh.compute_keys(spec, x)
    return np.unpackbits(keys.view(np.uint8).reshape(len(keys), 8),
                         axis=1, bitorder="little")[:, : spec.K]


def main():
    rng = np.random.default_rng(11)
    spec = lsh.srp_spec(11, 8, 1, 32)
    print("SRP per-bit collision rate (theory 1 - theta/pi)")
    for theta in (0.0, np.pi / 4, np.pi / 2, 3 * np.pi / 4):
        hits = 0
        n = 4000
        for _ in range(n):
            a, b = rotated_pair(rng, 32, theta)
            hits += (key_bits(spec, a) == key_bits(spec, b)).mean()
        print(f"  theta={theta:5.3f}  measured {hits / n:.3f}  "
              f"theory {1 - theta / np.pi:.3f}")

    print("\nFreeHash full-key collisions on a clustered model")
    m = model.gen_cluster_model(5, 32, [96], 6, 6)
    ds = model.gen_synthetic_dataset(5, 2000, 32, 6, 6, 0.1)
    layer = m.layers[0]
    # activations over the corpus pick the high-variance rows to hash with
    acts = np.maximum(ds.features @ layer.weights.T + layer.bias, 0.0)
    nodes = lsh.sample_hash_nodes(acts, 12, seed=5)
    fspec = lsh.freehash_spec(layer.weights, layer.bias, nodes, 6, 2,
                              layer_index=0)
    keys = lsh.batch_keys(fspec, ds.features)
    same = keys[:, 0]
    rng2 = np.random.default_rng(7)
    intra = inter = n_intra = n_inter = 0
    for _ in range(4000):
        i, j = rng2.integers(0, ds.n, 2)
        if i == j:
            continue
        hit = same[i] == same[j]
        if ds.labels[i] == ds.labels[j]:
            intra += hit
            n_intra += 1
        else:
            inter += hit
            n_inter += 1
    print(f"  intra-cluster {intra / n_intra:.3f}  ({n_intra} pairs)")
    print(f"  inter-cluster {inter / n_inter:.3f}  ({n_inter} pairs)")


if __name__ == "__main__":
    main()
