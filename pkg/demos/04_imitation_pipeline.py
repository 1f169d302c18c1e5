"""Collect expert demonstrations and clone them into a network.

Four heuristic agents play full games against each other; every observation
each of them receives is encoded and stored with the action they took.  The
convolutional policy is then fit to predict those actions by cross-entropy,
with a by-game holdout split measuring generalization.

This runs a deliberately tiny version (a handful of games, one epoch) so it
finishes in under a minute.  The CLI equivalents are:

    bomberlab collect --games 500 --seed 0 --out dataset.ds
    bomberlab imitate --data dataset.ds --out imitation.ckpt
"""

from pathlib import Path

from bomberlab import (
    collect_imitation_dataset,
    load_checkpoint,
    load_dataset,
    read_dataset_count,
    train_imitation,
)

OUT = Path(__file__).parent / "out"


def main():
    OUT.mkdir(exist_ok=True)
    data = OUT / "demo_dataset.ds"

    manifest = collect_imitation_dataset(
        6, seed=11, out_path=data,
        progress=lambda done, total: print(f"  game {done}/{total} done"))
    print(f"\ncollected {manifest['n_records']} (observation, action) pairs "
          f"from {manifest['n_games']} games")
    print(f"records per game: {manifest['record_counts']}")
    print(f"dataset size on disk: {data.stat().st_size / 1e6:.1f} MB "
          f"({read_dataset_count(data)} fixed-width records)")

    tensors, actions = load_dataset(data)  # memory-mapped views
    print(f"tensor block: {tensors.shape} {tensors.dtype}, "
          f"actions: {actions.shape} {actions.dtype}")

    ckpt = OUT / "demo_imitation.ckpt"
    result = train_imitation(
        data, ckpt, seed=5, epochs=1,
        progress=lambda epoch, seen, ce, acc: print(
            f"  epoch {epoch}, {seen} minibatches: "
            f"holdout ce={ce:.4f} acc={acc:.3f}"))

    print(f"\nmajority-action frequency: {result.majority_freq:.3f}")
    print(f"holdout accuracy:          {result.best_holdout_acc:.3f}")
    print(f"holdout cross-entropy:     {result.best_holdout_ce:.4f}")
    print(f"final train cross-entropy: {result.final_train_ce:.4f}")
    print(f"train/holdout records:     {result.n_train}/{result.n_holdout}")

    params = load_checkpoint(ckpt)
    print(f"\ncheckpoint metadata: {params.meta}")
    print(f"parameter count: {sum(a.size for a in params.arrays)}")


if __name__ == "__main__":
    main()
