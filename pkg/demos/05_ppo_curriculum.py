"""Fine-tune a cloned policy with clipped-surrogate policy optimization over
a curriculum of opponents.

Starting from an imitation checkpoint, the learner (seat 0) plays games with
a scripted teammate against scripted opponents.  Trajectories are scored with
shaped terminal rewards, advantages come from generalized advantage
estimation, and the policy/value networks update whenever enough steps have
accumulated.  Phases can freeze the policy (value warm-up) and swap the
opponent; the full-size schedule is scaled down here to a few games so the
demo runs in under a minute.

The CLI equivalent of a real run:

    bomberlab train --init imitation.ckpt --out run/ --config scale=1.0
"""

import json
from pathlib import Path

from bomberlab import RunConfig, run_curriculum, train_imitation
from bomberlab import collect_imitation_dataset

OUT = Path(__file__).parent / "out"


def ensure_imitation_checkpoint() -> Path:
    ckpt = OUT / "demo_imitation.ckpt"
    if not ckpt.exists():  # demo 04 produces the same files
        OUT.mkdir(exist_ok=True)
        data = OUT / "demo_dataset.ds"
        if not data.exists():
            collect_imitation_dataset(6, seed=11, out_path=data)
        train_imitation(data, ckpt, seed=5, epochs=1)
    return ckpt


def main():
    ckpt = ensure_imitation_checkpoint()
    run_dir = OUT / "demo_run"

    cfg = RunConfig.from_mapping({
        "seed": 9,
        "phases": "StaticAgent:2:frozen,StaticAgent:3",
        "horizon": 300,          # update every ~300 recorded steps
        "batch_size": 64,
    })
    print(f"phases: {[p.render() for p in cfg.phases]}")
    print(f"run config hash: {cfg.hash()[:12]}\n")

    result = run_curriculum(
        cfg, ckpt, run_dir,
        progress=lambda done, total, rec: print(
            f"  game {done}/{total} vs {rec['opponent']}: "
            f"reward {rec['reward']:+.1f}, {rec['steps']} learner steps, "
            f"{rec['intervened_steps']} corrected"))

    print("\n(losses are expected here: the policy saw six games of data and "
          "five games of fine-tuning)")
    print(f"finished: {result['games']} games, {result['updates']} updates "
          f"in {result['seconds']:.1f}s")
    print(f"final checkpoint: {result['policy_checkpoint']}")

    print("\ntraining log records:")
    for line in Path(result["log"]).read_text().splitlines():
        rec = json.loads(line)
        if rec["type"] == "update":
            print(f"  update {rec['update']}: phase {rec['phase']} "
                  f"n={rec['n']} kl={rec['kl']:.5f} "
                  f"clip_fraction={rec['clip_fraction']:.3f} "
                  f"value_loss={rec['value_loss']:.4f}")

    print("\nfiles in the run directory:")
    for p in sorted(run_dir.iterdir()):
        print(f"  {p.name}")


if __name__ == "__main__":
    main()
