"""Show what a single agent actually sees, and how that view becomes the
19-channel float tensor the network consumes.

Each agent only observes an 11x11 window censored to Chebyshev distance 5
around itself — everything further away reads as fog.  `encode` turns one such
observation into a (19, 11, 11) array of one-hot masks, broadcast scalars,
and a coarse desirability map.
"""

import numpy as np

from bomberlab import Action, CellKind, NUM_CHANNELS, encode, generate_board, observe, step
from bomberlab.encode import CH_SELF, CH_AMMO, CH_DESIRABILITY

CHANNEL_NAMES = [
    "passage", "rigid", "wooden", "bomb", "flames", "fog",
    "extra-bomb item", "range item", "kick item",
    "self", "teammate", "enemy (lower id)", "enemy (higher id)",
    "own ammo", "own blast strength", "own can-kick",
    "bomb blast strength", "bomb fuse remaining", "desirability",
]


def main():
    state = generate_board(17)
    # let a bomb appear so the hazard channels are non-trivial
    for _ in range(3):
        state, _ = step(state, [Action.PlaceBomb, Action.Stop,
                                Action.Stop, Action.Stop])

    obs = observe(state, 0)
    print(f"agent 0 at {obs.position}, tick {obs.tick}")
    print(f"teammate: agent {obs.teammate_id}, enemies: {obs.enemy_ids}")

    fog = np.sum(obs.board == CellKind.Fog)
    print(f"fogged cells in the view: {fog} of 121")
    print(f"visible bombs: {len(obs.bombs)}  visible agents: {len(obs.agents)}")

    x = encode(obs)
    assert x.shape == (NUM_CHANNELS, 11, 11) and x.dtype == np.float32

    print("\nchannel inventory (sum of each plane):")
    for i, name in enumerate(CHANNEL_NAMES):
        print(f"  {i:2d}  {name:<22} sum={x[i].sum():7.2f}")

    # A few invariants worth knowing:
    assert x[CH_SELF].sum() == 1.0            # exactly one "self" cell
    onehot = x[0:9].sum(axis=0)
    assert np.array_equal(onehot, np.ones((11, 11)))
    print("\ncontent channels 0-8 are one-hot per cell; the self plane marks "
          "exactly one cell.")

    # Scalars are broadcast to full planes so convolutions can see them.
    print(f"ammo plane value everywhere: {x[CH_AMMO, 5, 5]:.1f} "
          f"(started with 1, placed a bomb)")

    print("\ndesirability map (0 best .. 8 worst, fog shows as 3):")
    for row in x[CH_DESIRABILITY].astype(int):
        print("  " + " ".join(str(v) for v in row))


if __name__ == "__main__":
    main()
