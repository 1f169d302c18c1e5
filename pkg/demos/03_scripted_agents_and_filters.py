"""Demonstrate the two post-processors that wrap any policy:

* jitter correction — watches recent positions, and when the agent has been
  oscillating (or frozen) hands control to the heuristic expert for a few
  steps to break the loop;
* action filter — vetoes moves that walk into a cell that will be covered by
  flames within the next two ticks, redrawing another direction instead.

Both are probabilistically armed per game during training; here we drive them
directly so the mechanics are visible.
"""

import numpy as np

from bomberlab import (
    Action,
    PositionHistory,
    apply_action_filter,
    danger_cells,
    detect_jitter,
    draw_arming,
    generate_board,
    observe,
    step,
)


def show_jitter_detection():
    print("=== jitter detection on synthetic position traces ===\n")
    history = PositionHistory()
    for t in range(15):
        history.record((5, 5))
        verdict = detect_jitter(history)
        if verdict is not None:
            print(f"static agent:      flagged after {t + 1} repeats "
                  f"({verdict.kind.name}, expert for {verdict.expert_steps} steps)")
            break

    history = PositionHistory()
    for t in range(12):
        history.record((5, 5) if t % 2 == 0 else (5, 6))
        verdict = detect_jitter(history)
        if verdict is not None:
            print(f"two-cell ping-pong: flagged after {t + 1} moves "
                  f"({verdict.kind.name}, expert for {verdict.expert_steps} steps)")
            break

    # pausing between hops defeats the strict alternation test, but 35 ticks
    # stuck on two cells of one column still counts as oscillation
    history = PositionHistory()
    for t in range(40):
        history.record((5, 5) if (t // 2) % 2 == 0 else (5, 6))
        verdict = detect_jitter(history)
        if verdict is not None:
            print(f"slow two-cell loop:  flagged after {t + 1} moves "
                  f"({verdict.kind.name}, expert for {verdict.expert_steps} steps)")
            break


def show_action_filter():
    print("\n=== action filter near a live bomb ===\n")
    state = generate_board(22)
    # agent 0 drops a bomb at its spawn, escapes the blast cross, then idles
    # while the fuse burns down
    own = [Action.PlaceBomb, Action.Down, Action.Down, Action.Right]
    own += [Action.Stop] * 5
    for mine in own:
        state, _ = step(state, [mine, Action.Stop, Action.Stop, Action.Stop])

    obs = observe(state, 0)
    bomb = obs.bombs[0]
    print(f"agent at {obs.position}; bomb at {bomb.position} "
          f"with {bomb.life} ticks on the fuse, blast {bomb.blast_strength}")
    hazard = danger_cells(obs, horizon=2)
    print(f"cells lethal within 2 ticks: {sorted(hazard)}")

    rng = np.random.default_rng(3)
    proposed = Action.Left  # walks back into the bomb's column
    chosen = apply_action_filter(obs, proposed, rng)
    print(f"proposed {proposed.name} -> filter chose {chosen.name}")
    assert chosen != Action.Left

    safe = Action.Stop
    assert apply_action_filter(obs, safe, rng) == safe
    print(f"proposed {safe.name} -> unchanged (already safe)")


def show_arming_draws():
    print("\n=== per-game arming draws ===\n")
    rng = np.random.default_rng(42)
    draws = [draw_arming(rng) for _ in range(10_000)]
    jitter = np.mean([j for j, _ in draws])
    action = np.mean([a for _, a in draws])
    print(f"over 10k games: jitter armed {jitter:.3f} (target 0.10), "
          f"filter armed {action:.3f} (target 0.30)")


def main():
    show_jitter_detection()
    show_action_filter()
    show_arming_draws()


if __name__ == "__main__":
    main()
