"""Generate a board, watch a full game between scripted teams, and print
what happened.

The engine is fully deterministic: the same seed always produces the same
board, and the same (board, action sequence) always produces the same game.
Run this twice and the output will be identical.
"""

import numpy as np

from bomberlab import (
    Action,
    CellKind,
    Outcome,
    SimpleAgent,
    StaticAgent,
    generate_board,
    observe,
    step,
    terminal_status,
)
from bomberlab.seeding import AGENT, stream

GLYPHS = {CellKind.Passage: ".", CellKind.Rigid: "#", CellKind.Wooden: "+"}


def render(state):
    """ASCII snapshot: walls, crates, bombs, flames, and agent ids."""
    rows = [[GLYPHS[CellKind(v)] for v in row] for row in state.board]
    for bomb in state.bombs:
        r, c = bomb.position
        rows[r][c] = "o"
    for r, c in state.flames:
        rows[r][c] = "*"
    for agent in state.agents:
        if agent.alive:
            r, c = agent.position
            rows[r][c] = str(agent.id)
    return "\n".join(" ".join(row) for row in rows)


def main():
    seed = 7
    state = generate_board(seed)
    print(f"board for seed {seed} (agents 0/2 vs 1/3, # rigid, + wooden):\n")
    print(render(state))

    # Team 0 plays the full heuristic; team 1 never moves.
    agents = {
        0: SimpleAgent(stream(seed, AGENT, 0)),
        1: StaticAgent(),
        2: SimpleAgent(stream(seed, AGENT, 2)),
        3: StaticAgent(),
    }

    while terminal_status(state) is None:
        actions = [
            agents[a.id].act(observe(state, a.id)) if a.alive else Action.Stop
            for a in state.agents
        ]
        state, events = step(state, actions)
        if events.deaths or events.pickups:
            for aid in events.deaths:
                print(f"tick {state.tick:3d}: agent {aid} died")
            for aid, kind, _pos in events.pickups:
                print(f"tick {state.tick:3d}: agent {aid} picked up {kind.name}")

    outcome = terminal_status(state)
    print(f"\nfinal position at tick {state.tick}:\n")
    print(render(state))
    print(f"\noutcome: {outcome.name}")
    assert outcome == Outcome.Team0Wins

    survivors = [a.id for a in state.agents if a.alive]
    print(f"survivors: {survivors}")
    ammo = np.array([a.ammo for a in state.agents])
    blast = np.array([a.blast_strength for a in state.agents])
    print(f"ammo by seat:  {ammo}")
    print(f"blast by seat: {blast}")


if __name__ == "__main__":
    main()
