"""Exact shortest-plan search over (position, heading) states.

Breadth-first search where every action, turns included, costs one step.
Used as ground truth for plan verification and baseline bounds.
"""
from __future__ import annotations

from collections import deque

from .gridworld import Action, AgentPose, Direction, GridLayout, advance

_EXPANSION_ORDER = (Action.TURN_LEFT, Action.TURN_RIGHT, Action.MOVE_FORWARD)


class Unreachable(RuntimeError):
    """No action sequence connects the start pose to the goal."""


def shortest_plan(layout: GridLayout, start: AgentPose) -> list[Action]:
    """Minimum-length action sequence from start to the goal cell.

    Ties are broken by the fixed expansion order turn_left < turn_right <
    move_forward, so the returned plan is deterministic. An empty plan means
    the start pose already sits on the goal.
    """
    if layout.is_wall(start.x, start.y):
        raise ValueError("start pose is inside a wall")
    if start.cell == layout.goal:
        return []

    start_key = (start.x, start.y, start.direction)
    parents: dict[tuple[int, int, Direction], tuple[tuple[int, int, Direction], Action] | None]
    parents = {start_key: None}
    queue = deque([start_key])
    while queue:
        key = queue.popleft()
        pose = AgentPose(*key)
        for action in _EXPANSION_ORDER:
            nxt = advance(layout, pose, action)
            nkey = (nxt.x, nxt.y, nxt.direction)
            if nkey in parents:
                continue
            parents[nkey] = (key, action)
            if nxt.cell == layout.goal:
                return _reconstruct(parents, nkey)
            queue.append(nkey)
    raise Unreachable(f"goal {layout.goal} unreachable from {start}")


def _reconstruct(parents, key) -> list[Action]:
    plan: list[Action] = []
    while parents[key] is not None:
        key, action = parents[key]
        plan.append(action)
    plan.reverse()
    return plan
