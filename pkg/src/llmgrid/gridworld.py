"""Deterministic grid navigation environment.

Three task layouts of increasing difficulty, value-semantic state, and
MiniGrid-style dynamics: turn left / turn right / move forward, with a
success reward that decays linearly with episode length.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, replace
from enum import Enum, IntEnum
from typing import Iterator

DEFAULT_MAX_STEPS = 100

Cell = tuple[int, int]


def seeded_rng(label: str, seed: int) -> random.Random:
    """Independent RNG stream for one purpose.

    Keying the generator on a label string keeps layout, reset, policy and
    training streams decorrelated even when they share an integer seed, and
    makes every draw a pure function of (label, seed).
    """
    return random.Random(f"{label}:{seed}")


class Config(str, Enum):
    """The three supported grid configurations."""

    EMPTY_5X5_RANDOM = "Empty5x5Random"
    EMPTY_16X16 = "Empty16x16"
    CROSSING_9X9 = "Crossing9x9"


def native_max_steps(config_id: Config | str) -> int:
    """Step cap the corresponding stock environments use natively (4 * area).

    The default episode cap here is DEFAULT_MAX_STEPS; the native caps matter
    when reproducing baseline numbers measured on the stock environments
    (100 for the 5x5, 1024 for the 16x16, 324 for the 9x9 crossing).
    """
    sizes = {
        Config.EMPTY_5X5_RANDOM: 5,
        Config.EMPTY_16X16: 16,
        Config.CROSSING_9X9: 9,
    }
    size = sizes[Config(config_id)]
    return 4 * size * size


class Direction(IntEnum):
    """Agent heading. East is +x, South is +y (origin at the top-left wall)."""

    NORTH = 0
    EAST = 1
    SOUTH = 2
    WEST = 3

    @property
    def dx(self) -> int:
        return (0, 1, 0, -1)[self]

    @property
    def dy(self) -> int:
        return (-1, 0, 1, 0)[self]

    @property
    def symbol(self) -> str:
        return "^>v<"[self]

    @property
    def label(self) -> str:
        return self.name.lower()

    def turned_left(self) -> "Direction":
        return Direction((self - 1) % 4)

    def turned_right(self) -> "Direction":
        return Direction((self + 1) % 4)


class Action(IntEnum):
    TURN_LEFT = 0
    TURN_RIGHT = 1
    MOVE_FORWARD = 2

    @property
    def label(self) -> str:
        return self.name.lower()


class LayoutError(ValueError):
    """A layout violates its structural invariants."""


@dataclass(frozen=True)
class GridLayout:
    """Static world description: bordered grid, optional interior walls, one goal."""

    config_id: Config
    width: int
    height: int
    walls: frozenset[Cell]
    goal: Cell
    layout_seed: int

    def is_wall(self, x: int, y: int) -> bool:
        return (x, y) in self.walls

    def in_bounds(self, x: int, y: int) -> bool:
        return 0 <= x < self.width and 0 <= y < self.height

    def interior_cells(self) -> Iterator[Cell]:
        for y in range(1, self.height - 1):
            for x in range(1, self.width - 1):
                yield (x, y)

    def interior_walls(self) -> frozenset[Cell]:
        return frozenset(
            (x, y) for (x, y) in self.walls
            if 0 < x < self.width - 1 and 0 < y < self.height - 1
        )

    def open_cells(self) -> list[Cell]:
        """Interior cells the agent may occupy, in row-major order."""
        return [c for c in self.interior_cells() if c not in self.walls]

    def validate(self) -> None:
        """Raise LayoutError unless every structural invariant holds."""
        for x in range(self.width):
            if (x, 0) not in self.walls or (x, self.height - 1) not in self.walls:
                raise LayoutError("border row is not fully walled")
        for y in range(self.height):
            if (0, y) not in self.walls or (self.width - 1, y) not in self.walls:
                raise LayoutError("border column is not fully walled")
        gx, gy = self.goal
        if not (0 < gx < self.width - 1 and 0 < gy < self.height - 1):
            raise LayoutError("goal must lie in the interior")
        if self.goal in self.walls:
            raise LayoutError("goal cell is a wall")

        interior = self.interior_walls()
        if self.config_id in (Config.EMPTY_5X5_RANDOM, Config.EMPTY_16X16):
            if interior:
                raise LayoutError("empty configs admit no interior walls")
        else:
            rows = {y for _, y in interior}
            cols = {x for x, _ in interior}
            span = self.width - 2  # interior span; layouts are square
            if len(rows) == 1 and len(interior) == span - 1:
                pass  # one row partition with one gap
            elif len(cols) == 1 and len(interior) == span - 1:
                pass  # one column partition with one gap
            else:
                raise LayoutError("crossing layout needs exactly one partition with one gap")

        reached = self._flood_fill(self.goal)
        if set(self.open_cells()) - reached:
            raise LayoutError("some open cell cannot reach the goal")

    def _flood_fill(self, origin: Cell) -> set[Cell]:
        seen = {origin}
        queue = deque([origin])
        while queue:
            x, y = queue.popleft()
            for nx, ny in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if (nx, ny) in seen or not self.in_bounds(nx, ny):
                    continue
                if (nx, ny) in self.walls:
                    continue
                seen.add((nx, ny))
                queue.append((nx, ny))
        return seen


@dataclass(frozen=True)
class AgentPose:
    x: int
    y: int
    direction: Direction

    @property
    def cell(self) -> Cell:
        return (self.x, self.y)


@dataclass(frozen=True)
class GridState:
    layout: GridLayout
    pose: AgentPose
    step_count: int = 0
    terminated: bool = False
    success: bool = False
    max_steps: int = DEFAULT_MAX_STEPS


class StepReason(str, Enum):
    GOAL_REACHED = "goal_reached"
    STEP_LIMIT = "step_limit"
    ONGOING = "ongoing"


@dataclass(frozen=True)
class StepOutcome:
    state: GridState
    reward: float
    terminated: bool
    reason: StepReason


def _bordered(width: int, height: int) -> set[Cell]:
    walls = {(x, 0) for x in range(width)} | {(x, height - 1) for x in range(width)}
    walls |= {(0, y) for y in range(height)} | {(width - 1, y) for y in range(height)}
    return walls


def generate_layout(config_id: Config | str, layout_seed: int) -> GridLayout:
    """Build the layout for one configuration.

    The two empty configs are fully determined; the crossing config draws its
    partition orientation, position and gap from the seed.
    """
    config_id = Config(config_id)
    if config_id is Config.EMPTY_5X5_RANDOM:
        size, goal = 5, (3, 3)
        walls = _bordered(size, size)
    elif config_id is Config.EMPTY_16X16:
        size, goal = 16, (14, 14)
        walls = _bordered(size, size)
    else:
        size, goal = 9, (7, 7)
        walls = _bordered(size, size)
        rng = seeded_rng("layout", layout_seed)
        horizontal = rng.random() < 0.5
        index = rng.randrange(2, 7)
        gap = rng.randrange(1, 8)
        if horizontal:
            walls |= {(x, index) for x in range(1, 8) if x != gap}
        else:
            walls |= {(index, y) for y in range(1, 8) if y != gap}
    layout = GridLayout(
        config_id=config_id,
        width=size,
        height=size,
        walls=frozenset(walls),
        goal=goal,
        layout_seed=layout_seed,
    )
    layout.validate()
    return layout


def reset(layout: GridLayout, episode_seed: int, max_steps: int = DEFAULT_MAX_STEPS) -> GridState:
    """Fresh episode state.

    The 5x5 config starts from a uniformly drawn non-goal interior cell with a
    uniform heading; the other configs start at (1, 1) facing east.
    """
    if layout.config_id is Config.EMPTY_5X5_RANDOM:
        rng = seeded_rng("reset", episode_seed)
        cells = [c for c in layout.open_cells() if c != layout.goal]
        x, y = rng.choice(cells)
        direction = Direction(rng.randrange(4))
    else:
        (x, y), direction = (1, 1), Direction.EAST
    return GridState(
        layout=layout,
        pose=AgentPose(x, y, direction),
        step_count=0,
        terminated=False,
        success=False,
        max_steps=max_steps,
    )


def advance(layout: GridLayout, pose: AgentPose, action: Action) -> AgentPose:
    """Pure pose dynamics: turns rotate in place, forward stops at walls."""
    if action is Action.TURN_LEFT:
        return replace(pose, direction=pose.direction.turned_left())
    if action is Action.TURN_RIGHT:
        return replace(pose, direction=pose.direction.turned_right())
    nx, ny = pose.x + pose.direction.dx, pose.y + pose.direction.dy
    if layout.is_wall(nx, ny):
        return pose
    return replace(pose, x=nx, y=ny)


def compute_reward(step_count: int, max_steps: int) -> float:
    """Success reward after step_count steps: 1 - 0.9 * (step_count / max_steps)."""
    if not 1 <= step_count <= max_steps:
        raise ValueError(f"step_count {step_count} outside [1, {max_steps}]")
    return 1.0 - 0.9 * (step_count / max_steps)


def step(state: GridState, action: Action | None) -> StepOutcome:
    """Advance one step. Reward is zero except on the goal-reaching step.

    action=None is an inert step: it consumes one step of the budget and
    leaves the pose unchanged. It models the interaction actions of the
    stock seven-action repertoire (pickup, drop, toggle, done), none of
    which has an effect in these navigation tasks. The agent-facing action
    space proper is exactly the three Action variants.
    """
    if state.terminated:
        raise ValueError("cannot step a terminated episode")
    pose = state.pose if action is None else advance(state.layout, state.pose, action)
    count = state.step_count + 1
    if pose.cell == state.layout.goal:
        reward = compute_reward(count, state.max_steps)
        new_state = replace(state, pose=pose, step_count=count, terminated=True, success=True)
        return StepOutcome(new_state, reward, True, StepReason.GOAL_REACHED)
    if count >= state.max_steps:
        new_state = replace(state, pose=pose, step_count=count, terminated=True, success=False)
        return StepOutcome(new_state, 0.0, True, StepReason.STEP_LIMIT)
    new_state = replace(state, pose=pose, step_count=count)
    return StepOutcome(new_state, 0.0, False, StepReason.ONGOING)


def manhattan(a: Cell, b: Cell) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])
