"""Gridworld MDP evaluation framework for prompt-driven LLM policies and classical baselines."""

__version__ = "0.1.0"

from .gridworld import (  # noqa: F401
    Action,
    AgentPose,
    Config,
    Direction,
    GridLayout,
    GridState,
    StepOutcome,
    StepReason,
    compute_reward,
    generate_layout,
    reset,
    step,
)
