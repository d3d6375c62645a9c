"""Policies that turn scripts, the baseline or chance into game actions."""
from src.agent.context import ActionContext, enumerate_contexts
from src.agent.policies import (
    BaselinePolicy,
    PassPolicy,
    Policy,
    RandomPolicy,
    ScriptPolicy,
    UsageCounters,
    baseline_decide,
    default_action,
    random_decide,
    script_decide,
)

__all__ = [
    "ActionContext",
    "BaselinePolicy",
    "PassPolicy",
    "Policy",
    "RandomPolicy",
    "ScriptPolicy",
    "UsageCounters",
    "baseline_decide",
    "default_action",
    "enumerate_contexts",
    "random_decide",
    "script_decide",
]
