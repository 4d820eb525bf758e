"""Attribute universe, contexts, CPTs and problem instances."""

from cpt_aggregation.model.cpt import (
    MAX_ATTRIBUTES,
    PREFER_ONE,
    PREFER_ZERO,
    AttributeSet,
    Context,
    Cpt,
    enumerate_contexts,
    project,
)
from cpt_aggregation.model.instance import Instance, parse_cpt, parse_instance, serialize_cpt, serialize_instance

__all__ = [
    "MAX_ATTRIBUTES",
    "PREFER_ONE",
    "PREFER_ZERO",
    "AttributeSet",
    "Context",
    "Cpt",
    "Instance",
    "enumerate_contexts",
    "parse_cpt",
    "parse_instance",
    "project",
    "serialize_cpt",
    "serialize_instance",
]
