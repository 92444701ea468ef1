"""Exact case analysis for frameworks made of a complete base plus pendants.

A complete graph is globally rigid in any dimension, so once the base is
pinned every pendant joint is constrained only by its distances to its
attachment joints in the base. If the attachments span R^d the pendant has a
single position; if they span a hyperplane it has two, mirror images in that
hyperplane; anything smaller leaves a continuum. Enumerating the mirror
choices therefore lists every framework equivalent to the reduced framework
up to congruence, and the edges between pendants ("filter" edges) decide
which of those survive for the full framework.

This reasoning is only sound for that shape; :func:`detect_pendant_structure`
rejects anything else.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable

from .core import (
    Configuration,
    Framework,
    RigidityError,
    _same_squared_lengths,
    affine_rank,
    configs_congruent,
    hyperplane_through,
    reflect,
)


class BaseNotComplete(RigidityError, ValueError):
    pass


class PendantAttachedOutsideBase(RigidityError, ValueError):
    pass


class EmptyPendants(RigidityError, ValueError):
    pass


class ContinuumOfRealizations(RigidityError):
    """Some pendant's attachments span less than a hyperplane."""

    def __init__(self, message: str, pendant: int | None = None):
        super().__init__(message)
        self.pendant = pendant


class Status(str, enum.Enum):
    GLOBALLY_RIGID = "GloballyRigid"
    NOT_GLOBALLY_RIGID = "NotGloballyRigid"
    FLEXIBLE = "Flexible"


@dataclass(frozen=True)
class PendantStructure:
    framework: Framework
    base: frozenset
    pendants: tuple
    filter_edges: tuple

    @property
    def reduced(self) -> Framework:
        return Framework(self.framework.graph.without_edges(self.filter_edges), self.framework.config)

    def attachments(self, pendant: int) -> tuple:
        return tuple(sorted(self.framework.graph.neighbors(pendant) & self.base))


@dataclass(frozen=True)
class RealizationClass:
    config: Configuration
    reflection_mask: tuple


@dataclass(frozen=True)
class RigidityVerdict:
    status: Status
    witness: Configuration | None = None
    survivors: int = 0
    classes: int = 0

    def __post_init__(self):
        if (self.witness is not None) != (self.status is Status.NOT_GLOBALLY_RIGID):
            raise ValueError("a witness is present exactly for NotGloballyRigid verdicts")


def detect_pendant_structure(f: Framework, base: Iterable[int]) -> PendantStructure:
    base = frozenset(int(v) for v in base)
    graph = f.graph
    if not base:
        raise ValueError("base must be nonempty")
    unknown = base - set(graph.vertex_ids)
    if unknown:
        raise ValueError(f"base contains unknown vertices {sorted(unknown)}")
    edges = graph.edge_set
    ordered = sorted(base)
    for k, a in enumerate(ordered):
        for b in ordered[k + 1:]:
            if (a, b) not in edges:
                raise BaseNotComplete(f"base vertices {a} and {b} are not joined by an edge")
    pendants = tuple(v for v in graph.vertex_ids if v not in base)
    if not pendants:
        raise EmptyPendants("every vertex is in the base; nothing to enumerate")
    pset = set(pendants)
    for v in pendants:
        if not graph.neighbors(v) & base:
            raise PendantAttachedOutsideBase(f"pendant {v} has no attachment in the base")
    filters = tuple(e for e in graph.edges if e[0] in pset and e[1] in pset)
    return PendantStructure(f, base, pendants, filters)


def pendant_positions(ps: PendantStructure, pendant: int) -> list:
    """Possible positions of ``pendant`` with the base held fixed.

    Either ``[original]`` or ``[original, mirror image]``.
    """
    config = ps.framework.config
    d = config.dim
    anchors = [config[v] for v in ps.attachments(pendant)]
    span = affine_rank(anchors)
    if span < d - 1:
        raise ContinuumOfRealizations(
            f"attachments of pendant {pendant} span dimension {span} < {d - 1}", pendant
        )
    here = config[pendant]
    if span == d:
        return [here]
    mirror = reflect(here, hyperplane_through(anchors))
    # a pendant on its own mirror has only one position
    return [here] if mirror == here else [here, mirror]


def enumerate_realizations(ps: PendantStructure) -> list:
    """One class per reflection mask, in lexicographic mask order (False first).

    Every returned configuration is checked to be exactly equivalent to the
    input on the reduced graph.
    """
    positions = [pendant_positions(ps, v) for v in ps.pendants]
    reduced_edges = ps.reduced.graph.edges
    original = ps.framework.config
    classes = []
    for choice in itertools.product(*(range(len(p)) for p in positions)):
        updates = {v: positions[k][c] for k, (v, c) in enumerate(zip(ps.pendants, choice))}
        config = original.replace(updates) if any(choice) else original
        if not _same_squared_lengths(config, original, reduced_edges):
            raise AssertionError(f"mask {choice} broke a bar length")
        classes.append(RealizationClass(config, tuple(bool(c) for c in choice)))
    return classes


def filter_survivors(ps: PendantStructure, classes: list) -> list:
    original = ps.framework.config
    return [c for c in classes if _same_squared_lengths(c.config, original, ps.filter_edges)]


def decide_global_rigidity(ps: PendantStructure) -> RigidityVerdict:
    """Decide global rigidity of the full framework by exact enumeration."""
    try:
        classes = enumerate_realizations(ps)
    except ContinuumOfRealizations:
        return RigidityVerdict(Status.FLEXIBLE)
    survivors = filter_survivors(ps, classes)
    original = ps.framework.config
    for c in survivors:
        if not configs_congruent(c.config, original):
            return RigidityVerdict(Status.NOT_GLOBALLY_RIGID, c.config, len(survivors), len(classes))
    return RigidityVerdict(Status.GLOBALLY_RIGID, None, len(survivors), len(classes))


def distinct_classes(configs: Iterable[Configuration]) -> list:
    """Collapse configurations that are congruent to each other, keeping the first."""
    kept: list = []
    for c in configs:
        if not any(configs_congruent(c, k) for k in kept):
            kept.append(c)
    return kept


__all__ = [
    "BaseNotComplete",
    "ContinuumOfRealizations",
    "EmptyPendants",
    "PendantAttachedOutsideBase",
    "PendantStructure",
    "RealizationClass",
    "RigidityVerdict",
    "Status",
    "decide_global_rigidity",
    "detect_pendant_structure",
    "distinct_classes",
    "enumerate_realizations",
    "filter_survivors",
    "pendant_positions",
]
