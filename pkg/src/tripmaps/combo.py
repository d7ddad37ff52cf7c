"""Combo maps: several TRIP subdivisions chained inside one step.

A step is a small decision tree.  Each node subdivides the current
triangle with its own TRIP map and then, depending on the child that
holds the point, either stops (``TERMINAL``), subdivides that child
again with the same node (``LOOP``) or hands it to another node.  The
step's image is the point re-expressed in the final triangle, i.e.
``normalize(p @ (B W^-1 B^-1)^T)`` with W the product of the chosen F's.

A plain TRIP map is ``ComboNode(m, TERMINAL, LOOP)``: 1-bits repeat,
a 0-bit ends the digit.  A node may instead carry ``forced_k``; it then
applies ``F_1^k F_0`` without any membership test, which lets schedules
follow a prescribed digit sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .engine import (
    DEFAULT_ONES_CAP,
    Termination,
    TripMap,
    build_trip_map,
    check_point,
    choose_child,
    normalize,
    promote_point,
)
from .errors import NoRuleMatched, PointOutsideDomain
from .exact.matrix import IntMatrix

TERMINAL = "terminal"
LOOP = "loop"


@dataclass(frozen=True)
class ComboNode:
    map: TripMap
    on0: Union["ComboNode", str] = TERMINAL
    on1: Union["ComboNode", str] = LOOP
    forced_k: int | None = None
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "map", build_trip_map(self.map))
        for branch in (self.on0, self.on1):
            if not isinstance(branch, ComboNode) and branch not in (TERMINAL, LOOP):
                raise ValueError(f"bad branch {branch!r}")


def trip_node(m, label: str = "") -> ComboNode:
    """The node whose step is the TRIP triangle function of ``m``."""
    return ComboNode(build_trip_map(m), TERMINAL, LOOP, label=label or str(build_trip_map(m).triple))


def forced_node(m, k: int, label: str = "") -> ComboNode:
    m = build_trip_map(m)
    return ComboNode(m, forced_k=k, label=label or f"{m.triple}[k={k}]")


@dataclass(frozen=True)
class ComboSchedule:
    """Step trees used in turn: step i runs ``rules[i % len(rules)]``."""

    rules: tuple[ComboNode, ...]
    name: str = ""

    def __post_init__(self):
        if not self.rules:
            raise ValueError("a schedule needs at least one rule")
        object.__setattr__(self, "rules", tuple(self.rules))

    @property
    def dim(self) -> int:
        return self.rules[0].map.dim


@dataclass(frozen=True)
class StepRecord:
    rule: int
    path: tuple[int, ...]
    k: int
    leaf: str
    image: tuple


@dataclass(frozen=True)
class ComboRun:
    orbit: tuple
    records: tuple[StepRecord, ...]
    termination: Termination | None


def step_from_local(c, node: ComboNode, ones_cap: int = DEFAULT_ONES_CAP):
    """Descend from local coordinates ``c``; returns (path, loops, leaf label, c') or None on cap."""
    path, loops = [], 0
    while True:
        m = node.map
        if node.forced_k is not None:
            w = (m.f1**node.forced_k) @ m.f0
            return tuple(path) + (1,) * node.forced_k + (0,), node.forced_k, node.label, w.inverse().times_column(c)
        try:
            bit, c = choose_child(c, m)
        except PointOutsideDomain as exc:
            raise NoRuleMatched(f"no child of {node.label or m.triple} holds the point") from exc
        path.append(bit)
        nxt = node.on1 if bit else node.on0
        if nxt == LOOP:
            loops += 1
            if loops >= ones_cap:
                return None
            continue
        if nxt == TERMINAL:
            return tuple(path), loops, f"{node.label or m.triple}:{bit}", c
        node = nxt


def combo_step(point, node: ComboNode, ones_cap: int = DEFAULT_ONES_CAP, check: bool = True):
    """One step of a single tree; returns (image, path, k, leaf)."""
    p = check_point(point, node.map.dim) if check else promote_point(point)
    b = node.map.b
    c = node.map.b_inv.times_column((Fraction(1),) + p)
    res = step_from_local(c, node, ones_cap)
    if res is None:
        raise NoRuleMatched("infinite run of 1-bits inside a combo step")
    path, loops, leaf, c = res
    return normalize(b.times_column(c)), path, loops, leaf


def combo_apply(point, schedule, steps: int, ones_cap: int = DEFAULT_ONES_CAP) -> ComboRun:
    """Iterate a schedule, recording the rule, path and k of every step."""
    if isinstance(schedule, ComboNode):
        schedule = ComboSchedule((schedule,))
    p = check_point(point, schedule.dim)
    b, b_inv = schedule.rules[0].map.b, schedule.rules[0].map.b_inv
    orbit, records, term = [], [], None
    for i in range(steps):
        idx = i % len(schedule.rules)
        res = step_from_local(b_inv.times_column((Fraction(1),) + p), schedule.rules[idx], ones_cap)
        if res is None:
            term = Termination.INFINITE_ONES_TAIL
            break
        path, loops, leaf, c = res
        p = normalize(b.times_column(c))
        orbit.append(p)
        records.append(StepRecord(idx, path, loops, leaf, p))
        if p[-1] == 0:
            term = Termination.BOUNDARY_HIT
            break
    else:
        term = Termination.TRUNCATED if steps > 0 else None
    return ComboRun(tuple(orbit), tuple(records), term)


def leaf_words(node: ComboNode, max_loops: int = 0):
    """Every (path, F-product) leaf of a step tree, with LOOP unrolled up to ``max_loops`` times."""
    out = []

    def walk(nd, prefix, w, loops):
        m = nd.map
        if nd.forced_k is not None:
            out.append((prefix + (1,) * nd.forced_k + (0,), w @ (m.f1**nd.forced_k) @ m.f0))
            return
        for bit in (0, 1):
            nxt = nd.on1 if bit else nd.on0
            w2 = w @ m.f(bit)
            if nxt == TERMINAL:
                out.append((prefix + (bit,), w2))
            elif nxt == LOOP:
                if loops < max_loops:
                    walk(nd, prefix + (bit,), w2, loops + 1)
            else:
                walk(nxt, prefix + (bit,), w2, loops)

    walk(node, (), IntMatrix.identity(node.map.dim), 0)
    return out


def region_vertices(node: ComboNode, max_loops: int = 0) -> dict:
    """Vertex matrices B W of the step regions, keyed by path."""
    b = node.map.b
    return {path: b @ w for path, w in leaf_words(node, max_loops)}


def step_matrix(node: ComboNode, path) -> IntMatrix:
    """Map-form matrix (B W^-1 B^-1)^T for the region reached by ``path``."""
    for p, w in leaf_words(node, max_loops=len(path)):
        if p == tuple(path):
            m = node.map
            return (m.b @ w.inverse() @ m.b_inv).T
    raise KeyError(f"no leaf with path {tuple(path)}")


def schedule_matrix(rules) -> IntMatrix:
    """Map-form product of forced rules, in application order."""
    out = None
    for node in rules:
        if node.forced_k is None:
            raise ValueError("schedule_matrix needs forced rules")
        m = node.map
        w = (m.f1**node.forced_k) @ m.f0
        mat = (m.b @ w.inverse() @ m.b_inv).T
        out = mat if out is None else out @ mat
    return out
