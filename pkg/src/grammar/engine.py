"""Derivation engine: symbol string + grammar -> labeled graph.

Every symbol selects the production of the current derivation state. Branch
and ring symbols read the following symbol as a number N; branches derive
the next N symbols as a side chain, rings bond back to the (N+1)-th
previously derived vertex. The engine never raises on a well-formed symbol
sequence: each edge is bounded by the state and by the capacity actually
left at both endpoints.
"""

from dataclasses import dataclass, field
from enum import StrEnum
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from .graph import LabeledGraph
from .spec import BranchRule, GrammarSpec, RingRule, symbol_number


class SymbolRangeError(ValueError):
    """A symbol index outside the alphabet reached the engine."""

    def __init__(self, position: int, index: int, size: int):
        self.position = position
        self.index = index
        super().__init__(f"symbol index {index} at position {position} outside alphabet of {size}")


class TraceAction(StrEnum):
    EPSILON = "epsilon"
    VERTEX = "vertex"
    TERMINAL = "terminal"
    NUMBER = "number"
    BRANCH = "branch"
    BRANCH_NOOP = "branch_noop"
    RING = "ring"
    RING_NOOP = "ring_noop"


@dataclass(slots=True)
class TraceStep:
    position: int
    symbol: int
    state_before: int
    action: TraceAction
    state_after: int
    depth: int
    # vertex created (or ring source), the vertex it bonds to, and the bond order
    vertex: Optional[int] = None
    partner: Optional[int] = None
    order: Optional[int] = None
    type_id: Optional[int] = None


@dataclass
class DerivationTrace:
    steps: List[TraceStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[TraceStep]:
        return iter(self.steps)

    def state_path(self, depth: int = 0) -> List[int]:
        """States entered by the symbols of one nesting level, number reads excluded."""
        return [
            step.state_before
            for step in self.steps
            if step.depth == depth and step.action != TraceAction.NUMBER
        ]

    def positions(self, depth: int = 0) -> List[int]:
        return [
            step.position
            for step in self.steps
            if step.depth == depth and step.action != TraceAction.NUMBER
        ]


@dataclass
class _Scope:
    end: int
    state: int
    current: Optional[int]
    depth: int
    derived: bool = False
    done: bool = False
    branch: Optional[BranchRule] = None
    step: Optional[TraceStep] = None


class _Derivation:
    def __init__(self, spec: GrammarSpec, symbols: Sequence[int], record: bool):
        self.spec = spec
        self.symbols = symbols
        self.graph = LabeledGraph()
        self.used: List[int] = []
        self.capacity: List[int] = []
        self.pairs: Set[Tuple[int, int]] = set()
        self.trace = DerivationTrace() if record else None

    def remaining(self, vertex: int) -> int:
        return self.capacity[vertex] - self.used[vertex]

    def note(self, step: TraceStep) -> TraceStep:
        if self.trace is not None:
            self.trace.steps.append(step)
        return step

    def bond(self, u: int, v: int, order: int) -> None:
        self.graph.add_edge(u, v, order)
        self.used[u] += order
        self.used[v] += order
        self.pairs.add((min(u, v), max(u, v)))

    def run(self) -> LabeledGraph:
        stack = [_Scope(end=len(self.symbols), state=0, current=None, depth=0)]
        pos = 0
        while stack:
            scope = stack[-1]
            if scope.done or pos >= scope.end:
                stack.pop()
                pos = scope.end
                if stack and scope.branch is not None:
                    parent = stack[-1]
                    if scope.derived:
                        parent.state = scope.branch.next_state
                        parent.derived = True
                    if scope.step is not None:
                        scope.step.state_after = parent.state
                continue

            if scope.current is not None and scope.state > 0:
                scope.state = min(scope.state, self.remaining(scope.current))
                if scope.state == 0:
                    scope.done = True
                    continue

            pos = self.apply(scope, pos, stack)
        return self.graph

    def apply(self, scope: _Scope, pos: int, stack: List[_Scope]) -> int:
        symbol = self.symbols[pos]
        before = scope.state
        rule = self.spec.productions[before][symbol]

        if rule.kind == "epsilon":
            self.note(TraceStep(pos, symbol, before, TraceAction.EPSILON, before, scope.depth))
            return pos + 1

        if rule.kind in ("vertex", "terminal"):
            type_def = self.spec.types[rule.type_id]
            new = self.graph.add_vertex(rule.type_id, type_def.label, type_def.max_degree)
            self.used.append(0)
            self.capacity.append(type_def.max_degree)
            mu = min(rule.bond_order, before) if scope.current is not None else 0
            if mu > 0:
                self.bond(scope.current, new, mu)
            attached = scope.current if mu > 0 else None
            scope.current = new
            scope.state = rule.next_state
            scope.derived = True
            ends = rule.kind == "terminal" or rule.next_state == 0
            scope.done = ends
            action = TraceAction.TERMINAL if ends else TraceAction.VERTEX
            self.note(
                TraceStep(
                    pos, symbol, before, action, scope.state, scope.depth,
                    vertex=new, partner=attached, order=mu or None, type_id=rule.type_id,
                )
            )
            return pos + 1

        noop = TraceAction.RING_NOOP if rule.kind == "ring" else TraceAction.BRANCH_NOOP
        if pos + 1 >= scope.end:
            # operator with no number symbol left in scope
            self.note(TraceStep(pos, symbol, before, noop, before, scope.depth))
            return pos + 1

        number = symbol_number(self.spec, self.symbols[pos + 1])

        if rule.kind == "ring":
            self.ring(scope, rule, pos, symbol, number)
            return pos + 2

        step = self.note(TraceStep(pos, symbol, before, TraceAction.BRANCH, before, scope.depth))
        self.note_number(pos + 1, before, scope.depth)
        start = pos + 2
        stack.append(
            _Scope(
                end=min(start + number, scope.end),
                state=rule.branch_state,
                current=scope.current,
                depth=scope.depth + 1,
                branch=rule,
                step=step,
            )
        )
        return start

    def note_number(self, pos: int, state: int, depth: int) -> None:
        self.note(TraceStep(pos, self.symbols[pos], state, TraceAction.NUMBER, state, depth))

    def ring(self, scope: _Scope, rule: RingRule, pos: int, symbol: int, number: int) -> None:
        before = scope.state
        source = scope.current
        target = max(source - (number + 1), 0) if source is not None else None
        order = 0
        if source is not None and target != source:
            if (min(source, target), max(source, target)) not in self.pairs:
                order = min(
                    rule.max_order, before, self.remaining(target), self.remaining(source)
                )

        if order <= 0:
            self.note(TraceStep(pos, symbol, before, TraceAction.RING_NOOP, before, scope.depth))
            self.note_number(pos + 1, before, scope.depth)
            return

        self.bond(source, target, order)
        scope.state = before - order
        if scope.state == 0:
            scope.done = True
        self.note(
            TraceStep(
                pos, symbol, before, TraceAction.RING, scope.state, scope.depth,
                vertex=source, partner=target, order=order,
            )
        )
        self.note_number(pos + 1, scope.state, scope.depth)


def _check_range(spec: GrammarSpec, symbols: Sequence[int]) -> None:
    size = spec.size
    for position, index in enumerate(symbols):
        if not 0 <= index < size:
            raise SymbolRangeError(position, index, size)


def derive_graph(spec: GrammarSpec, symbols: Sequence[int]) -> LabeledGraph:
    """Decode a symbol string under ``spec``. Total over in-range symbol sequences."""
    _check_range(spec, symbols)
    return _Derivation(spec, symbols, record=False).run()


def derive_with_trace(
    spec: GrammarSpec, symbols: Sequence[int]
) -> Tuple[LabeledGraph, DerivationTrace]:
    _check_range(spec, symbols)
    derivation = _Derivation(spec, symbols, record=True)
    graph = derivation.run()
    return graph, derivation.trace


def replay_trace(spec: GrammarSpec, trace: DerivationTrace) -> LabeledGraph:
    """Rebuild the graph from the vertex and ring actions of a trace."""
    graph = LabeledGraph()
    for step in trace:
        if step.action in (TraceAction.VERTEX, TraceAction.TERMINAL):
            type_def = spec.types[step.type_id]
            index = graph.add_vertex(step.type_id, type_def.label, type_def.max_degree)
            if step.partner is not None:
                graph.add_edge(step.partner, index, step.order)
        elif step.action == TraceAction.RING:
            graph.add_edge(step.vertex, step.partner, step.order)
    return graph
