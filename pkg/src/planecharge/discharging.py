"""Exact charge accounting: balanced charging, the four global transfer
rules, and per-face edge-level audits.

All amounts are integer multiples of one twelfth of a unit charge; every
constant the rules use (1, 1/2, 1/3, 1/4, 1/6) is such a multiple, so the
ledger is exact and every audit is bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import Disconnected, NotBigFace
from .plane_graph import PlaneGraph

ElementKey = tuple  # ("vertex", v) | ("face", i) | ("edge", (u, v))


@dataclass(frozen=True, order=True)
class Charge:
    """An exact charge, counted in integer twelfths."""

    twelfths: int

    @classmethod
    def of(cls, numerator: int, denominator: int = 1) -> "Charge":
        if denominator <= 0 or (12 * numerator) % denominator != 0:
            raise ValueError(
                f"{numerator}/{denominator} is not an integer number of twelfths"
            )
        return cls(12 * numerator // denominator)

    def __add__(self, other: "Charge") -> "Charge":
        return Charge(self.twelfths + other.twelfths)

    def __sub__(self, other: "Charge") -> "Charge":
        return Charge(self.twelfths - other.twelfths)

    def __neg__(self) -> "Charge":
        return Charge(-self.twelfths)

    @property
    def is_negative(self) -> bool:
        return self.twelfths < 0

    def __str__(self) -> str:
        return f"{self.twelfths}/12"


ZERO = Charge(0)
ONE = Charge(12)
HALF = Charge(6)
THIRD = Charge(4)
QUARTER = Charge(3)
SIXTH = Charge(2)

TOTAL_TWELFTHS = -96  # (-8) units: balanced charging on any connected plane graph


@dataclass(frozen=True)
class Transfer:
    rule: str
    source: ElementKey
    sink: ElementKey
    amount: Charge


@dataclass(frozen=True)
class ChargeState:
    vertex_charge: dict[int, Charge]
    face_charge: dict[int, Charge]
    edge_charge: Optional[dict[tuple[int, int], Charge]] = None
    log: tuple[Transfer, ...] = ()

    def total(self) -> Charge:
        t = sum(c.twelfths for c in self.vertex_charge.values())
        t += sum(c.twelfths for c in self.face_charge.values())
        if self.edge_charge:
            t += sum(c.twelfths for c in self.edge_charge.values())
        return Charge(t)


def initial_charges(graph: PlaneGraph) -> ChargeState:
    """Balanced charging: degree minus four on vertices, length minus four
    on faces; the total is exactly -8 on a connected plane graph."""
    if not graph.is_connected():
        raise Disconnected("initial charges need a connected graph")
    state = ChargeState(
        vertex_charge={
            v: Charge.of(graph.degree(v) - 4) for v in range(graph.vertex_count)
        },
        face_charge={
            i: Charge.of(len(walk) - 4) for i, walk in enumerate(graph.faces)
        },
    )
    assert state.total().twelfths == TOTAL_TWELFTHS
    return state


def _is_three_face(graph: PlaneGraph, i: int) -> bool:
    return graph.face_length(i) == 3


def _touches_three_face(graph: PlaneGraph, i: int) -> bool:
    """Face i shares an edge with some other 3-face."""
    for h in graph.faces[i]:
        j = graph.opposite_face(h)
        if j != i and _is_three_face(graph, j):
            return True
    return False


def rule_transfers(graph: PlaneGraph) -> list[Transfer]:
    """The four global rules, computed from the incidence structure alone.

    Degree-2 vertices draw 1 and degree-3 vertices draw 1/2 from each
    big-face incidence (per occurrence on the walk); 3-faces draw 1/2 (if
    they touch another 3-face) or 1/3 from each big face they share an edge
    with, once per shared edge.
    """
    transfers: list[Transfer] = []
    for i, walk in enumerate(graph.faces):
        if len(walk) < 6:
            continue
        for h in walk:
            v = graph.origin[h]
            d = graph.degree(v)
            if d == 2:
                transfers.append(Transfer("R1", ("face", i), ("vertex", v), ONE))
            elif d == 3:
                transfers.append(Transfer("R2", ("face", i), ("vertex", v), HALF))
    for i, walk in enumerate(graph.faces):
        if not _is_three_face(graph, i):
            continue
        rule, amount = (
            ("R3", HALF) if _touches_three_face(graph, i) else ("R4", THIRD)
        )
        for h in walk:
            j = graph.opposite_face(h)
            if graph.face_length(j) >= 6:
                transfers.append(Transfer(rule, ("face", j), ("face", i), amount))
    return transfers


def apply_rules(graph: PlaneGraph, state: ChargeState) -> ChargeState:
    """Apply all four rules simultaneously to a fresh balanced charging."""
    vertex_charge = dict(state.vertex_charge)
    face_charge = dict(state.face_charge)
    transfers = rule_transfers(graph)
    for t in transfers:
        kind, key = t.source
        assert kind == "face"
        face_charge[key] = face_charge[key] - t.amount
        kind, key = t.sink
        if kind == "vertex":
            vertex_charge[key] = vertex_charge[key] + t.amount
        else:
            face_charge[key] = face_charge[key] + t.amount
    return ChargeState(
        vertex_charge=vertex_charge,
        face_charge=face_charge,
        log=state.log + tuple(transfers),
    )


# -- edge-level audit of one big face -----------------------------------------


@dataclass(frozen=True)
class FaceAudit:
    """Scratch ledger for one 6+-face: each edge occurrence on the walk is
    seeded with 1/3, the sub-rules move edge charge to the 2-vertices,
    3-vertices, and 3-faces around the face, and the face keeps the
    residual 2l/3 - 4."""

    face: int
    length: int
    residual: Charge
    edge_seed: dict[tuple[int, int], Charge]
    edge_final: dict[tuple[int, int], Charge]
    sink_received: dict[ElementKey, Charge]
    transfers: tuple[Transfer, ...]

    def negative_edges(self) -> list[tuple[tuple[int, int], Charge]]:
        return sorted(
            (e, c) for e, c in self.edge_final.items() if c.is_negative
        )

    def conserved(self) -> bool:
        moved = sum(c.twelfths for c in self.sink_received.values())
        kept = sum(c.twelfths for c in self.edge_final.values())
        seeded = sum(c.twelfths for c in self.edge_seed.values())
        return kept + moved == seeded


def edge_level_audit(graph: PlaneGraph, face: int) -> FaceAudit:
    walk = graph.faces[face]
    length = len(walk)
    if length < 6:
        raise NotBigFace(face, length)

    def edge_at(pos: int) -> tuple[int, int]:
        h = walk[pos % length]
        u, v = graph.origin[h], graph.target[h]
        return (u, v) if u < v else (v, u)

    seed: dict[tuple[int, int], Charge] = {}
    for pos in range(length):
        e = edge_at(pos)
        seed[e] = seed.get(e, ZERO) + THIRD

    taken: dict[int, Charge] = {pos: ZERO for pos in range(length)}
    received: dict[ElementKey, Charge] = {}
    transfers: list[Transfer] = []

    def take(rule: str, pos: int, sink: ElementKey, amount: Charge) -> None:
        pos %= length
        taken[pos] = taken[pos] + amount
        received[sink] = received.get(sink, ZERO) + amount
        transfers.append(Transfer(rule, ("edge", edge_at(pos)), sink, amount))

    for pos, h in enumerate(walk):
        # The walk vertex between edge positions pos-1 and pos.
        v = graph.origin[h]
        d = graph.degree(v)
        if d == 2:
            # Short pulls from both incident walk edges, long pulls from the
            # walk edges one step further out.
            take("SubR5", pos - 1, ("vertex", v), THIRD)
            take("SubR5", pos, ("vertex", v), THIRD)
            take("SubR5", pos - 2, ("vertex", v), SIXTH)
            take("SubR5", pos + 1, ("vertex", v), SIXTH)
        elif d == 3:
            # A 3-face at a degree-3 walk vertex always shares one of the
            # two walk edges at that corner (the three corners of a
            # 3-vertex pairwise share an edge).
            after = graph.opposite_face(h)
            before = graph.opposite_face(walk[pos - 1])
            if after != face and _is_three_face(graph, after):
                take("SubR3", pos - 1, ("vertex", v), THIRD)
                take("SubR3", pos + 1, ("vertex", v), SIXTH)
            elif before != face and _is_three_face(graph, before):
                take("SubR3", pos, ("vertex", v), THIRD)
                take("SubR3", pos - 2, ("vertex", v), SIXTH)
            else:
                take("SubR4", pos - 1, ("vertex", v), QUARTER)
                take("SubR4", pos, ("vertex", v), QUARTER)

    for pos, h in enumerate(walk):
        g3 = graph.opposite_face(h)
        if g3 == face or not _is_three_face(graph, g3):
            continue
        take("SubR1", pos, ("face", g3), THIRD)
        # An adjacent 3-face on one of g3's flanks pulls an extra 1/6 from
        # the walk edge on that side of the shared edge.
        a, b = graph.origin[h], graph.target[h]
        for hg in graph.faces[g3]:
            flank = frozenset((graph.origin[hg], graph.target[hg]))
            if flank == frozenset((a, b)):
                continue
            other = graph.opposite_face(hg)
            if other != g3 and _is_three_face(graph, other):
                take("SubR2", pos - 1 if a in flank else pos + 1, ("face", g3), SIXTH)

    edge_final: dict[tuple[int, int], Charge] = dict(seed)
    for pos in range(length):
        e = edge_at(pos)
        edge_final[e] = edge_final[e] - taken[pos]

    residual = Charge(12 * (length - 4) - 4 * length)
    audit = FaceAudit(
        face=face,
        length=length,
        residual=residual,
        edge_seed=seed,
        edge_final=edge_final,
        sink_received=received,
        transfers=tuple(transfers),
    )
    assert audit.conserved()
    return audit


@dataclass(frozen=True)
class FaceReconciliation:
    """Audit receipts versus rule draws, per sink, for one big face."""

    face: int
    ok: bool
    audit_received: dict[ElementKey, Charge]
    rule_draws: dict[ElementKey, Charge]
    mismatched: tuple[ElementKey, ...]


def reconcile_face(graph: PlaneGraph, face: int) -> FaceReconciliation:
    """Check that what each sink collects from the face's edges under the
    sub-rules equals what it draws from the face under the global rules."""
    audit = edge_level_audit(graph, face)
    draws: dict[ElementKey, Charge] = {}
    for t in rule_transfers(graph):
        if t.source == ("face", face):
            draws[t.sink] = draws.get(t.sink, ZERO) + t.amount
    keys = set(audit.sink_received) | set(draws)
    mismatched = tuple(
        sorted(
            k
            for k in keys
            if audit.sink_received.get(k, ZERO) != draws.get(k, ZERO)
        )
    )
    return FaceReconciliation(
        face=face,
        ok=not mismatched,
        audit_received=audit.sink_received,
        rule_draws=draws,
        mismatched=mismatched,
    )


# -- final audit ---------------------------------------------------------------


@dataclass(frozen=True)
class NegativeElement:
    kind: str  # "vertex" | "face" | "edge"
    ident: Union[int, tuple]  # vertex id, face index, or (face, (u, v))
    charge: Charge


@dataclass(frozen=True)
class FinalAudit:
    negatives: tuple[NegativeElement, ...]
    reconciliation_ok: bool
    state: ChargeState
    audits: tuple[FaceAudit, ...] = field(repr=False, default=())


def final_audit(graph: PlaneGraph) -> FinalAudit:
    """Run the whole pipeline and report everything that ends negative.

    The reconciliation flag asserts conservation: the vertex+face total is
    still exactly -8 after the rules, each audited face's edge ledger
    conserves its seeded l/3, and each residual matches 2l/3 - 4 (which is
    nonnegative for l >= 6).
    """
    state = apply_rules(graph, initial_charges(graph))
    negatives: list[NegativeElement] = []
    for v in sorted(state.vertex_charge):
        if state.vertex_charge[v].is_negative:
            negatives.append(NegativeElement("vertex", v, state.vertex_charge[v]))
    for i in sorted(state.face_charge):
        if state.face_charge[i].is_negative:
            negatives.append(NegativeElement("face", i, state.face_charge[i]))

    reconciliation_ok = state.total().twelfths == TOTAL_TWELFTHS
    audits = []
    for i, walk in enumerate(graph.faces):
        if len(walk) < 6:
            continue
        audit = edge_level_audit(graph, i)
        audits.append(audit)
        reconciliation_ok = (
            reconciliation_ok
            and audit.conserved()
            and audit.residual.twelfths == 12 * (audit.length - 4) - 4 * audit.length
            and not audit.residual.is_negative
        )
        for e, c in audit.negative_edges():
            negatives.append(NegativeElement("edge", (i, e), c))
    return FinalAudit(
        negatives=tuple(negatives),
        reconciliation_ok=reconciliation_ok,
        state=state,
        audits=tuple(audits),
    )
