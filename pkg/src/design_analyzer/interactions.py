"""Interaction detection and the class interaction graph."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .errors import EmptyCorpus
from .java_frontend import ClassDecl, ClassRegistry, Location


class InteractionKind(str, Enum):
    PARAM_PASS = "param"
    RETURN_TYPE = "return"
    OBJECT_DECL = "decl"
    INHERITANCE = "inherit"

    @property
    def is_operation_level(self) -> bool:
        return self in (InteractionKind.PARAM_PASS, InteractionKind.RETURN_TYPE)


# fixed order used by every serializer
KIND_ORDER = (
    InteractionKind.INHERITANCE,
    InteractionKind.OBJECT_DECL,
    InteractionKind.PARAM_PASS,
    InteractionKind.RETURN_TYPE,
)


@dataclass(frozen=True)
class InteractionEvidence:
    source: int  # the client / containing / derived class
    target: int  # the used class
    kind: InteractionKind
    location: Location
    detail: str = ""

    def sort_key(self):
        return (self.location.file, self.location.line, self.detail, self.source, self.target, self.kind.value)


@dataclass(frozen=True)
class ClassNode:
    id: int
    name: str
    kind: str = "class"
    file: str = ""
    line: int = 0
    visible_members: int = 0


@dataclass
class InteractionGraph:
    nodes: list[ClassNode]
    evidences: list[InteractionEvidence]
    ccig_edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    @classmethod
    def from_evidences(cls, nodes: Sequence[ClassNode], evidences: Iterable[InteractionEvidence]) -> "InteractionGraph":
        evs = sorted((e for e in evidences if e.source != e.target), key=InteractionEvidence.sort_key)
        ids = {n.id for n in nodes}
        for e in evs:
            if e.source not in ids or e.target not in ids:
                raise ValueError(f"evidence endpoint outside node set: {e}")
        edges = frozenset((e.source, e.target) for e in evs)
        return cls(list(nodes), evs, edges)

    @property
    def labels(self) -> list[str]:
        return [n.name for n in self.nodes]

    def node_id(self, name: str) -> int | None:
        for n in self.nodes:
            if n.name == name:
                return n.id
        return None

    def kind_counts(self) -> dict[tuple[int, int], Counter]:
        """Evidence multiplicity per kind for every CCIG edge."""
        out: dict[tuple[int, int], Counter] = {}
        for e in self.evidences:
            out.setdefault((e.source, e.target), Counter())[e.kind] += 1
        return out


def _evidence(registry: ClassRegistry, decl: ClassDecl, type_name: str, kind: InteractionKind,
              loc: Location, detail: str) -> InteractionEvidence | None:
    me = registry.id_of(decl)
    target = registry.lookup(type_name, decl)
    if target is None or target == me:
        return None
    return InteractionEvidence(me, target, kind, loc, detail)


def detect_param_interactions(decl: ClassDecl, registry: ClassRegistry) -> list[InteractionEvidence]:
    out = []
    for m in decl.methods:
        for t in m.parameter_types:
            e = _evidence(registry, decl, t, InteractionKind.PARAM_PASS, m.location, m.name)
            if e:
                out.append(e)
    return out


def detect_return_interactions(decl: ClassDecl, registry: ClassRegistry) -> list[InteractionEvidence]:
    out = []
    for m in decl.methods:
        e = _evidence(registry, decl, m.return_type, InteractionKind.RETURN_TYPE, m.location, m.name)
        if e:
            out.append(e)
    return out


def detect_decl_interactions(decl: ClassDecl, registry: ClassRegistry) -> list[InteractionEvidence]:
    out = []
    for f in decl.fields:
        e = _evidence(registry, decl, f.declared_type, InteractionKind.OBJECT_DECL, f.location, f.name)
        if e:
            out.append(e)
    for type_name, loc in decl.local_instantiations:
        e = _evidence(registry, decl, type_name, InteractionKind.OBJECT_DECL, loc, f"new {type_name}")
        if e:
            out.append(e)
    return out


def detect_inheritance_interactions(decl: ClassDecl, registry: ClassRegistry) -> list[InteractionEvidence]:
    out = []
    supers = ([decl.extends_name] if decl.extends_name else []) + list(decl.implements_names)
    for s in supers:
        e = _evidence(registry, decl, s, InteractionKind.INHERITANCE, decl.location, s)
        if e:
            out.append(e)
    return out


DETECTORS = (
    detect_param_interactions,
    detect_return_interactions,
    detect_decl_interactions,
    detect_inheritance_interactions,
)


def _visible_members(decl: ClassDecl) -> int:
    fields = sum(1 for f in decl.fields if f.access != "private")
    methods = sum(1 for m in decl.methods if m.access != "private" and not m.is_constructor)
    return fields + methods


def build_interaction_graph(decls: Sequence[ClassDecl], registry: ClassRegistry | None = None) -> InteractionGraph:
    if not decls:
        raise EmptyCorpus("no user-defined classes found")
    if registry is None:
        registry = ClassRegistry(decls)
    nodes = [
        ClassNode(k, label, d.kind, d.location.file, d.location.line, _visible_members(d))
        for k, (label, d) in enumerate(zip(registry.labels, registry.decls))
    ]
    evidences = [e for d in registry.decls for detect in DETECTORS for e in detect(d, registry)]
    return InteractionGraph.from_evidences(nodes, evidences)
