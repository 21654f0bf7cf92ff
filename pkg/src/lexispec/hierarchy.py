"""Graph algorithms over the hypernym DAG.

The graph keeps two adjacency maps that are exact inverses: ``up`` follows
hypernym edges (toward broader senses) and ``down`` follows hyponym edges.
WordNet verbs form a forest, so multiple roots and disjoint components are
normal.  All query functions are pure and safe under concurrent reads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import CycleDetected, UnknownSynset
from .synsets import LexicalDatabase, SynsetId


@dataclass(frozen=True)
class CommonHypernym:
    """A shared ancestor with minimal hop counts from each query synset."""

    ancestor: SynsetId
    hops_first: int
    hops_second: int

    @property
    def hop_sum(self) -> int:
        return self.hops_first + self.hops_second

    def swapped(self) -> "CommonHypernym":
        return CommonHypernym(self.ancestor, self.hops_second, self.hops_first)


@dataclass(frozen=True)
class HypernymGraph:
    up: dict[SynsetId, frozenset[SynsetId]]
    down: dict[SynsetId, frozenset[SynsetId]]

    def __contains__(self, sid: SynsetId) -> bool:
        return sid in self.up

    def __len__(self) -> int:
        return len(self.up)

    def nodes(self) -> Iterable[SynsetId]:
        return self.up.keys()


def _require(graph: HypernymGraph, sid: SynsetId) -> None:
    if sid not in graph.up:
        raise UnknownSynset(str(sid))


def graph_from_edges(up: Mapping[SynsetId, Iterable[SynsetId]]) -> HypernymGraph:
    """Build a validated graph from explicit up-edges."""
    nodes = set(up)
    for targets in up.values():
        nodes.update(targets)
    full_up = {sid: frozenset(up.get(sid, ())) for sid in nodes}
    down: dict[SynsetId, set[SynsetId]] = {sid: set() for sid in nodes}
    for sid, parents in full_up.items():
        for parent in parents:
            down[parent].add(sid)
    graph = HypernymGraph(up=full_up, down={sid: frozenset(kids) for sid, kids in down.items()})
    cycle = _find_cycle(graph)
    if cycle is not None:
        raise CycleDetected(cycle)
    return graph


def build_graph(db: LexicalDatabase) -> HypernymGraph:
    """The hypernym DAG over every non-satellite synset of ``db``.

    Adjective satellites carry no hypernym structure and are excluded from
    hierarchy queries entirely.
    """
    up = {}
    for sid, synset in db.synsets.items():
        if sid.pos == "s":
            continue
        up[sid] = frozenset(t for t in synset.hypernym_ids() if t.pos != "s")
    return graph_from_edges(up)


def _find_cycle(graph: HypernymGraph) -> list[SynsetId] | None:
    """None when acyclic; otherwise one witness cycle in up-edge order."""
    indegree = {sid: 0 for sid in graph.up}
    for parents in graph.up.values():
        for parent in parents:
            indegree[parent] += 1
    ready = sorted((sid for sid, deg in indegree.items() if deg == 0), reverse=True)
    removed = set()
    while ready:
        node = ready.pop()
        removed.add(node)
        for parent in graph.up[node]:
            indegree[parent] -= 1
            if indegree[parent] == 0:
                ready.append(parent)
    if len(removed) == len(graph.up):
        return None
    remaining = {sid for sid in graph.up if sid not in removed}
    # every remaining node has a remaining child; walk child edges until a repeat
    start = min(remaining)
    path: list[SynsetId] = []
    position: dict[SynsetId, int] = {}
    current = start
    while current not in position:
        position[current] = len(path)
        path.append(current)
        current = min(c for c in graph.down[current] if c in remaining)
    cycle = path[position[current]:]
    cycle.reverse()  # report in up-edge (child -> hypernym) order
    return cycle


def is_ancestor(graph: HypernymGraph, a: SynsetId, b: SynsetId) -> bool:
    """True when ``a`` lies on some upward hypernym path from ``b``.

    The relation is transitive over any hop count >= 1, so a synset is
    never its own ancestor.
    """
    _require(graph, a)
    _require(graph, b)
    if a == b:
        return False
    seen = {b}
    queue = deque([b])
    while queue:
        node = queue.popleft()
        for parent in graph.up[node]:
            if parent == a:
                return True
            if parent not in seen:
                seen.add(parent)
                queue.append(parent)
    return False


def hypernym_closure(graph: HypernymGraph, sid: SynsetId) -> dict[SynsetId, int]:
    """Every upward-reachable synset mapped to its minimal hop count.

    Includes ``sid`` itself at distance 0.  Distances are BFS-minimal, which
    matters in DAGs where several upward paths exist.
    """
    _require(graph, sid)
    dist = {sid: 0}
    queue = deque([sid])
    while queue:
        node = queue.popleft()
        for parent in sorted(graph.up[node]):
            if parent not in dist:
                dist[parent] = dist[node] + 1
                queue.append(parent)
    return dist


def lowest_common_hypernyms(graph: HypernymGraph, a: SynsetId, b: SynsetId) -> list[CommonHypernym]:
    """All common ancestors minimizing total hop distance, ties included.

    Empty when the closures are disjoint (for example two root verbs in
    different components).  Deterministically sorted by (hop sum, id).
    """
    closure_a = hypernym_closure(graph, a)
    closure_b = hypernym_closure(graph, b)
    common = closure_a.keys() & closure_b.keys()
    if not common:
        return []
    best = min(closure_a[s] + closure_b[s] for s in common)
    result = [
        CommonHypernym(s, closure_a[s], closure_b[s])
        for s in common
        if closure_a[s] + closure_b[s] == best
    ]
    result.sort(key=lambda c: (c.hop_sum, c.ancestor))
    return result


def sister_terms(graph: HypernymGraph, sid: SynsetId) -> set[SynsetId]:
    """All synsets other than ``sid`` sharing at least one direct hypernym."""
    _require(graph, sid)
    sisters: set[SynsetId] = set()
    for parent in graph.up[sid]:
        sisters.update(graph.down[parent])
    sisters.discard(sid)
    return sisters


def direct_hyponyms(graph: HypernymGraph, sid: SynsetId) -> set[SynsetId]:
    _require(graph, sid)
    return set(graph.down[sid])


def paths_to_roots(graph: HypernymGraph, sid: SynsetId) -> list[list[SynsetId]]:
    """Every maximal upward path from ``sid``, each ending at a root.

    Deterministic order: parents are explored sorted by id.
    """
    _require(graph, sid)
    memo: dict[SynsetId, list[list[SynsetId]]] = {}

    def walk(node: SynsetId) -> list[list[SynsetId]]:
        if node in memo:
            return memo[node]
        parents = sorted(graph.up[node])
        if not parents:
            paths = [[node]]
        else:
            paths = [[node] + tail for parent in parents for tail in walk(parent)]
        memo[node] = paths
        return paths

    return [list(path) for path in walk(sid)]


def shortest_up_chain(graph: HypernymGraph, descendant: SynsetId, ancestor: SynsetId) -> list[SynsetId] | None:
    """One minimal hypernym chain descendant -> ... -> ancestor.

    Ties are broken toward smaller synset ids; None when unreachable.
    """
    _require(graph, descendant)
    _require(graph, ancestor)
    if descendant == ancestor:
        return [descendant]
    previous: dict[SynsetId, SynsetId] = {}
    queue = deque([descendant])
    seen = {descendant}
    while queue:
        node = queue.popleft()
        for parent in sorted(graph.up[node]):
            if parent in seen:
                continue
            previous[parent] = node
            if parent == ancestor:
                chain = [ancestor]
                while chain[-1] != descendant:
                    chain.append(previous[chain[-1]])
                chain.reverse()
                return chain
            seen.add(parent)
            queue.append(parent)
    return None
