"""Independent brute-force reference implementations.

These deliberately avoid the library's BFS/coincidence-matrix code paths:
closures are built by recursively merging parent distance maps, reachability
by set union, and agreement from the pooled raw-count identity.  They exist
so the fast implementations can be checked against a second route.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction

from lexispec.synsets import SynsetId


class SpecificityOracle:
    """Exhaustive closure enumeration over explicit up-edges."""

    def __init__(self, up):
        self.up = {node: set(parents) for node, parents in up.items()}
        self._dist = {}
        self._ancestors = {}

    def distances(self, node):
        """Minimal hop counts to every upward-reachable node, self included."""
        if node in self._dist:
            return self._dist[node]
        out = {node: 0}
        for parent in self.up[node]:
            for ancestor, hops in self.distances(parent).items():
                candidate = hops + 1
                if ancestor not in out or candidate < out[ancestor]:
                    out[ancestor] = candidate
        self._dist[node] = out
        return out

    def ancestors(self, node):
        if node in self._ancestors:
            return self._ancestors[node]
        result = set()
        for parent in self.up[node]:
            result.add(parent)
            result |= self.ancestors(parent)
        self._ancestors[node] = result
        return result

    def is_ancestor(self, a, b) -> bool:
        return a in self.ancestors(b)

    def common_hypernyms(self, a, b):
        """All minimal-hop-sum common ancestors as (ancestor, da, db)."""
        da, db = self.distances(a), self.distances(b)
        common = [(node, da[node], db[node]) for node in set(da) & set(db)]
        if not common:
            return []
        best = min(d1 + d2 for _, d1, d2 in common)
        return sorted(
            [entry for entry in common if entry[1] + entry[2] == best],
            key=lambda entry: (entry[1] + entry[2], entry[0]),
        )

    def verdict(self, a, b):
        """(verdict token, case token) per the documented decision procedure."""
        if a == b:
            return "same_level", "direct_relation"
        if self.is_ancestor(a, b):
            return "second_more_specific", "direct_relation"
        if self.is_ancestor(b, a):
            return "first_more_specific", "direct_relation"
        common = self.common_hypernyms(a, b)
        if not common:
            return "incomparable", "no_common_hypernym"
        chosen = sorted(common, key=lambda e: (-abs(e[1] - e[2]), e[0]))[0]
        if chosen[1] > chosen[2]:
            return "first_more_specific", "common_hypernym"
        if chosen[1] < chosen[2]:
            return "second_more_specific", "common_hypernym"
        return "same_level", "common_hypernym"


def random_dag(seed: int, max_nodes: int = 200):
    """Random up-edge map: parents always have smaller ids, so acyclic by
    construction; at most 1.5 edges per node."""
    rng = random.Random(seed)
    n = rng.randint(2, max_nodes)
    nodes = [SynsetId("v", i) for i in range(1, n + 1)]
    budget = int(1.5 * n)
    edges = 0
    up = {}
    for i, node in enumerate(nodes):
        parents = set()
        if i > 0:
            for _ in range(rng.choice((0, 1, 1, 2, 3))):
                if edges >= budget:
                    break
                parent = nodes[rng.randrange(0, i)]
                if parent not in parents:
                    parents.add(parent)
                    edges += 1
        up[node] = frozenset(parents)
    return up


def naive_alpha(labels) -> Fraction:
    """Nominal Krippendorff's alpha from the definition, raw-count route.

    Do = (1/n) * sum over units of (disagreeing ordered pairs)/(m_u - 1);
    De uses the pooled raw counts: (n^2 - sum n_c^2) / (n (n - 1)).
    """
    units = {}
    for (annotator, item), value in labels.items():
        units.setdefault(item, []).append(value)
    units = {item: values for item, values in units.items() if len(values) > 1}
    n = sum(len(values) for values in units.values())
    observed = Fraction(0)
    for values in units.values():
        m = len(values)
        pairs = sum(1 for i in range(m) for j in range(m) if i != j and values[i] != values[j])
        observed += Fraction(pairs, m - 1)
    pooled = Counter()
    for values in units.values():
        pooled.update(values)
    expected_pairs = n * n - sum(c * c for c in pooled.values())
    if expected_pairs == 0:
        raise ZeroDivisionError("degenerate: single category")
    do = observed / n
    de = Fraction(expected_pairs, n * (n - 1))
    return 1 - do / de
