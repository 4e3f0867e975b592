"""Immutable simple graphs over dense vertex indices, with graph6 I/O,
construction combinators, brute-force canonicalization, and small-graph
enumeration.

Vertices are always 0..n-1.  All operations are pure; Graph instances are
hashable and safe to share across workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator


class Graph6ParseError(ValueError):
    """Malformed graph6 input; ``offset`` is the character position at fault."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (offset {offset})"
        super().__init__(message)


class UnsupportedSizeError(ValueError):
    """Graph order outside the limits supported by an operation."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph given by a neighbor set per vertex.

    Invariants (checked on construction): adjacency is symmetric and
    irreflexive, and all neighbor indices lie in 0..n-1.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for i, nbrs in enumerate(self.adj):
            if i in nbrs:
                raise ValueError(f"loop at vertex {i}")
            for j in nbrs:
                if not (0 <= j < self.n):
                    raise ValueError(f"neighbor {j} of vertex {i} out of range")
                if i not in self.adj[j]:
                    raise ValueError(f"asymmetric edge {i}-{j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adj)

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in sorted(self.adj[i]) if i < j]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @cached_property
    def nbr_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks, for fast set arithmetic."""
        return tuple(sum(1 << j for j in s) for s in self.adj)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, tuple(frozenset() for _ in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at index 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


# ---------------------------------------------------------------------------
# Combinators
# ---------------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    all_v = frozenset(range(g.n))
    return Graph(g.n, tuple(all_v - g.adj[i] - {i} for i in range(g.n)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1 plus g2 with g2's vertices re-indexed by offset g1.n."""
    off = g1.n
    adj = list(g1.adj) + [frozenset(v + off for v in s) for s in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    off = g1.n
    left = frozenset(range(off))
    right = frozenset(range(off, off + g2.n))
    adj = [s | right for s in g1.adj]
    adj += [frozenset(v + off for v in s) | left for s in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """G[S] together with the old-index -> new-index map (sorted order)."""
    verts = sorted(set(s))
    for v in verts:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(verts)}
    keep = set(verts)
    adj = tuple(frozenset(index[u] for u in g.adj[v] if u in keep) for v in verts)
    return Graph(len(verts), adj), index


# ---------------------------------------------------------------------------
# graph6 (header byte 63+n, upper-triangle bits in column order, 6 bits/byte)
# ---------------------------------------------------------------------------

def parse_graph6(line: str) -> Graph:
    """Decode a single graph6 line (n <= 62, single size byte)."""
    text = line.strip()
    if not text:
        raise Graph6ParseError("empty graph6 line")
    header = ord(text[0])
    if not (63 <= header <= 63 + 62):
        raise Graph6ParseError(f"malformed header byte {text[0]!r}", offset=0)
    n = header - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[1:]
    if len(body) < nbytes:
        raise Graph6ParseError(
            f"truncated bit body: need {nbytes} bytes, got {len(body)}",
            offset=len(text),
        )
    if len(body) > nbytes:
        raise Graph6ParseError("trailing garbage after bit body", offset=1 + nbytes)
    bits: list[int] = []
    for k, ch in enumerate(body):
        val = ord(ch) - 63
        if not (0 <= val < 64):
            raise Graph6ParseError(f"body byte {ch!r} out of range", offset=1 + k)
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6ParseError("trailing garbage in padding bits", offset=1 + nbits // 6)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 line; inverse of :func:`parse_graph6`."""
    if g.n > 62:
        raise UnsupportedSizeError(f"graph6 single size byte supports n <= 62, got {g.n}")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if j in g.adj[i] else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


# ---------------------------------------------------------------------------
# Canonicalization (brute force over a refined, isomorphism-invariant
# vertex partition; exact for n <= 10)
# ---------------------------------------------------------------------------

_CANONICAL_MAX_N = 10


@dataclass(frozen=True)
class CanonicalLabel:
    """Encoding equal for two graphs iff they are isomorphic."""

    data: bytes


def _refined_classes(g: Graph) -> list[list[int]]:
    """Partition vertices by iterated degree refinement, classes in an
    isomorphism-invariant order."""
    ranks = list(g.degrees())
    for _ in range(g.n):
        keys = [
            (ranks[v], tuple(sorted(ranks[u] for u in g.adj[v])))
            for v in range(g.n)
        ]
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new_ranks = [order[k] for k in keys]
        if new_ranks == ranks:
            break
        ranks = new_ranks
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(ranks[v], []).append(v)
    return [classes[r] for r in sorted(classes)]


def canonical_label(g: Graph) -> CanonicalLabel:
    """Minimum adjacency bit-string over all partition-preserving orderings."""
    if g.n > _CANONICAL_MAX_N:
        raise UnsupportedSizeError(
            f"brute-force canonicalization supports n <= {_CANONICAL_MAX_N}, got {g.n}"
        )
    n = g.n
    if n <= 1:
        return CanonicalLabel(bytes([n]))
    nbits = n * (n - 1) // 2
    # complete and empty graphs admit a single bit-string
    if g.m in (0, nbits):
        mask = (1 << nbits) - 1 if g.m else 0
        return CanonicalLabel(bytes([n]) + mask.to_bytes((nbits + 7) // 8, "big"))
    classes = _refined_classes(g)
    adj = g.adj
    best: int | None = None
    for perm_parts in itertools.product(*[itertools.permutations(c) for c in classes]):
        order = [v for part in perm_parts for v in part]
        mask = 0
        idx = 0
        for j in range(1, n):
            oj = order[j]
            for i in range(j):
                if oj in adj[order[i]]:
                    mask |= 1 << idx
                idx += 1
        if best is None or mask < best:
            best = mask
    assert best is not None
    return CanonicalLabel(bytes([n]) + best.to_bytes((nbits + 7) // 8, "big"))


# ---------------------------------------------------------------------------
# Induced subgraph containment
# ---------------------------------------------------------------------------

def contains_induced(g: Graph, h: Graph) -> tuple[bool, dict[int, int] | None]:
    """Does some vertex subset of g induce a copy of h?

    Returns (found, witness) where the witness maps h-vertices to g-vertices
    preserving both adjacency and non-adjacency.
    """
    if h.n > g.n:
        return False, None
    if h.n == 0:
        return True, {}
    order = sorted(range(h.n), key=lambda v: -h.degree(v))
    assign: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == h.n:
            return True
        hv = order[i]
        for gv in range(g.n):
            if gv in used or g.degree(gv) < h.degree(hv):
                continue
            if all(
                (prev in h.adj[hv]) == (assign[prev] in g.adj[gv])
                for prev in order[:i]
            ):
                assign[hv] = gv
                used.add(gv)
                if extend(i + 1):
                    return True
                del assign[hv]
                used.remove(gv)
        return False

    if extend(0):
        return True, dict(assign)
    return False, None


# ---------------------------------------------------------------------------
# Enumeration of small graphs up to isomorphism
# ---------------------------------------------------------------------------

_ENUMERATE_MAX_N = 7
_TREE_MAX_N = 12


def _mask_connected(n: int, nbr_masks: tuple[int, ...] | list[int]) -> bool:
    if n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= nbr_masks[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def _is_connected(g: Graph) -> bool:
    return _mask_connected(g.n, g.nbr_masks)


@lru_cache(maxsize=None)
def _graph_reps(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class, by vertex augmentation."""
    if n == 0:
        return (Graph(0, ()),)
    if n == 1:
        return (empty_graph(1),)
    out: list[Graph] = []
    seen: set[bytes] = set()
    for g in _graph_reps(n - 1):
        base = [set(s) for s in g.adj]
        for mask in range(1 << (n - 1)):
            adj = [set(s) for s in base] + [set()]
            v = mask
            while v:
                u = (v & -v).bit_length() - 1
                v &= v - 1
                adj[u].add(n - 1)
                adj[n - 1].add(u)
            cand = Graph(n, tuple(frozenset(s) for s in adj))
            label = canonical_label(cand).data
            if label not in seen:
                seen.add(label)
                out.append(cand)
    return tuple(out)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All graphs on n vertices, one per isomorphism class (1 <= n <= 7)."""
    if not (1 <= n <= _ENUMERATE_MAX_N):
        raise UnsupportedSizeError(
            f"built-in enumeration covers 1 <= n <= {_ENUMERATE_MAX_N}; "
            "ingest a graph6 file for larger orders"
        )
    yield from _graph_reps(n)


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Connected graphs on n vertices, one per isomorphism class (1 <= n <= 7)."""
    if not (1 <= n <= _ENUMERATE_MAX_N):
        raise UnsupportedSizeError(
            f"built-in enumeration covers 1 <= n <= {_ENUMERATE_MAX_N}; "
            "ingest a graph6 file for larger orders"
        )
    for g in _graph_reps(n):
        if _is_connected(g):
            yield g


# Trees get their own generator: the campaign over closed-form tree values
# runs past the n <= 10 canonicalization limit, and rooted tree codes are
# exact at any size.

def _tree_code(g: Graph) -> tuple:
    """Canonical code of a free tree (min rooted code over its 1-2 centers)."""
    n = g.n
    if n == 1:
        return ((),)
    degree = [g.degree(v) for v in range(n)]
    layer = [v for v in range(n) if degree[v] <= 1]
    removed = 0
    alive = [True] * n
    while n - removed > 2:
        nxt = []
        for v in layer:
            alive[v] = False
            removed += 1
            for u in g.adj[v]:
                if alive[u]:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    centers = [v for v in range(n) if alive[v]]

    def rooted(v: int, parent: int) -> tuple:
        return tuple(sorted(rooted(u, v) for u in g.adj[v] if u != parent))

    return min(rooted(c, -1) for c in centers)


@lru_cache(maxsize=None)
def _tree_reps(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (empty_graph(1),)
    out: list[Graph] = []
    seen: set[tuple] = set()
    for t in _tree_reps(n - 1):
        for v in range(t.n):
            grown = Graph.from_edges(n, t.edges() + [(v, n - 1)])
            code = _tree_code(grown)
            if code not in seen:
                seen.add(code)
                out.append(grown)
    return tuple(out)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All trees on n vertices, one per isomorphism class (1 <= n <= 12)."""
    if not (1 <= n <= _TREE_MAX_N):
        raise UnsupportedSizeError(f"built-in tree enumeration covers 1 <= n <= {_TREE_MAX_N}")
    yield from _tree_reps(n)
