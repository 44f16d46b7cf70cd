"""Immutable simple-graph core: construction, BFS layers, products, blow-ups, edge-list IO.

Vertices are dense 0-based indices.  Adjacency is stored as one integer
bitmask per vertex (bit ``w`` of ``bits[v]`` is set iff ``v ~ w``), which
makes the intersection-heavy link-degree and expansion kernels cheap;
sorted neighbor tuples are derived lazily.  Everything here is a pure
function of its inputs and ordering is deterministic throughout, so any
report built on top is byte-stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

UNREACHABLE = -1


def _bit_indices(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out


class Graph:
    """Undirected simple graph on vertices 0..n-1, immutable once built.

    Instances are meant to be shared freely (including across worker
    processes); no method mutates the graph after construction.
    """

    __slots__ = ("n", "bits", "edge_count", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        bits = [0] * n
        for idx, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(
                    f"edge #{idx} ({u}, {v}): endpoint out of range for n={n}"
                )
            if u == v:
                raise ValueError(f"edge #{idx} ({u}, {v}): self-loop not allowed")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.n = n
        self.bits = tuple(bits)
        self.edge_count = sum(b.bit_count() for b in bits) // 2
        self._adj = None

    @classmethod
    def _from_bits(cls, n: int, bits: Iterable[int]) -> "Graph":
        """Trusted constructor for callers that guarantee symmetric, loop-free rows."""
        g = object.__new__(cls)
        g.n = n
        g.bits = tuple(bits)
        g.edge_count = sum(b.bit_count() for b in g.bits) // 2
        g._adj = None
        return g

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbor tuples (built lazily from the bitmasks)."""
        if self._adj is None:
            self._adj = tuple(tuple(_bit_indices(b)) for b in self.bits)
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return self.bits[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(b.bit_count() for b in self.bits)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.bits[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        for u in range(self.n):
            m = self.bits[u] >> (u + 1)
            while m:
                b = m & -m
                m ^= b
                yield (u, u + b.bit_length())

    def validate(self) -> None:
        """Check structural invariants: loop-freeness, symmetry, in-range bits."""
        full = (1 << self.n) - 1
        for v, row in enumerate(self.bits):
            if row & ~full:
                raise AssertionError(f"vertex {v}: neighbor bit out of range")
            if (row >> v) & 1:
                raise AssertionError(f"vertex {v}: self-loop present")
            m = row
            while m:
                b = m & -m
                m ^= b
                w = b.bit_length() - 1
                if not (self.bits[w] >> v) & 1:
                    raise AssertionError(f"asymmetric edge ({v}, {w})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    max_degree: int
    is_regular: bool
    degree: int | None  # uniform degree when regular, else None


@dataclass(frozen=True)
class LayerDecomposition:
    """BFS layers from a root: layers[r] is the set of vertices at distance r.

    ``dist`` holds UNREACHABLE (-1) for vertices outside the root's
    component; those vertices appear in no layer.
    """

    root: int
    dist: tuple[int, ...]
    layers: tuple[frozenset[int], ...]
    eccentricity: int


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from (u, v) pairs; duplicates collapse to one edge."""
    return Graph(n, edges)


def degree_profile(G: Graph) -> DegreeProfile:
    if G.n < 1:
        raise ValueError("degree profile undefined for the empty graph")
    degs = G.degrees()
    lo, hi = min(degs), max(degs)
    regular = lo == hi
    return DegreeProfile(lo, hi, regular, lo if regular else None)


def is_connected(G: Graph) -> bool:
    """True iff a BFS from vertex 0 reaches every vertex (n >= 1 required)."""
    if G.n < 1:
        raise ValueError("connectivity undefined for the empty graph")
    bits = G.bits
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= bits[b.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << G.n) - 1


def is_complete(G: Graph) -> bool:
    return G.edge_count == G.n * (G.n - 1) // 2


def _bfs_layer_masks(bits: tuple[int, ...], v: int) -> list[int]:
    """Layer bitmasks [S_0, S_1, ...] from v; stops at the last nonempty layer."""
    seen = 1 << v
    layers = [seen]
    frontier = seen
    while True:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= bits[b.bit_length() - 1]
        frontier = nxt & ~seen
        if not frontier:
            return layers
        layers.append(frontier)
        seen |= frontier


def bfs_layers(G: Graph, v: int) -> LayerDecomposition:
    """Decompose the component of v into distance layers."""
    if not (0 <= v < G.n):
        raise ValueError(f"root {v} out of range for n={G.n}")
    masks = _bfs_layer_masks(G.bits, v)
    dist = [UNREACHABLE] * G.n
    layers = []
    for r, mask in enumerate(masks):
        verts = _bit_indices(mask)
        for w in verts:
            dist[w] = r
        layers.append(frozenset(verts))
    return LayerDecomposition(v, tuple(dist), tuple(layers), len(masks) - 1)


def eccentricity(G: Graph, v: int) -> int:
    """Maximum distance from v within its component."""
    return len(_bfs_layer_masks(G.bits, v)) - 1


def diameter(G: Graph) -> int:
    """Maximum eccentricity; raises on disconnected input."""
    if not is_connected(G):
        raise ValueError("diameter undefined for disconnected graphs")
    return max(len(_bfs_layer_masks(G.bits, v)) - 1 for v in range(G.n))


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on S, plus the order-preserving old->new index map."""
    verts = sorted(set(S))
    if not verts:
        raise ValueError("induced subgraph undefined for the empty vertex set")
    if verts[0] < 0 or verts[-1] >= G.n:
        raise ValueError(f"vertex set not contained in 0..{G.n - 1}")
    mapping = {old: new for new, old in enumerate(verts)}
    mask = 0
    for old in verts:
        mask |= 1 << old
    bits = []
    for old in verts:
        row = 0
        m = G.bits[old] & mask
        while m:
            b = m & -m
            m ^= b
            row |= 1 << mapping[b.bit_length() - 1]
        bits.append(row)
    return Graph._from_bits(len(verts), bits), mapping


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """Cartesian product; vertex (g, h) is flattened row-major to g*|H| + h."""
    if G.n == 0 or H.n == 0:
        raise ValueError("cartesian product requires nonempty factors")
    nh = H.n
    bits = [0] * (G.n * nh)
    for g in range(G.n):
        base = g * nh
        g_row = G.bits[g]
        for h in range(nh):
            row = H.bits[h] << base
            m = g_row
            while m:
                b = m & -m
                m ^= b
                row |= 1 << ((b.bit_length() - 1) * nh + h)
            bits[base + h] = row
    return Graph._from_bits(G.n * nh, bits)


def blow_up(G: Graph, t: int) -> Graph:
    """Replace each vertex by a t-clique; cliques of adjacent vertices are fully joined.

    For a d-regular input the result is (t*(d+1) - 1)-regular.
    """
    if t < 1:
        raise ValueError(f"clique order must be >= 1, got {t}")
    block = (1 << t) - 1
    n = G.n * t
    bits = [0] * n
    for v in range(G.n):
        nbr_union = 0
        m = G.bits[v]
        while m:
            b = m & -m
            m ^= b
            nbr_union |= block << ((b.bit_length() - 1) * t)
        own = block << (v * t)
        for i in range(t):
            idx = v * t + i
            bits[idx] = (own ^ (1 << idx)) | nbr_union
    return Graph._from_bits(n, bits)


# ---------------------------------------------------------------------------
# Edge-list text format: '#' comment lines, then a line "n", then "u v" lines.
# The writer emits edges with u < v in lexicographic order.
# ---------------------------------------------------------------------------


def read_edge_list(text: str) -> Graph:
    """Parse the edge-list text format; errors carry 1-based line numbers."""
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ValueError(f"line {lineno}: expected vertex count, got {line!r}")
            try:
                n = int(fields[0])
            except ValueError:
                raise ValueError(f"line {lineno}: vertex count is not an integer: {line!r}") from None
            if n < 0:
                raise ValueError(f"line {lineno}: vertex count must be nonnegative")
            continue
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: endpoints are not integers: {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop ({u}, {v}) not allowed")
        edges.append((u, v))
    if n is None:
        raise ValueError("no vertex count line found")
    return Graph(n, edges)


def write_edge_list(G: Graph, comments: Iterable[str] = ()) -> str:
    """Serialize to the edge-list text format."""
    lines = [f"# {c}" for c in comments]
    lines.append(str(G.n))
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"
