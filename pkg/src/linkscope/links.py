"""Spheres, balls, link graphs, and their degree statistics.

The central quantity is the global minimum, over all vertices v and radii
r >= 1, of the minimum degree of the subgraph induced by the sphere (or
ball) of radius r about v.  Average degrees are kept as exact rationals so
that tightness claims can be checked without floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, _bfs_layer_masks, _bit_indices, degree_profile, induced_subgraph, is_connected

MODES = ("sphere", "ball")


@dataclass(frozen=True)
class LinkRecord:
    v: int
    r: int
    sphere_size: int  # vertex count of the induced subgraph (ball size in ball mode)
    min_degree: int
    avg_degree: Fraction
    components: int


@dataclass(frozen=True)
class LinkReport:
    mode: str
    n: int
    degree: int | None  # uniform degree when the graph is regular
    diameter: int
    records: tuple[LinkRecord, ...]
    global_min: int
    witness: tuple[int, int]  # lexicographically least (v, r) attaining global_min

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "n": self.n,
            "d": self.degree,
            "diameter": self.diameter,
            "global_min": self.global_min,
            "witness": {"v": self.witness[0], "r": self.witness[1]},
            "links": [
                {
                    "v": rec.v,
                    "r": rec.r,
                    "sphere_size": rec.sphere_size,
                    "min_degree": rec.min_degree,
                    "avg_degree_num": rec.avg_degree.numerator,
                    "avg_degree_den": rec.avg_degree.denominator,
                    "components": rec.components,
                }
                for rec in self.records
            ],
        }


@dataclass(frozen=True)
class LinkDegreeProfile:
    min_min_degree: int
    min_avg_degree: Fraction
    component_histogram: dict[int, int]  # component count -> number of links


@dataclass(frozen=True)
class LayerClaimViolation:
    root: int
    layer: int
    vertex: int
    inner_neighbors: int
    required: int


def sphere(G: Graph, v: int, r: int) -> frozenset[int]:
    """Vertices at distance exactly r from v (empty beyond the eccentricity)."""
    if not (0 <= v < G.n):
        raise ValueError(f"vertex {v} out of range for n={G.n}")
    if r < 0:
        raise ValueError(f"radius must be >= 0, got {r}")
    masks = _bfs_layer_masks(G.bits, v)
    if r >= len(masks):
        return frozenset()
    return frozenset(_bit_indices(masks[r]))


def ball(G: Graph, v: int, r: int) -> frozenset[int]:
    """Vertices at distance at most r from v; always contains v."""
    if not (0 <= v < G.n):
        raise ValueError(f"vertex {v} out of range for n={G.n}")
    if r < 0:
        raise ValueError(f"radius must be >= 0, got {r}")
    masks = _bfs_layer_masks(G.bits, v)
    mask = 0
    for layer in masks[: r + 1]:
        mask |= layer
    return frozenset(_bit_indices(mask))


def link_graph(G: Graph, v: int, r: int) -> Graph:
    """Subgraph induced by the radius-r sphere about v; undefined when empty.

    Vertex indices are compressed order-preservingly; use sphere() plus
    induced_subgraph() directly when the index mapping is needed.
    """
    if r < 1:
        raise ValueError(f"link radius must be >= 1, got {r}")
    verts = sphere(G, v, r)
    if not verts:
        raise ValueError(f"link undefined at (v={v}, r={r}): empty sphere")
    sub, _ = induced_subgraph(G, verts)
    return sub


def ball_graph(G: Graph, v: int, r: int) -> Graph:
    """Subgraph induced by the radius-r ball about v (never empty)."""
    if r < 1:
        raise ValueError(f"ball-graph radius must be >= 1, got {r}")
    sub, _ = induced_subgraph(G, ball(G, v, r))
    return sub


def _mask_components(bits: tuple[int, ...], mask: int) -> int:
    """Number of connected components of the subgraph induced on the mask."""
    comps = 0
    remaining = mask
    while remaining:
        comps += 1
        seen = remaining & -remaining
        frontier = seen
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= bits[b.bit_length() - 1]
            frontier = nxt & mask & ~seen
            seen |= frontier
        remaining &= ~seen
    return comps


def _mask_degree_stats(bits: tuple[int, ...], mask: int) -> tuple[int, int, int]:
    """(size, min within-mask degree, degree sum) over the vertices in mask."""
    size = 0
    lo = None
    total = 0
    m = mask
    while m:
        b = m & -m
        m ^= b
        deg = (bits[b.bit_length() - 1] & mask).bit_count()
        size += 1
        total += deg
        if lo is None or deg < lo:
            lo = deg
    return size, lo if lo is not None else 0, total


def min_link_degree(G: Graph, mode: str = "sphere") -> LinkReport:
    """Scan every (v, r) with 1 <= r <= ecc(v) and report induced degree statistics.

    The witness is the lexicographically least (v, r) attaining the global
    minimum, so reports are reproducible regardless of evaluation order.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if G.n < 2:
        raise ValueError("link report requires at least 2 vertices")
    if not is_connected(G):
        raise ValueError("link report requires a connected graph")
    bits = G.bits
    records = []
    best = None
    witness = None
    diam = 0
    for v in range(G.n):
        masks = _bfs_layer_masks(bits, v)
        ecc = len(masks) - 1
        if ecc > diam:
            diam = ecc
        cumulative = masks[0]
        for r in range(1, ecc + 1):
            if mode == "sphere":
                target = masks[r]
            else:
                cumulative |= masks[r]
                target = cumulative
            size, lo, total = _mask_degree_stats(bits, target)
            comps = _mask_components(bits, target)
            records.append(LinkRecord(v, r, size, lo, Fraction(total, size), comps))
            if best is None or lo < best:
                best = lo
                witness = (v, r)
    prof = degree_profile(G)
    return LinkReport(
        mode=mode,
        n=G.n,
        degree=prof.degree,
        diameter=diam,
        records=tuple(records),
        global_min=best,
        witness=witness,
    )


def find_link_with_min_degree_at_most(
    G: Graph, threshold: int, mode: str = "sphere"
) -> tuple[int, int] | None:
    """First (v, r), in lexicographic scan order, whose induced subgraph has
    minimum degree <= threshold; None if every link exceeds the threshold.

    Early-exit companion to min_link_degree for bound checking at scale.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    bits = G.bits
    for v in range(G.n):
        masks = _bfs_layer_masks(bits, v)
        cumulative = masks[0]
        for r in range(1, len(masks)):
            if mode == "sphere":
                target = masks[r]
            else:
                cumulative |= masks[r]
                target = cumulative
            m = target
            while m:
                b = m & -m
                m ^= b
                if (bits[b.bit_length() - 1] & target).bit_count() <= threshold:
                    return (v, r)
    return None


def link_degree_profile(G: Graph) -> LinkDegreeProfile:
    """Aggregate sphere-link statistics: worst min degree, worst average degree,
    and a histogram of link component counts."""
    report = min_link_degree(G, "sphere")
    histogram: dict[int, int] = {}
    min_avg = None
    for rec in report.records:
        histogram[rec.components] = histogram.get(rec.components, 0) + 1
        if min_avg is None or rec.avg_degree < min_avg:
            min_avg = rec.avg_degree
    return LinkDegreeProfile(report.global_min, min_avg, histogram)


def layer_claim_check(
    G: Graph, v: int, *, assumed_min: int | None = None
) -> list[LayerClaimViolation]:
    """Check the inner-layer degree guarantee from the diameter bound's proof.

    With m the global minimum link degree (or ``assumed_min`` when given)
    and d the uniform degree, every vertex of the layer S_j(v), j >= 2,
    must have at least (2j-2)m - (j-1)d + 2j - 1 neighbors in S_{j-1}(v).
    Returns the list of violations; on a correct implementation it is
    always empty, so any entry signals a bug.
    """
    prof = degree_profile(G)
    if not prof.is_regular:
        raise ValueError("layer claim applies to regular graphs only")
    if not is_connected(G):
        raise ValueError("layer claim applies to connected graphs only")
    if not (0 <= v < G.n):
        raise ValueError(f"root {v} out of range for n={G.n}")
    d = prof.degree
    m = assumed_min if assumed_min is not None else min_link_degree(G, "sphere").global_min
    bits = G.bits
    masks = _bfs_layer_masks(bits, v)
    violations = []
    for j in range(2, len(masks)):
        required = (2 * j - 2) * m - (j - 1) * d + 2 * j - 1
        if required <= 0:
            continue
        inner = masks[j - 1]
        mask = masks[j]
        while mask:
            b = mask & -mask
            mask ^= b
            x = b.bit_length() - 1
            count = (bits[x] & inner).bit_count()
            if count < required:
                violations.append(LayerClaimViolation(v, j, x, count, required))
    return violations
