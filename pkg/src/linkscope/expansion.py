"""Vertex expansion: exact subset sweeps, seeded heuristic upper bounds, and
per-link expansion profiles.

The expansion of a graph is the minimum of |boundary(S)| / |S| over the
nonempty vertex sets S with |S| <= n/2, where boundary(S) is the set of
vertices outside S with a neighbor inside.  All ratios are exact
rationals; no floating point enters any comparison.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import Graph, _bfs_layer_masks, _bit_indices, induced_subgraph, is_connected
from .links import _mask_components

DEFAULT_EXACT_CAP = 26


@dataclass(frozen=True)
class ExpansionResult:
    value: Fraction
    minimizer: tuple[int, ...]
    exact: bool  # True: exhaustive sweep; False: certified upper bound only
    subsets_examined: int


@dataclass(frozen=True)
class LinkExpansionRecord:
    v: int
    r: int
    size: int
    value: Fraction | None  # None for single-vertex links (expansion undefined)
    exact: bool | None
    components: int


@dataclass(frozen=True)
class LinkExpansionProfile:
    records: tuple[LinkExpansionRecord, ...]
    global_min: Fraction | None  # minimum over defined links; None if all undefined
    diameter: int

    def to_json_dict(self) -> dict:
        return {
            "global_min_num": None if self.global_min is None else self.global_min.numerator,
            "global_min_den": None if self.global_min is None else self.global_min.denominator,
            "records": [
                {
                    "v": rec.v,
                    "r": rec.r,
                    "size": rec.size,
                    "h_num": None if rec.value is None else rec.value.numerator,
                    "h_den": None if rec.value is None else rec.value.denominator,
                    "exact": rec.exact,
                    "components": rec.components,
                }
                for rec in self.records
            ],
        }


def vertex_boundary(G: Graph, S: Iterable[int]) -> frozenset[int]:
    """Vertices outside S having at least one neighbor inside S."""
    mask = 0
    for v in S:
        if not (0 <= v < G.n):
            raise ValueError(f"vertex {v} out of range for n={G.n}")
        mask |= 1 << v
    reach = 0
    m = mask
    while m:
        b = m & -m
        m ^= b
        reach |= G.bits[b.bit_length() - 1]
    return frozenset(_bit_indices(reach & ~mask))


def _boundary_size(bits: tuple[int, ...], mask: int) -> int:
    reach = 0
    m = mask
    while m:
        b = m & -m
        m ^= b
        reach |= bits[b.bit_length() - 1]
    return (reach & ~mask).bit_count()


def expansion_exact(G: Graph, *, exact_cap: int = DEFAULT_EXACT_CAP) -> ExpansionResult:
    """Exhaustive expansion via a Gray-code sweep over all admissible subsets.

    The boundary is maintained incrementally across single-vertex flips, and
    ratios are compared by cross-multiplication.  Among minimizers the
    numerically least bitmask (bit i = vertex i) is returned.
    """
    n = G.n
    if n < 2:
        raise ValueError("expansion undefined: no admissible S for n < 2")
    if n > exact_cap:
        raise ValueError(
            f"n={n} exceeds the exact cap {exact_cap}; use expansion_upper_bound"
        )
    half = n // 2
    adj = G.adjacency
    cover = [0] * n  # cover[w] = number of neighbors of w inside S
    mask = 0
    size = 0
    boundary = 0
    best_bnd = best_size = best_mask = None
    examined = 0
    for i in range(1, 1 << n):
        v = (i & -i).bit_length() - 1
        b = 1 << v
        if mask & b:
            mask ^= b
            size -= 1
            if cover[v]:
                boundary += 1
            for w in adj[v]:
                cover[w] -= 1
                if cover[w] == 0 and not (mask >> w) & 1:
                    boundary -= 1
        else:
            mask |= b
            size += 1
            if cover[v]:
                boundary -= 1
            for w in adj[v]:
                cover[w] += 1
                if cover[w] == 1 and not (mask >> w) & 1:
                    boundary += 1
        if 1 <= size <= half:
            examined += 1
            if (
                best_bnd is None
                or boundary * best_size < best_bnd * size
                or (boundary * best_size == best_bnd * size and mask < best_mask)
            ):
                best_bnd, best_size, best_mask = boundary, size, mask
    return ExpansionResult(
        value=Fraction(best_bnd, best_size),
        minimizer=tuple(_bit_indices(best_mask)),
        exact=True,
        subsets_examined=examined,
    )


def _descend(bits: tuple[int, ...], n: int, mask: int) -> tuple[int, int]:
    """1-swap local descent at fixed size; returns (mask, boundary_size).

    Repeatedly applies the first strictly boundary-reducing swap of one
    member for one non-member, scanning pairs in ascending order, until no
    swap improves.  Deterministic for a given start mask.
    """
    boundary = _boundary_size(bits, mask)
    improved = True
    while improved and boundary > 0:
        improved = False
        members = _bit_indices(mask)
        outside = [w for w in range(n) if not (mask >> w) & 1]
        for u in members:
            for w in outside:
                cand = (mask ^ (1 << u)) | (1 << w)
                cb = _boundary_size(bits, cand)
                if cb < boundary:
                    mask, boundary = cand, cb
                    improved = True
                    break
            if improved:
                break
    return mask, boundary


def expansion_upper_bound(G: Graph, seed: int, iterations: int = 64) -> ExpansionResult:
    """Heuristic expansion bound: randomized BFS-grown sets from random roots,
    recorded at every admissible size, then 1-swap local descent.

    The value is a certified upper bound (the ratio of the returned set) and
    is deterministic for a fixed seed.
    """
    n = G.n
    if n < 2:
        raise ValueError("expansion undefined: no admissible S for n < 2")
    bits = G.bits
    half = n // 2
    rng = random.Random(seed)
    best_bnd = best_size = best_mask = None
    examined = 0

    def record(mask: int, bnd: int, size: int) -> None:
        nonlocal best_bnd, best_size, best_mask, examined
        examined += 1
        if (
            best_bnd is None
            or bnd * best_size < best_bnd * size
            or (bnd * best_size == best_bnd * size and mask < best_mask)
        ):
            best_bnd, best_size, best_mask = bnd, size, mask

    descend_every_size = n <= 20
    for _ in range(iterations):
        root = rng.randrange(n)
        mask = 1 << root
        reach = bits[root]
        size = 1
        iter_best = None  # (bnd, size, mask) best raw snapshot this iteration
        while True:
            frontier = reach & ~mask
            bnd = frontier.bit_count()
            record(mask, bnd, size)
            if descend_every_size:
                dmask, dbnd = _descend(bits, n, mask)
                record(dmask, dbnd, size)
            if iter_best is None or bnd * iter_best[1] < iter_best[0] * size:
                iter_best = (bnd, size, mask)
            if size >= half or not frontier:
                break
            choices = _bit_indices(frontier)
            w = choices[rng.randrange(len(choices))]
            mask |= 1 << w
            reach |= bits[w]
            size += 1
        if not descend_every_size:
            dmask, dbnd = _descend(bits, n, iter_best[2])
            record(dmask, dbnd, iter_best[1])
    return ExpansionResult(
        value=Fraction(best_bnd, best_size),
        minimizer=tuple(_bit_indices(best_mask)),
        exact=False,
        subsets_examined=examined,
    )


def _derived_seed(seed: int, v: int, r: int) -> int:
    # stable per-(v, r) stream derivation; independent of hash randomization
    return seed * 1_000_003 + v * 7919 + r


def link_expansion_profile(
    G: Graph, *, exact_cap: int = DEFAULT_EXACT_CAP, seed: int = 0
) -> LinkExpansionProfile:
    """Expansion of every nonempty sphere link, exact when the sphere fits the
    cap, heuristic otherwise; single-vertex links are recorded as undefined
    and excluded from the global minimum."""
    if not is_connected(G):
        raise ValueError("link expansion profile requires a connected graph")
    bits = G.bits
    records = []
    global_min = None
    diam = 0
    for v in range(G.n):
        masks = _bfs_layer_masks(bits, v)
        ecc = len(masks) - 1
        if ecc > diam:
            diam = ecc
        for r in range(1, ecc + 1):
            verts = _bit_indices(masks[r])
            size = len(verts)
            sub, _ = induced_subgraph(G, verts)
            comps = _mask_components(bits, masks[r])
            if size == 1:
                records.append(LinkExpansionRecord(v, r, 1, None, None, comps))
                continue
            if size <= exact_cap:
                res = expansion_exact(sub, exact_cap=exact_cap)
            else:
                res = expansion_upper_bound(sub, seed=_derived_seed(seed, v, r))
            records.append(LinkExpansionRecord(v, r, size, res.value, res.exact, comps))
            if global_min is None or res.value < global_min:
                global_min = res.value
    return LinkExpansionProfile(tuple(records), global_min, diam)
