"""Graph family generators: cycles, cycle powers, clique blow-ups, near-complete
graphs, random regular graphs, and exhaustive enumeration of labeled regular
graphs.

Every stochastic generator takes an explicit seed and drives its own
``random.Random`` instance, so outputs are reproducible across runs and
platforms; there is no global RNG state anywhere in this module.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .graph import Graph, blow_up, cartesian_product, is_connected

# Default feasibility guard for exhaustive enumeration, keyed by degree.
_ENUMERATION_LIMITS = {0: 16, 1: 16, 2: 16, 3: 12, 4: 10}
_ENUMERATION_LIMIT_DEFAULT = 9

_CANONICAL_LIMIT = 8


def cycle(n: int) -> Graph:
    """The n-cycle (2-regular, diameter floor(n/2))."""
    if n < 3:
        raise ValueError(f"cycle requires n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def cycle_power(n: int, k: int) -> Graph:
    """k-th power of the n-cycle: i ~ i +- 1..k (mod n); 2k-regular.

    Requires n >= 2k + 2 so that the result is not complete.
    """
    if k < 1:
        raise ValueError(f"cycle power requires k >= 1, got {k}")
    if n < 2 * k + 2:
        raise ValueError(
            f"cycle power requires n >= 2k + 2 (n={n}, k={k} would be complete)"
        )
    edges = [(i, (i + j) % n) for i in range(n) for j in range(1, k + 1)]
    return Graph(n, edges)


def proposition_valid_n(n: int, k: int) -> bool:
    """True iff n - 1 is congruent, mod 2k, to some a in {k, ..., 2k}.

    This is exactly the condition under which the final sphere of the
    cycle power C_n^k has between k and 2k vertices, making its minimum
    link degree k - 1.
    """
    if k < 1:
        raise ValueError(f"requires k >= 1, got {k}")
    if n < 2 * k + 2:
        raise ValueError(f"requires n >= 2k + 2, got n={n}, k={k}")
    a = (n - 2) % (2 * k) + 1  # representative of n - 1 shifted into {1, ..., 2k}
    return a >= k


def blown_up_cycle(n: int, k: int) -> Graph:
    """Each vertex of the n-cycle blown up to a k-clique: (3k-1)-regular on nk
    vertices, diameter ceil((n-1)/2)."""
    if n < 5:
        raise ValueError(f"blown-up cycle requires n >= 5, got {n}")
    if k < 1:
        raise ValueError(f"blown-up cycle requires k >= 1, got {k}")
    return blow_up(cycle(n), k)


def complete_minus_matching(d: int) -> Graph:
    """Complete graph on d+2 vertices minus the perfect matching (2i, 2i+1);
    d-regular with diameter 2.  Requires even d >= 2."""
    if d < 2 or d % 2 != 0:
        raise ValueError(f"requires even d >= 2, got {d}")
    n = d + 2
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not (u % 2 == 0 and v == u + 1)
    ]
    return Graph(n, edges)


def product_cycle_blowup(m: int, t: int) -> Graph:
    """Blow-up, by t-cliques, of the Cartesian product of a triangle and an odd
    m-cycle; (5t-1)-regular on 3mt vertices."""
    if m < 5 or m % 2 == 0:
        raise ValueError(f"requires odd m >= 5, got {m}")
    if t < 1:
        raise ValueError(f"requires t >= 1, got {t}")
    return blow_up(cartesian_product(cycle(3), cycle(m)), t)


def random_regular(
    n: int,
    d: int,
    seed: int,
    *,
    connected: bool = False,
    max_attempts: int = 2000,
) -> Graph:
    """Random d-regular simple graph via the pairing model with full rejection.

    Stub pairings producing a loop or repeated edge are discarded and the
    attempt restarted; with ``connected`` the sample is additionally
    rejected until connected.  Deterministic for a fixed seed.
    """
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    if not (0 <= d < n):
        raise ValueError(f"requires 0 <= d < n, got n={n}, d={d}")
    if (n * d) % 2 != 0:
        raise ValueError(f"n*d must be even, got n={n}, d={d}")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for attempt in range(1, max_attempts + 1):
        rng.shuffle(stubs)
        bits = [0] * n
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (bits[u] >> v) & 1:
                ok = False
                break
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        if not ok:
            continue
        g = Graph._from_bits(n, bits)
        if connected and not is_connected(g):
            continue
        return g
    raise RuntimeError(
        f"no admissible {d}-regular graph on {n} vertices after {max_attempts} attempts"
    )


def expander_blowup(n_base: int, t: int, seed: int) -> Graph:
    """Blow-up, by t-cliques, of a connected random cubic graph on n_base
    vertices; (4t-1)-regular on n_base*t vertices."""
    if n_base < 4 or n_base % 2 != 0:
        raise ValueError(f"requires even n_base >= 4, got {n_base}")
    if t < 1:
        raise ValueError(f"requires t >= 1, got {t}")
    base = random_regular(n_base, 3, seed, connected=True)
    return blow_up(base, t)


def _enumerate_rows(
    n: int, d: int, first_choice: tuple[int, ...] | None = None
) -> Iterator[list[int]]:
    """Backtracking enumeration of labeled d-regular graphs as bitmask rows.

    At each step the least vertex with unmet degree is completed by choosing
    its remaining partners among later vertices, in ascending combination
    order; branches where some remaining degree exceeds the available
    partner slots are pruned.  Each labeled graph is emitted exactly once.
    The yielded list is reused; callers must copy what they keep.

    ``first_choice`` restricts vertex 0 to one fixed partner set, which is
    how the search tree is split across workers.
    """
    rows = [0] * n
    rem = [d] * n

    def extend(u: int) -> Iterator[list[int]]:
        while u < n and rem[u] == 0:
            u += 1
        if u == n:
            yield rows
            return
        need = rem[u]
        cands = [v for v in range(u + 1, n) if rem[v] > 0]
        if len(cands) < need:
            return
        for combo in combinations(cands, need):
            for v in combo:
                rem[v] -= 1
            rem[u] = 0
            unfilled = 0
            maxrem = 0
            for v in range(u + 1, n):
                if rem[v] > 0:
                    unfilled += 1
                    if rem[v] > maxrem:
                        maxrem = rem[v]
            if not (maxrem and maxrem > unfilled - 1):
                bu = 1 << u
                for v in combo:
                    rows[u] |= 1 << v
                    rows[v] |= bu
                yield from extend(u + 1)
                for v in combo:
                    rows[v] &= ~bu
                    rows[u] &= ~(1 << v)
            for v in combo:
                rem[v] += 1
            rem[u] = need

    if first_choice is None:
        yield from extend(0)
        return
    if d == 0:
        if first_choice == ():
            yield from extend(0)
        return
    combo = tuple(first_choice)
    for v in combo:
        rem[v] -= 1
        rows[0] |= 1 << v
        rows[v] |= 1
    rem[0] = 0
    yield from extend(1)


def _rows_connected(rows: list[int], full: int) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= rows[b.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def enumeration_feasible(n: int, d: int, *, size_limit: int | None = None) -> bool:
    limit = size_limit
    if limit is None:
        limit = _ENUMERATION_LIMITS.get(d, _ENUMERATION_LIMIT_DEFAULT)
    return n <= limit


def enumerate_regular(
    n: int,
    d: int,
    connected_only: bool = False,
    *,
    size_limit: int | None = None,
) -> Iterator[Graph]:
    """Every labeled d-regular graph on n vertices, exactly once, in the
    deterministic backtracking order of _enumerate_rows.

    A feasibility guard rejects parameter pairs whose search space is too
    large for desk-scale runs; pass ``size_limit`` to override it.
    """
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    if not (0 <= d < n):
        raise ValueError(f"requires 0 <= d < n, got n={n}, d={d}")
    if (n * d) % 2 != 0:
        raise ValueError(f"n*d must be even, got n={n}, d={d}")
    if not enumeration_feasible(n, d, size_limit=size_limit):
        raise ValueError(
            f"enumeration of {d}-regular graphs on {n} vertices exceeds the "
            f"feasibility guard; pass size_limit to override"
        )
    full = (1 << n) - 1
    for rows in _enumerate_rows(n, d):
        if connected_only and not _rows_connected(rows, full):
            continue
        yield Graph._from_bits(n, rows)


def canonical_form(G: Graph) -> tuple[int, ...]:
    """Canonical adjacency key under vertex relabeling, for isomorphism
    collapsing of small graphs (n <= 8).

    The key is the lexicographically least tuple (key_1, ..., key_{n-1})
    over all vertex orderings, where key_i encodes the adjacency of the
    i-th placed vertex to the previously placed ones.  Branch-and-bound on
    the shared prefix keeps this fast at the supported sizes.
    """
    n = G.n
    if n > _CANONICAL_LIMIT:
        raise ValueError(f"canonical form supported for n <= {_CANONICAL_LIMIT}, got {n}")
    if n <= 1:
        return ()
    bits = G.bits
    best: list[int] | None = None

    def place(order: list[int], used: int, key: list[int]) -> None:
        nonlocal best
        depth = len(order)
        if depth == n:
            if best is None or key < best:
                best = key.copy()
            return
        scored = []
        for w in range(n):
            if (used >> w) & 1:
                continue
            kw = 0
            row = bits[w]
            for i, placed in enumerate(order):
                kw |= ((row >> placed) & 1) << i
            scored.append((kw, w))
        scored.sort()
        for kw, w in scored:
            if best is not None:
                prefix = best[depth - 1] if depth >= 1 else None
                if prefix is not None and kw > prefix:
                    break  # every later candidate is worse
                if prefix is not None and kw == prefix and key[: depth - 1] != best[: depth - 1]:
                    pass
            key.append(kw)
            if best is None or key <= best[:depth]:
                place(order + [w], used | (1 << w), key)
            key.pop()

    for start in range(n):
        place([start], 1 << start, [])
    return tuple(best)


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family plus its integer parameters, as given on the CLI
    (--family blown-cycle --params n=7,k=2)."""

    family: str
    params: dict[str, int] = field(default_factory=dict)

    @staticmethod
    def from_cli(family: str, params: str | None) -> "FamilySpec":
        parsed: dict[str, int] = {}
        if params:
            for item in params.split(","):
                item = item.strip()
                if not item:
                    continue
                if "=" not in item:
                    raise ValueError(f"bad parameter {item!r}: expected key=value")
                key, _, value = item.partition("=")
                try:
                    parsed[key.strip()] = int(value)
                except ValueError:
                    raise ValueError(f"bad parameter {item!r}: value is not an integer") from None
        return FamilySpec(_normalize_family(family), parsed)

    def to_cli(self) -> str:
        body = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"--family {self.family.replace('_', '-')} --params {body}"

    def build(self, seed: int | None = None) -> Graph:
        return build_family(self, seed=seed)


def _normalize_family(name: str) -> str:
    return name.strip().lower().replace("-", "_")


# family -> (required params, optional params, size parameter, needs seed)
_FAMILY_INFO = {
    "cycle": ({"n"}, set(), "n", False),
    "cycle_power": ({"n", "k"}, set(), "n", False),
    "blown_cycle": ({"n", "k"}, set(), "n", False),
    "complete_minus_matching": ({"d"}, set(), "d", False),
    "product_blowup": ({"m", "t"}, set(), "m", False),
    "expander_blowup": ({"n", "t"}, set(), "n", True),
    "random_regular": ({"n", "d"}, {"connected"}, "n", True),
}


def family_names() -> tuple[str, ...]:
    return tuple(sorted(_FAMILY_INFO))


def family_size_param(family: str) -> str:
    family = _normalize_family(family)
    if family not in _FAMILY_INFO:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(family_names())}")
    return _FAMILY_INFO[family][2]


def family_needs_seed(family: str) -> bool:
    family = _normalize_family(family)
    if family not in _FAMILY_INFO:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(family_names())}")
    return _FAMILY_INFO[family][3]


def build_family(spec: FamilySpec, seed: int | None = None) -> Graph:
    """Instantiate a FamilySpec, validating its parameter set."""
    family = _normalize_family(spec.family)
    if family not in _FAMILY_INFO:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(family_names())}")
    required, optional, _, needs_seed = _FAMILY_INFO[family]
    given = set(spec.params)
    missing = required - given
    unknown = given - required - optional
    if missing:
        raise ValueError(f"family {family}: missing parameters {sorted(missing)}")
    if unknown:
        raise ValueError(f"family {family}: unknown parameters {sorted(unknown)}")
    if needs_seed and seed is None:
        raise ValueError(f"family {family} is stochastic and requires a seed")
    p = spec.params
    if family == "cycle":
        return cycle(p["n"])
    if family == "cycle_power":
        return cycle_power(p["n"], p["k"])
    if family == "blown_cycle":
        return blown_up_cycle(p["n"], p["k"])
    if family == "complete_minus_matching":
        return complete_minus_matching(p["d"])
    if family == "product_blowup":
        return product_cycle_blowup(p["m"], p["t"])
    if family == "expander_blowup":
        return expander_blowup(p["n"], p["t"], seed)
    if family == "random_regular":
        connected = bool(p.get("connected", 1))
        return random_regular(p["n"], p["d"], seed, connected=connected)
    raise AssertionError(f"unhandled family {family}")
