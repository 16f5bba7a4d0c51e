"""Exhaustive and sampled brute-force oracles over tiny 3-graphs.

Edge subsets of the complete 3-graph are enumerated as bitmasks over the
lexicographically ordered triples, so shard boundaries and witness
tie-breaking (smallest bitmask wins) are reproducible. The default cap
of n <= 6 keeps the full enumeration at 2^20 subsets; the TIGHTCOMP_MAX_N
environment variable or an explicit max_n raises it at the caller's own
risk.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import asdict, dataclass
from itertools import combinations

from .constructions import split_w
from .hypergraph import Hypergraph

DEFAULT_MAX_N = 6


def oracle_cap() -> int:
    env = os.environ.get("TIGHTCOMP_MAX_N")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"TIGHTCOMP_MAX_N must be an integer, got {env!r}") from None
    return DEFAULT_MAX_N


def _check_cap(n: int, max_n: int | None) -> None:
    cap = max_n if max_n is not None else oracle_cap()
    if n > cap:
        raise ValueError(
            f"n={n} exceeds the exhaustive-search cap {cap} "
            "(set TIGHTCOMP_MAX_N or pass max_n to override)"
        )


@dataclass(frozen=True)
class SearchTask:
    n: int
    mode: str
    predicate: str
    threshold: int | None
    delta_min: int | None
    seed: int | None
    shards: int
    shard: int

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class SearchOutcome:
    task: SearchTask
    value: int
    witness_mask: int | None
    checked: int
    elapsed: float

    def witness(self) -> Hypergraph | None:
        if self.witness_mask is None:
            return None
        return hypergraph_from_mask(self.task.n, self.witness_mask)


def _triple_tables(n: int):
    triples = list(combinations(range(n), 3))
    tmasks = [sum(1 << v for v in t) for t in triples]
    pair_tmasks = []
    for a, b in combinations(range(n), 2):
        pm = 0
        for i, t in enumerate(triples):
            if a in t and b in t:
                pm |= 1 << i
        pair_tmasks.append(pm)
    return triples, tmasks, pair_tmasks


def hypergraph_from_mask(n: int, mask: int) -> Hypergraph:
    """The 3-graph whose edges are the set bits over lexicographic triples."""
    triples = list(combinations(range(n), 3))
    edges = [triples[i] for i in range(len(triples)) if mask >> i & 1]
    return Hypergraph(3, n, edges)


def _shard_bounds(space_bits: int, shards: int, shard: int) -> tuple[int, int]:
    """Mask range [start, stop) for one shard; shards fix the high-order bits."""
    if shards < 1 or shards & (shards - 1):
        raise ValueError(f"shards must be a power of two, got {shards}")
    if not 0 <= shard < shards:
        raise ValueError(f"shard index {shard} out of range [0, {shards})")
    low = space_bits - (shards.bit_length() - 1)
    if low < 0:
        raise ValueError(f"{shards} shards exceed the 2^{space_bits} subset space")
    return shard << low, (shard + 1) << low


def _component_vertex_masks(mask: int, tmasks, pair_tmasks, size: int) -> list[int]:
    """Vertex bitmask of each tight component of the edge subset `mask`."""
    parent = list(range(size))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for pm in pair_tmasks:
        sub = mask & pm
        if sub == 0 or sub & (sub - 1) == 0:
            continue
        low = sub & -sub
        root = find(low.bit_length() - 1)
        sub ^= low
        while sub:
            low = sub & -sub
            sub ^= low
            other = find(low.bit_length() - 1)
            if other != root:
                parent[other] = root
    groups: dict[int, int] = {}
    rem = mask
    while rem:
        low = rem & -rem
        rem ^= low
        i = low.bit_length() - 1
        root = find(i)
        groups[root] = groups.get(root, 0) | tmasks[i]
    return list(groups.values())


def search_max_codegree_with_tc_below(
    n: int,
    t: int,
    *,
    shards: int = 1,
    shard: int = 0,
    mode: str = "exhaustive",
    samples: int | None = None,
    seed: int | None = None,
    max_n: int | None = None,
) -> SearchOutcome:
    """One shard of the search for the largest minimum codegree among
    n-vertex 3-graphs whose every tight component misses t or more of
    the target size (tc < t). Returns the best value and the smallest
    witness bitmask attaining it within the shard.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if t < 1:
        raise ValueError(f"threshold t must be >= 1, got {t}")
    if mode not in ("exhaustive", "random"):
        raise ValueError(f"mode must be 'exhaustive' or 'random', got {mode!r}")
    triples, tmasks, pair_tmasks = _triple_tables(n)
    size = len(triples)
    start_time = time.perf_counter()

    if mode == "exhaustive":
        _check_cap(n, max_n)
        start, stop = _shard_bounds(size, shards, shard)
        masks = range(start, stop)
    else:
        if not samples or samples < 1:
            raise ValueError("random mode needs samples >= 1")
        if seed is None:
            seed = random.SystemRandom().randrange(2**63)
        start, stop = _shard_bounds(size, shards, shard)
        rng = random.Random(seed)
        masks = [rng.randrange(start, stop) for _ in range(samples)]

    best = -1
    best_mask = None
    checked = 0
    bit_count = int.bit_count
    for mask in masks:
        checked += 1
        delta = size
        for pm in pair_tmasks:
            c = bit_count(mask & pm)
            if c <= best:
                delta = -1
                break
            if c < delta:
                delta = c
        if delta <= best:
            continue
        comps = _component_vertex_masks(mask, tmasks, pair_tmasks, size)
        tc = max((bit_count(c) for c in comps), default=0)
        if tc < t:
            best = delta
            best_mask = mask

    task = SearchTask(
        n=n,
        mode=mode,
        predicate="tc-below-threshold",
        threshold=t,
        delta_min=None,
        seed=seed,
        shards=shards,
        shard=shard,
    )
    return SearchOutcome(task, best, best_mask, checked, time.perf_counter() - start_time)


def merge_search_outcomes(outcomes: list[SearchOutcome]) -> SearchOutcome:
    """Deterministic merge: maximum value, smallest witness mask on ties."""
    if not outcomes:
        raise ValueError("nothing to merge")
    first = outcomes[0].task
    best = None
    for out in outcomes:
        if (out.task.n, out.task.threshold) != (first.n, first.threshold):
            raise ValueError("cannot merge outcomes of different tasks")
        if out.witness_mask is None:
            continue
        key = (-out.value, out.witness_mask)
        if best is None or key < (-best.value, best.witness_mask):
            best = out
    merged_task = SearchTask(
        n=first.n,
        mode=first.mode,
        predicate=first.predicate,
        threshold=first.threshold,
        delta_min=first.delta_min,
        seed=first.seed,
        shards=first.shards,
        shard=-1,  # merged over all shards
    )
    value = best.value if best else -1
    mask = best.witness_mask if best else None
    return SearchOutcome(
        merged_task,
        value,
        mask,
        sum(o.checked for o in outcomes),
        sum(o.elapsed for o in outcomes),
    )


def max_codegree_with_tc_below(
    n: int, t: int, *, shards: int = 1, max_n: int | None = None
) -> tuple[int, Hypergraph | None]:
    """Largest minimum codegree over all n-vertex 3-graphs with tc < t,
    together with the smallest-bitmask witness attaining it.
    """
    outcomes = [
        search_max_codegree_with_tc_below(
            n, t, shards=shards, shard=s, max_n=max_n
        )
        for s in range(shards)
    ]
    merged = merge_search_outcomes(outcomes)
    return merged.value, merged.witness()


def verify_mycroft(
    n: int, *, shards: int = 1, shard: int | None = None, max_n: int | None = None
) -> dict:
    """Exhaustively confirm that every n-vertex 3-graph with minimum
    codegree at least floor(n/3) has at most two tight components, one of
    them spanning. Reports the smallest counterexample mask if any.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    _check_cap(n, max_n)
    triples, tmasks, pair_tmasks = _triple_tables(n)
    size = len(triples)
    threshold = n // 3
    full = (1 << n) - 1
    shard_list = range(shards) if shard is None else [shard]
    start_time = time.perf_counter()

    checked = 0
    passing_filter = 0
    violations = 0
    counterexample_mask = None
    counter_detail = None
    bit_count = int.bit_count
    for s in shard_list:
        start, stop = _shard_bounds(size, shards, s)
        for mask in range(start, stop):
            checked += 1
            ok = True
            for pm in pair_tmasks:
                if bit_count(mask & pm) < threshold:
                    ok = False
                    break
            if not ok:
                continue
            passing_filter += 1
            comps = _component_vertex_masks(mask, tmasks, pair_tmasks, size)
            spanning = any(c == full for c in comps)
            if len(comps) > 2 or not spanning:
                violations += 1
                if counterexample_mask is None or mask < counterexample_mask:
                    counterexample_mask = mask
                    counter_detail = {
                        "mask": mask,
                        "num_components": len(comps),
                        "has_spanning_component": spanning,
                    }

    report = {
        "n": n,
        "delta_min": threshold,
        "mode": "exhaustive",
        "shards": shards,
        "shard": shard,
        "graphs_enumerated": checked,
        "graphs_meeting_codegree": passing_filter,
        "violations": violations,
        "counterexample": counter_detail,
        "counterexample_text": (
            hypergraph_from_mask(n, counterexample_mask).serialize()
            if counterexample_mask is not None
            else None
        ),
        "passed": violations == 0,
        "elapsed": time.perf_counter() - start_time,
    }
    return report


def verify_connectivity_prop(
    n: int, k: int, samples: int, seed: int | None = None
) -> dict:
    """Sample hypergraphs with every codegree kept above (n-k)/2 by greedy
    random deletion from the complete k-graph and confirm each is
    hypergraph connected; also confirm the split-W example attains
    codegree floor((n-k)/2) while being disconnected.
    """
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    if samples < 1:
        raise ValueError("need at least one sample")
    if seed is None:
        seed = random.SystemRandom().randrange(2**63)
    rng = random.Random(seed)
    all_edges = list(combinations(range(n), k))
    start_time = time.perf_counter()

    failures: list[dict] = []
    first_failure_text = None
    for idx in range(samples):
        cod = {s: n - k + 1 for s in combinations(range(n), k - 1)}
        order = all_edges[:]
        rng.shuffle(order)
        kept = set(all_edges)
        for e in order:
            subs = list(combinations(e, k - 1))
            # deletion must keep every codegree strictly above (n-k)/2
            if all(2 * (cod[s] - 1) > n - k for s in subs):
                kept.remove(e)
                for s in subs:
                    cod[s] -= 1
        h = Hypergraph(k, n, sorted(kept))
        if not h.is_hypergraph_connected():
            failures.append({"sample": idx, "num_edges": h.num_edges})
            if first_failure_text is None:
                first_failure_text = h.serialize()

    split = split_w(n, k)
    split_delta = split.min_codegree()
    split_connected = split.is_hypergraph_connected()
    expected_delta = (n - k) // 2

    report = {
        "n": n,
        "k": k,
        "mode": "random",
        "samples": samples,
        "seed": seed,
        "codegree_kept_above": f"({n}-{k})/2",
        "all_connected": not failures,
        "failures": failures,
        "failure_text": first_failure_text,
        "split_w": {
            "expected_delta": expected_delta,
            "delta": split_delta,
            "connected": split_connected,
        },
        "passed": (
            not failures and split_delta == expected_delta and not split_connected
        ),
        "elapsed": time.perf_counter() - start_time,
    }
    return report
