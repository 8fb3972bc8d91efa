"""
Exhaustive desk-scale sweeps over positive braid words and plane trees.

Work is sharded by a stable hash of each case's canonical text so that ``jobs``
workers produce the same merged report as a single process.
"""

from __future__ import annotations

import dataclasses
import time
import zlib
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from .alexander import braid_poly, burau_poly, skein_oracle, tree_poly
from .braid import (
    PositiveBraidWord,
    closure_components,
    enumerate_words,
    factor_single_occurrence,
    torus_word,
)
from .laurent import U, HalfLaurent, Parity, conway_parity, parity_for_components, summarize
from .pmembership import NotInScope, certify_braid, certify_tree, ito_summand_check, verify
from .surfaces import PlaneTree, seifert_from_tree

MODES = ("theorem1", "skein", "methods", "ito")


@dataclasses.dataclass(frozen=True)
class SweepConfig:
    mode: str = "theorem1"
    max_strands: int = 3
    max_len: int = 6
    max_vertices: int = 0
    jobs: int = 1

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown sweep mode {self.mode!r}; expected one of {MODES}")
        if self.max_strands < 1 or self.max_len < 1 or self.max_vertices < 0 or self.jobs < 1:
            raise ValueError("sweep bounds must be >= 1 and jobs >= 1")


@dataclasses.dataclass(frozen=True)
class Failure:
    input: str
    expected: str
    observed: str


@dataclasses.dataclass
class SweepReport:
    mode: str
    cases_run: int = 0
    failures: list[Failure] = dataclasses.field(default_factory=list)
    stats: Counter = dataclasses.field(default_factory=Counter)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: SweepReport) -> None:
        self.cases_run += other.cases_run
        self.failures.extend(other.failures)
        self.stats.update(other.stats)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "mode": self.mode,
            "cases_run": self.cases_run,
            "failures": [dataclasses.asdict(f) for f in self.failures],
            "stats": dict(sorted(self.stats.items())),
            "wall_time": round(self.wall_time, 3),
        }


# Plane trees

def plane_trees(m: int) -> Iterator[PlaneTree]:
    """All rooted ordered trees with exactly m vertices."""
    if m == 1:
        yield PlaneTree()
        return
    for forest in _forests(m - 1):
        yield PlaneTree(forest)


def _forests(k: int) -> Iterator[tuple[PlaneTree, ...]]:
    if k == 0:
        yield ()
        return
    for first in range(1, k + 1):
        for head in plane_trees(first):
            for tail in _forests(k - first):
                yield (head,) + tail


def unrooted_key(T: PlaneTree) -> str:
    """Canonical string of the underlying abstract tree: min over rootings of the sorted encoding."""
    edges = T.edges()
    m = T.size()
    adj: dict[int, list[int]] = {v: [] for v in range(m)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)

    def enc(v: int, parent: int | None) -> str:
        return "(" + "".join(sorted(enc(c, v) for c in adj[v] if c != parent)) + ")"

    return min(enc(r, None) for r in range(m))


def tree_components(T: PlaneTree) -> int:
    """1 + corank over GF(2) of the intersection form V - V^T."""
    V = seifert_from_tree(T).entries
    m = len(V)
    rows = [sum(((V[i][j] - V[j][i]) & 1) << j for j in range(m)) for i in range(m)]
    rank = 0
    for bit in range(m):
        piv = next((r for r in range(rank, m) if rows[r] >> bit & 1), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(m):
            if r != rank and rows[r] >> bit & 1:
                rows[r] ^= rows[rank]
        rank += 1
    return 1 + m - rank


# Case checks

def _parity_failure(label: str, p: HalfLaurent, components: int) -> Failure | None:
    got = conway_parity(p)
    want = parity_for_components(components)
    if got is Parity.ZERO or got == want:
        return None
    return Failure(label, f"conway parity {want.value} ({components} components)", f"{got.value}: {p}")


def _theorem1_word(w: PositiveBraidWord, rep: SweepReport) -> None:
    label = str(w)
    rep.cases_run += 1
    try:
        cert = certify_braid(w)
    except NotInScope as exc:
        rep.failures.append(Failure(label, "certifies", f"not in scope: {exc}"))
        return
    _check_cert(label, cert, braid_poly(w), closure_components(w), rep)


def _check_cert(label: str, cert, expected_delta: HalfLaurent, components: int, rep: SweepReport) -> None:
    r = verify(cert)
    if not r.valid:
        rep.failures.append(Failure(label, "certificate verifies", f"invalid at {r.failed_node}: {r.failed_checks}"))
        return
    if r.delta != expected_delta:
        rep.failures.append(Failure(label, f"certificate polynomial {expected_delta}", str(r.delta)))
    if not (r.alpha == 1 and r.beta <= -1):
        rep.failures.append(Failure(label, "alpha = 1 and beta <= -1", f"alpha={r.alpha} beta={r.beta}"))
    f = _parity_failure(label, r.delta, components)
    if f:
        rep.failures.append(f)
    for node in r.nodes:
        rep.stats["nodes_" + node.kind] += 1
        if node.star_coefficient is not None:
            rep.stats[f"star_c={node.star_coefficient}"] += 1


def _theorem1_tree_group(trees: list[PlaneTree], rep: SweepReport) -> None:
    polys = set()
    for T in trees:
        label = f"tree {T}"
        rep.cases_run += 1
        p = tree_poly(T)
        polys.add(p)
        _check_cert(label, certify_tree(T), p, tree_components(T), rep)
        if all(len(n.children) <= 1 for _, n, _, _ in T.preorder()):
            m = T.size()
            expected = braid_poly(torus_word(2, m + 1))
            if p != expected:
                rep.failures.append(Failure(label, f"path polynomial T(2,{m + 1}) = {expected}", str(p)))
    if len(polys) > 1:
        rep.failures.append(
            Failure(f"abstract tree {unrooted_key(trees[0])}", "polynomial independent of rooting/order",
                    " | ".join(sorted(map(str, polys))))
        )


def _methods_word(w: PositiveBraidWord, rep: SweepReport) -> None:
    label = str(w)
    rep.cases_run += 1
    a, b, c = braid_poly(w), skein_oracle(w), burau_poly(w)
    if not (a == b == c):
        rep.failures.append(Failure(label, "braid_poly = skein_oracle = burau_poly", f"{a} | {b} | {c}"))
    f = _parity_failure(label, a, closure_components(w))
    if f:
        rep.failures.append(f)
    s = summarize(a)
    b1 = sum(_brick_count(f) for f in factor_single_occurrence(w))
    if not (s.alpha == 1 and s.degree_doubled == b1):
        rep.failures.append(Failure(label, f"fibered: alpha = 1, degree_doubled = {b1}", f"{s}"))


def _brick_count(w: PositiveBraidWord) -> int:
    return len(w.letters) - w.strands + 1


def _skein_word(w: PositiveBraidWord, rep: SweepReport) -> None:
    # Every rotation with an adjacent square is a valid (L+, L0, L-) triple.
    seen = set()
    n = len(w.letters)
    for k in range(n):
        r = w.letters[k:] + w.letters[:k]
        for j in range(n - 1):
            if r[j] != r[j + 1] or (r, j) in seen:
                continue
            seen.add((r, j))
            W = PositiveBraidWord(w.strands, r)
            plus, zero, minus = W, W.without(j), W.without(j, j + 1)
            rep.cases_run += 1
            dp, d0, dm = braid_poly(plus), braid_poly(zero), braid_poly(minus)
            label = f"{W} square at {j + 1}"
            if dp != dm + U * d0:
                rep.failures.append(Failure(label, "D(L+) = D(L-) + (t^(1/2) - t^(-1/2)) D(L0)", f"{dp} vs {dm} + u*({d0})"))
            if dm.is_zero():
                rep.stats["split_l_minus"] += 1
            for word, d in ((plus, dp), (zero, d0), (minus, dm)):
                f = _parity_failure(f"{label} ({word})", d, closure_components(word))
                if f:
                    rep.failures.append(f)


ITO_PRIMES = {
    "T(2,3)": torus_word(2, 3),
    "T(2,5)": torus_word(2, 5),
    "T(3,4)": torus_word(3, 4),
}


def ito_cases(max_summands: int = 3) -> list[list[str]]:
    """All multisets of 1..max_summands prime torus knots, as sorted name lists."""
    names = sorted(ITO_PRIMES)
    out: list[list[str]] = []

    def rec(start: int, acc: list[str]) -> None:
        if acc:
            out.append(list(acc))
        if len(acc) == max_summands:
            return
        for i in range(start, len(names)):
            acc.append(names[i])
            rec(i, acc)
            acc.pop()

    rec(0, [])
    return out


def _ito_case(names: list[str], rep: SweepReport) -> None:
    (row,) = ito_summand_check([[ITO_PRIMES[n] for n in names]])
    rep.cases_run += 1
    label = " # ".join(names)
    if not row.ok:
        rep.failures.append(Failure(label, f"knot with -beta = {row.summands}", f"knot={row.is_knot} beta={row.beta}"))
    f = _parity_failure(label, braid_poly(row.word), closure_components(row.word))
    if f:
        rep.failures.append(f)


# Driver

def _case_keys(cfg: SweepConfig) -> Iterator[tuple[str, object]]:
    if cfg.mode == "ito":
        for names in ito_cases():
            yield " # ".join(names), names
        return
    if cfg.mode == "theorem1" and cfg.max_vertices:
        groups: dict[str, list[PlaneTree]] = {}
        for m in range(1, cfg.max_vertices + 1):
            for T in plane_trees(m):
                groups.setdefault(unrooted_key(T), []).append(T)
        for key, trees in groups.items():
            yield "tree " + key, trees
    # Unknotted closures are outside the certificate generators but still feed the
    # polynomial cross-checks.
    include_unknots = cfg.mode != "theorem1"
    for w in enumerate_words(cfg.max_strands, cfg.max_len, include_unknots=include_unknots):
        yield str(w), w


def _run_shard(cfg: SweepConfig, shard: int) -> SweepReport:
    rep = SweepReport(cfg.mode)
    for key, case in _case_keys(cfg):
        if cfg.jobs > 1 and zlib.crc32(key.encode()) % cfg.jobs != shard:
            continue
        if cfg.mode == "ito":
            _ito_case(case, rep)
        elif isinstance(case, list):
            _theorem1_tree_group(case, rep)
        elif cfg.mode == "theorem1":
            _theorem1_word(case, rep)
        elif cfg.mode == "methods":
            _methods_word(case, rep)
        elif cfg.mode == "skein":
            _skein_word(case, rep)
    return rep


def run_sweep(cfg: SweepConfig, sort: bool = False) -> SweepReport:
    start = time.perf_counter()
    report = SweepReport(cfg.mode)
    if cfg.jobs == 1:
        report.merge(_run_shard(cfg, 0))
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            for part in pool.map(_run_shard, [cfg] * cfg.jobs, range(cfg.jobs)):
                report.merge(part)
    if sort:
        report.failures.sort(key=lambda f: (f.input, f.expected, f.observed))
    report.wall_time = time.perf_counter() - start
    return report
