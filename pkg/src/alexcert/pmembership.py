"""
Certificates that a link is built from the positive Hopf link by Hopf plumbings
whose cut surface satisfies the coefficient condition, plus connected sums.

Certificates hold only combinatorial data (braid words, plane trees, positions);
:func:`verify` recomputes every polynomial from scratch.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Union

from . import laurent
from .alexander import braid_poly, tree_poly
from .braid import (
    PositiveBraidWord,
    closure_components,
    connected_sum_word,
    factor_single_occurrence,
    find_square_rewrite,
    missing_generators,
    parse_word,
)
from .laurent import ONE, U, HalfLaurent, coeff, summarize
from .surfaces import PlaneTree, betti_data, parse_tree


class NotInScope(ValueError):
    """The input is split, trivial or otherwise outside what the generators handle."""


class CertificateFormatError(ValueError):
    """Malformed certificate JSON."""


@dataclasses.dataclass(frozen=True)
class HopfBase:
    kind = "hopf_base"


@dataclasses.dataclass(frozen=True)
class BraidStep:
    word: PositiveBraidWord
    square_at: int  # 1-based; letters square_at and square_at+1 are equal
    child: Certificate
    l_minus_b1: int
    kind = "braid_step"

    @property
    def l_zero_word(self) -> PositiveBraidWord:
        return self.word.without(self.square_at - 1)

    @property
    def l_minus_word(self) -> PositiveBraidWord:
        return self.word.without(self.square_at - 1, self.square_at)


@dataclasses.dataclass(frozen=True)
class TreeStep:
    tree: PlaneTree
    leaf: int  # preorder index of the removed leaf
    child: Certificate
    forest: tuple[PlaneTree, ...]
    l_minus_b1: int
    kind = "tree_step"


@dataclasses.dataclass(frozen=True)
class SumStep:
    left: Certificate
    right: Certificate
    kind = "sum_step"


Certificate = Union[HopfBase, BraidStep, TreeStep, SumStep]


def condition_star(delta_minus: HalfLaurent, b1_minus: int) -> tuple[bool, int]:
    """Coefficient of t^(b1/2) in the cut link's polynomial, and whether it is <= 1."""
    if b1_minus < 0:
        raise ValueError("b1_minus must be non-negative")
    c = coeff(delta_minus, b1_minus)
    return c <= 1, c


# Generators

def certify_braid(w: PositiveBraidWord) -> Certificate:
    if w.strands < 2:
        raise NotInScope(f"{w}: closure of a 1-strand braid is the unknot")
    if missing_generators(w):
        raise NotInScope(f"{w}: missing generators {sorted(missing_generators(w))}, closure is split")
    factors = factor_single_occurrence(w)
    if not factors:
        raise NotInScope(f"{w}: closure is the unknot")
    certs = [_certify_prime(f) for f in factors]
    cert = certs[0]
    for c in certs[1:]:
        cert = SumStep(cert, c)
    return cert


def _certify_prime(w: PositiveBraidWord) -> Certificate:
    # Every generator occurs at least twice here.
    b1, _ = betti_data(w)
    if b1 == 1:
        return HopfBase()
    W = find_square_rewrite(w)
    j = W.square_position()
    l_minus = W.without(j, j + 1)
    return BraidStep(
        word=W,
        square_at=j + 1,
        child=certify_braid(W.without(j)),
        l_minus_b1=betti_data(l_minus)[0],
    )


def tree_minus(T: PlaneTree, removed: set[int]) -> list[PlaneTree]:
    """Components of T with the given preorder vertices deleted, in preorder of their roots."""
    nodes = list(T.preorder())
    children: dict[int, list[int]] = {i: [] for i, *_ in nodes}
    for i, _, p, _ in nodes:
        if p is not None:
            children[p].append(i)

    def build(v: int) -> PlaneTree:
        return PlaneTree(tuple(build(c) for c in children[v] if c not in removed))

    roots = [i for i, _, p, _ in nodes if i not in removed and (p is None or p in removed)]
    return [build(r) for r in roots]


def pick_leaf(T: PlaneTree) -> tuple[int, int]:
    """Deepest, then leftmost, leaf (preorder index) and its parent."""
    best = None
    for i, node, p, depth in T.preorder():
        if p is not None and not node.children and (best is None or depth > best[2]):
            best = (i, p, depth)
    if best is None:
        raise ValueError("a single vertex has no leaf with a parent")
    return best[0], best[1]


def certify_tree(T: PlaneTree) -> Certificate:
    if T.size() == 1:
        return HopfBase()
    v, w = pick_leaf(T)
    (rest,) = tree_minus(T, {v})
    forest = tuple(tree_minus(T, {v, w}))
    return TreeStep(
        tree=T,
        leaf=v,
        child=certify_tree(rest),
        forest=forest,
        l_minus_b1=sum(f.size() for f in forest),
    )


def certify_sum(a: Certificate, b: Certificate) -> Certificate:
    return SumStep(a, b)


# Verification

@dataclasses.dataclass
class NodeRecord:
    path: str
    kind: str
    delta: HalfLaurent
    star_coefficient: int | None = None
    b1_minus: int | None = None
    checks: dict[str, bool] = dataclasses.field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        s = summarize(self.delta)
        return {
            "path": self.path,
            "kind": self.kind,
            "delta": str(self.delta),
            "degree_doubled": s.degree_doubled,
            "alpha": s.alpha,
            "beta": s.beta,
            "star_coefficient": self.star_coefficient,
            "b1_minus": self.b1_minus,
            "checks": self.checks,
        }


@dataclasses.dataclass
class VerificationReport:
    valid: bool
    delta: HalfLaurent
    degree_doubled: int
    alpha: int
    beta: int
    nodes: list[NodeRecord]
    failed_node: str | None = None
    failed_checks: list[str] = dataclasses.field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "valid": self.valid,
            "delta": str(self.delta),
            "delta_json": laurent.to_json(self.delta),
            "degree_doubled": self.degree_doubled,
            "d": summarize(self.delta).degree,
            "alpha": self.alpha,
            "beta": self.beta,
            "failed_node": self.failed_node,
            "failed_checks": self.failed_checks,
            "nodes": [n.to_dict() for n in self.nodes],
        }


def _step_checks(rec: NodeRecord, d_plus: HalfLaurent, d_zero: HalfLaurent, d_minus: HalfLaurent) -> None:
    """Skein identity, condition (*) and the coefficient bookkeeping of one plumbing step."""
    sp, s0 = summarize(d_plus), summarize(d_zero)
    holds, c = condition_star(d_minus, rec.b1_minus)
    rec.star_coefficient = c
    ch = rec.checks
    ch["skein_identity"] = d_plus == d_minus + U * d_zero
    ch["condition_star"] = holds
    ch["nonzero"] = not sp.is_zero and not s0.is_zero
    ch["degree_step"] = sp.degree_doubled == s0.degree_doubled + 1
    ch["minus_degree_bound"] = d_minus.is_zero() or d_minus.top() <= sp.degree_doubled - 2
    ch["alpha_relation"] = sp.alpha == s0.alpha
    ch["beta_relation"] = sp.beta == c - s0.alpha + s0.beta


def _verify(cert: Certificate, path: str, out: list[NodeRecord]) -> HalfLaurent:
    if isinstance(cert, HopfBase):
        rec = NodeRecord(path, cert.kind, U)
        out.append(rec)
        return U

    if isinstance(cert, SumStep):
        a = _verify(cert.left, path + ".left", out)
        b = _verify(cert.right, path + ".right", out)
        delta = a * b
        out.append(NodeRecord(path, cert.kind, delta))
        return delta

    if isinstance(cert, BraidStep):
        d_zero = _verify(cert.child, path + ".child", out)
        W = cert.word
        j = cert.square_at - 1
        rec = NodeRecord(path, cert.kind, ONE, b1_minus=cert.l_minus_b1)
        ch = rec.checks
        ch["full_support"] = W.strands >= 2 and not missing_generators(W)
        ch["square"] = 0 <= j < len(W) - 1 and W.letters[j] == W.letters[j + 1]
        if not ch["square"]:
            rec.delta = braid_poly(W) if ch["full_support"] else ONE
            out.append(rec)
            return rec.delta
        l_minus = cert.l_minus_word
        ch["b1_minus"] = cert.l_minus_b1 == betti_data(l_minus)[0]
        d_plus = braid_poly(W)
        rec.delta = d_plus
        _step_checks(rec, d_plus, d_zero, braid_poly(l_minus))
        out.append(rec)
        return d_plus

    if isinstance(cert, TreeStep):
        d_zero = _verify(cert.child, path + ".child", out)
        T = cert.tree
        rec = NodeRecord(path, cert.kind, ONE, b1_minus=cert.l_minus_b1)
        ch = rec.checks
        nodes = {i: (node, p) for i, node, p, _ in T.preorder()}
        ch["leaf"] = cert.leaf in nodes and nodes[cert.leaf][1] is not None and not nodes[cert.leaf][0].children
        d_plus = tree_poly(T)
        rec.delta = d_plus
        if not ch["leaf"]:
            out.append(rec)
            return d_plus
        parent = nodes[cert.leaf][1]
        ch["forest"] = list(cert.forest) == tree_minus(T, {cert.leaf, parent})
        ch["b1_minus"] = cert.l_minus_b1 == sum(f.size() for f in cert.forest)
        d_minus = ONE
        for f in cert.forest:
            d_minus = d_minus * tree_poly(f)
        _step_checks(rec, d_plus, d_zero, d_minus)
        out.append(rec)
        return d_plus

    raise TypeError(f"not a certificate: {cert!r}")


def verify(cert: Certificate) -> VerificationReport:
    """Total: a failed check yields an invalid report naming the first offending node."""
    nodes: list[NodeRecord] = []
    delta = _verify(cert, "root", nodes)
    s = summarize(delta)
    failed = next((n for n in nodes if not n.ok), None)
    valid = failed is None and not s.is_zero and s.alpha == 1 and s.beta <= -1
    report = VerificationReport(valid, delta, s.degree_doubled, s.alpha, s.beta, nodes)
    if failed is not None:
        report.failed_node = failed.path
        report.failed_checks = [k for k, v in failed.checks.items() if not v]
    elif not valid:
        report.failed_node = "root"
        report.failed_checks = ["root_summary"]
    return report


# JSON

def to_dict(cert: Certificate) -> dict:
    if isinstance(cert, HopfBase):
        return {"kind": cert.kind}
    if isinstance(cert, BraidStep):
        return {
            "kind": cert.kind,
            "word": str(cert.word),
            "square_at": cert.square_at,
            "l_minus_b1": cert.l_minus_b1,
            "child": to_dict(cert.child),
        }
    if isinstance(cert, TreeStep):
        return {
            "kind": cert.kind,
            "tree": str(cert.tree),
            "leaf": cert.leaf,
            "forest": [str(f) for f in cert.forest],
            "l_minus_b1": cert.l_minus_b1,
            "child": to_dict(cert.child),
        }
    if isinstance(cert, SumStep):
        return {"kind": cert.kind, "left": to_dict(cert.left), "right": to_dict(cert.right)}
    raise TypeError(f"not a certificate: {cert!r}")


def _field(d: dict, key: str, typ, where: str):
    if key not in d:
        raise CertificateFormatError(f"{where}: missing field {key!r}")
    v = d[key]
    if typ is int and (not isinstance(v, int) or isinstance(v, bool)):
        raise CertificateFormatError(f"{where}: field {key!r} must be an integer")
    if typ is not int and not isinstance(v, typ):
        raise CertificateFormatError(f"{where}: field {key!r} must be {typ.__name__}")
    return v


def from_dict(d, where: str = "root") -> Certificate:
    if not isinstance(d, dict):
        raise CertificateFormatError(f"{where}: expected an object")
    kind = d.get("kind")
    try:
        if kind == "hopf_base":
            return HopfBase()
        if kind == "braid_step":
            return BraidStep(
                word=parse_word(_field(d, "word", str, where)),
                square_at=_field(d, "square_at", int, where),
                l_minus_b1=_field(d, "l_minus_b1", int, where),
                child=from_dict(_field(d, "child", dict, where), where + ".child"),
            )
        if kind == "tree_step":
            return TreeStep(
                tree=parse_tree(_field(d, "tree", str, where)),
                leaf=_field(d, "leaf", int, where),
                forest=tuple(parse_tree(s) for s in _field(d, "forest", list, where)),
                l_minus_b1=_field(d, "l_minus_b1", int, where),
                child=from_dict(_field(d, "child", dict, where), where + ".child"),
            )
        if kind == "sum_step":
            return SumStep(
                from_dict(_field(d, "left", dict, where), where + ".left"),
                from_dict(_field(d, "right", dict, where), where + ".right"),
            )
    except CertificateFormatError:
        raise
    except (ValueError, TypeError) as exc:
        raise CertificateFormatError(f"{where}: {exc}") from exc
    raise CertificateFormatError(f"{where}: unknown kind {kind!r}")


def dumps(cert: Certificate) -> str:
    return json.dumps({"schema": 1, "certificate": to_dict(cert)}, indent=2)


def loads(text: str) -> Certificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"malformed JSON: {exc}") from exc
    if isinstance(data, dict) and "certificate" in data:
        data = data["certificate"]
    return from_dict(data)


# Ito's count on connected sums of prime positive braid knots

@dataclasses.dataclass
class ItoRow:
    word: PositiveBraidWord
    summands: int
    beta: int
    is_knot: bool

    @property
    def ok(self) -> bool:
        return self.is_knot and -self.beta == self.summands


def ito_summand_check(summand_lists: list[list[PositiveBraidWord]]) -> list[ItoRow]:
    """
    Each entry lists the prime knot words of one connected sum; the sum is formed with
    :func:`connected_sum_word` and -beta is compared with the number of summands.
    """
    rows = []
    for summands in summand_lists:
        w = summands[0]
        for s in summands[1:]:
            w = connected_sum_word(w, s)
        beta = summarize(braid_poly(w)).beta
        rows.append(ItoRow(w, len(summands), beta, closure_components(w) == 1))
    return rows
