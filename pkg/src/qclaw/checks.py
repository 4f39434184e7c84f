"""The invariant suites run by ``qclaw check``.

Every suite works on the exchange graph of ``seed.as_initial()`` and returns
a :class:`Report`.  Randomised parts draw from ``random.Random`` seeded with
the explicit ``rng_seed`` (suite-specific offsets keep suites independent of
each other and of the order they run in).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from . import analysis as an
from .classical import ClassicalLaurentFailure, ClassicalSeed, classical_oracle_mutate
from .glsinit import matrix_rank
from .graph import ExchangeGraph, enumerate_graph, relative_expansions
from .qring import NotDivisible
from .qtorus import TorusElement
from .seed import SCHEMA, LaurentFailure, QuantumSeed, SeedError

DEFAULT_RNG_SEED = 20240601
SUITES = ("compatibility", "involution", "laurent", "transport", "dominance", "pbw", "dvector", "bar", "q1")

RANDOM_SEQUENCES = 200
MAX_SEQUENCE_LENGTH = 8
TROPICAL_SAMPLES = 1000
DOMINANCE_PAIRS = 500
DOMINANCE_TRIPLES = 200
DOMINANCE_BOX = 5
PBW_SAMPLES = 1000
PBW_RANGE = 5
MAX_VIOLATIONS_LISTED = 50


@dataclass
class Report:
    check_name: str
    instances_checked: int = 0
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    _dropped: int = 0

    def fail(self, item) -> None:
        if len(self.violations) < MAX_VIOLATIONS_LISTED:
            self.violations.append(item)
        else:
            self._dropped += 1

    @property
    def violation_count(self) -> int:
        return len(self.violations) + self._dropped

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def to_json_obj(self) -> dict:
        out = {
            "check_name": self.check_name,
            "instances_checked": self.instances_checked,
            "violation_count": self.violation_count,
            "violations": [_jsonable(v) for v in self.violations],
            "details": {k: _jsonable(v) for k, v in sorted(self.details.items())},
        }
        return out


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, str, bool, float)) or x is None:
        return x
    return str(x)


class CheckContext:
    """Shared, lazily built data for a check run."""

    def __init__(self, seed: QuantumSeed, rng_seed: int = DEFAULT_RNG_SEED, max_depth: int = 32):
        self.seed = seed.as_initial()
        self.rng_seed = int(rng_seed)
        self.max_depth = max_depth

    def rng(self, offset: int) -> random.Random:
        return random.Random(self.rng_seed * 1009 + offset)

    @cached_property
    def graph(self) -> ExchangeGraph:
        return enumerate_graph(self.seed, self.max_depth)

    @cached_property
    def relative(self) -> list[dict[str, TorusElement]]:
        return relative_expansions(self.graph)

    @cached_property
    def sequences(self) -> list[tuple[int, ...]]:
        ex = self.seed.exchangeable
        if not ex:
            return []
        rng = self.rng(1)
        return [
            tuple(rng.choice(ex) for _ in range(rng.randint(1, MAX_SEQUENCE_LENGTH)))
            for _ in range(RANDOM_SEQUENCES)
        ]

    @cached_property
    def together(self) -> set[tuple[str, str]]:
        """Pairs of variables lying in a common cluster."""
        out = set()
        for i in range(len(self.graph.nodes)):
            keys = self.graph.cluster_keys(i)
            out.update(itertools.product(keys, keys))
        return out


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i - 1 else 0 for j in range(n))


# ---------------------------------------------------------------------------


def check_compatibility(ctx: CheckContext) -> Report:
    r = Report("compatibility")
    g = ctx.graph
    for i, s in enumerate(g.nodes):
        r.instances_checked += 1
        for d in s.compatibility_defects():
            r.fail({"node": i, "kind": "L.Btilde", "entry": d})
        for j in s.weight_relation_defects():
            r.fail({"node": i, "kind": "D.Btilde", "column": j})
        for pair in s.q_commutation_defects():
            r.fail({"node": i, "kind": "q-commutation", "pair": pair})
        for a, b in itertools.product(s.indices, repeat=2):
            lt = s.lambda_tilde(_unit(s.size, a), _unit(s.size, b))
            if lt.denominator != 1 or lt < 0:
                r.fail({"node": i, "kind": "lambda_tilde", "pair": (a, b), "value": str(lt)})
    D = [[w[t] for w in ctx.seed.weights] for t in range(ctx.seed.cartan.rank)]
    D = [row for row in D if any(row)]
    r.details["weight_matrix_rank"] = matrix_rank(D)
    r.details["frozen_count"] = len(ctx.seed.frozen)
    if D and matrix_rank(D) != len(D):
        r.fail({"kind": "rank", "rank": matrix_rank(D), "rows": len(D)})
    return r


def check_involution(ctx: CheckContext) -> Report:
    r = Report("involution")
    for i, s in enumerate(ctx.graph.nodes):
        for k in s.exchangeable:
            r.instances_checked += 1
            if s.mutate(k).mutate(k).to_json() != s.to_json():
                r.fail({"node": i, "k": k})
    for seq in ctx.sequences:
        s = ctx.seed
        for step, k in enumerate(seq):
            r.instances_checked += 1
            if s.mutate(k).mutate(k).to_json() != s.to_json():
                r.fail({"sequence": seq, "step": step, "k": k})
            s = s.mutate(k)
    r.details["random_sequences"] = len(ctx.sequences)
    return r


def check_laurent(ctx: CheckContext) -> Report:
    r = Report("laurent")
    for seq in ctx.sequences:
        s = ctx.seed
        try:
            for k in seq:
                s = s.mutate(k)
                r.instances_checked += 1
                if not s.variable(k).is_nonneg():
                    r.fail({"sequence": seq, "k": k, "kind": "negative coefficient"})
        except (LaurentFailure, NotDivisible) as exc:
            r.fail({"sequence": seq, "kind": "division", "message": str(exc)})
    for key, f in ctx.graph.variables().items():
        r.instances_checked += 1
        if not f.is_nonneg():
            r.fail({"variable": key, "kind": "negative coefficient"})
    for i, rel in enumerate(ctx.relative):
        for key, f in rel.items():
            r.instances_checked += 1
            if not f.is_nonneg():
                r.fail({"node": i, "variable": key, "kind": "negative coefficient (relative)"})
    r.details["graph_nodes"] = len(ctx.graph.nodes)
    r.details["graph_closed"] = ctx.graph.closed
    return r


def _extremes(seed: QuantumSeed, f: TorusElement):
    return an.exp_max(seed, f), an.exp_min(seed, f)


def check_transport(ctx: CheckContext) -> Report:
    """Tropical transport of exp_max/exp_min across every edge, the
    unique-extremum shadow at every node and the inverse pairs of phi."""
    r = Report("transport")
    g, rel = ctx.graph, ctx.relative
    extremum_checks = 0
    for i, s in enumerate(g.nodes):
        for key, f in rel[i].items():
            extremum_checks += 1
            try:
                hi, lo = _extremes(s, f)
            except an.NoUniqueExtremum as exc:
                r.fail({"node": i, "variable": key, "kind": "extremum", "message": str(exc)})
                continue
            if f.coeff(hi) != 1:
                r.fail({"node": i, "variable": key, "kind": "max coefficient", "value": f.coeff(hi).to_text()})
            if (hi == lo) != (len(f) == 1):
                r.fail({"node": i, "variable": key, "kind": "max == min without single term"})
    r.details["extremum_checks"] = extremum_checks
    r.instances_checked += extremum_checks

    edge_checks = 0
    for a, k, _ in g.edges:
        s = g.nodes[a]
        s2 = s.mutate(k)
        move = an.edge_reexpander(s, k)
        items = list(rel[a].items())
        n = s.size
        for i, j in itertools.combinations_with_replacement(s.indices, 2):
            e = tuple(x + y for x, y in zip(_unit(n, i), _unit(n, j)))
            items.append((f"X^{list(e)}", TorusElement.monomial(e)))
        for key, f in items:
            edge_checks += 1
            try:
                f2 = move(f)
                hi, lo = _extremes(s, f)
                hi2, lo2 = _extremes(s2, f2)
            except (an.NoUniqueExtremum, NotDivisible) as exc:
                r.fail({"edge": (a, k), "element": key, "kind": "extremum", "message": str(exc)})
                continue
            if an.tropical_R(s, k, hi) != hi2:
                r.fail({"edge": (a, k), "element": key, "kind": "phi^R", "got": an.tropical_R(s, k, hi), "want": hi2})
            if an.tropical_L(s, k, lo) != lo2:
                r.fail({"edge": (a, k), "element": key, "kind": "phi^L", "got": an.tropical_L(s, k, lo), "want": lo2})
    r.details["edge_checks"] = edge_checks
    r.instances_checked += edge_checks

    rng = ctx.rng(4)
    inverse_checks = 0
    if g.edges:
        mutated = {}
        for _ in range(TROPICAL_SAMPLES):
            a, k, _ = rng.choice(g.edges)
            s = g.nodes[a]
            if (a, k) not in mutated:
                mutated[(a, k)] = s.mutate(k)
            s2 = mutated[(a, k)]
            gv = tuple(rng.randint(-5, 5) for _ in range(s.size))
            inverse_checks += 1
            if an.tropical_R(s2, k, an.tropical_R(s, k, gv)) != gv:
                r.fail({"edge": (a, k), "g": gv, "kind": "phi^R inverse"})
            if an.tropical_L(s2, k, an.tropical_L(s, k, gv)) != gv:
                r.fail({"edge": (a, k), "g": gv, "kind": "phi^L inverse"})
    r.details["inverse_checks"] = inverse_checks
    r.instances_checked += inverse_checks
    return r


def check_dominance(ctx: CheckContext) -> Report:
    """Closed-form dominance test against brute force over ``v in [0,5]^Kex``."""
    r = Report("dominance")
    rng = ctx.rng(5)
    out_of_box = 0
    for i, s in enumerate(ctx.graph.nodes):
        ex = s.exchangeable
        n = s.size
        if not ex:
            continue
        table = {}
        for v in itertools.product(range(DOMINANCE_BOX + 1), repeat=len(ex)):
            bv = tuple(sum(row[c] * v[c] for c in range(len(ex))) for row in s.Btilde)
            table.setdefault(bv, v)

        def brute(b, bp):
            return tuple(x - y for x, y in zip(b, bp)) in table

        for _ in range(DOMINANCE_PAIRS):
            bp = tuple(rng.randint(-3, 3) for _ in range(n))
            v = [rng.randint(-3, DOMINANCE_BOX) for _ in ex]
            diff = [sum(row[c] * v[c] for c in range(len(ex))) for row in s.Btilde]
            if rng.random() < 0.3:
                diff = [d + rng.randint(-1, 1) for d in diff]
            b = tuple(x + d for x, d in zip(bp, diff))
            r.instances_checked += 1
            w = an.dominance_witness(s, b, bp)
            if w is not None and max(w) > DOMINANCE_BOX:
                out_of_box += 1
                continue
            if (w is not None) != brute(b, bp):
                r.fail({"node": i, "b": b, "b'": bp, "closed_form": w, "brute": brute(b, bp)})

        for _ in range(DOMINANCE_TRIPLES):
            r.instances_checked += 1
            x = tuple(rng.randint(-3, 3) for _ in range(n))
            steps = []
            for _ in range(2):
                v = [rng.randint(0, 3) for _ in ex]
                steps.append(tuple(sum(row[c] * v[c] for c in range(len(ex))) for row in s.Btilde))
            y = tuple(p - q for p, q in zip(x, steps[0]))
            z = tuple(p - q for p, q in zip(y, steps[1]))
            leq = lambda p, q: an.dominance_leq(s, p, q)
            if not (leq(x, x) and leq(x, y) and leq(y, z)):
                r.fail({"node": i, "kind": "reflexive/chain", "triple": (x, y, z)})
            if not leq(x, z):
                r.fail({"node": i, "kind": "transitivity", "triple": (x, y, z)})
            if leq(x, y) and leq(y, x) and x != y:
                r.fail({"node": i, "kind": "antisymmetry", "pair": (x, y)})
            # random triple, not constructed to be comparable
            p, q, t = (tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(3))
            if leq(p, q) and leq(q, t) and not leq(p, t):
                r.fail({"node": i, "kind": "transitivity", "triple": (p, q, t)})
            if leq(p, q) and leq(q, p) and p != q:
                r.fail({"node": i, "kind": "antisymmetry", "pair": (p, q)})
    r.details["witness_outside_box"] = out_of_box
    return r


def check_pbw(ctx: CheckContext) -> Report:
    r = Report("pbw")
    word = ctx.seed.word
    if not word:
        r.details["skipped"] = "seed carries no reduced word"
        return r
    rng = ctx.rng(6)
    l = len(word)
    for _ in range(PBW_SAMPLES):
        a = tuple(rng.randint(-PBW_RANGE, PBW_RANGE) for _ in range(l))
        r.instances_checked += 1
        c, shift = an.pbw_from_gvector(word, a)
        if min(c) < 0:
            r.fail({"a": a, "kind": "negative c", "c": c})
        back = an.pbw_gvector(word, c)
        emb = an.embed_frozen(word, shift)
        if tuple(x + y for x, y in zip(back, emb)) != a:
            r.fail({"a": a, "kind": "roundtrip", "c": c, "shift": shift})
        c0 = tuple(rng.randint(0, PBW_RANGE) for _ in range(l))
        r.instances_checked += 1
        c1, shift1 = an.pbw_from_gvector(word, an.pbw_gvector(word, c0))
        if c1 != c0 or any(shift1):
            r.fail({"c": c0, "kind": "reverse roundtrip", "got": c1, "shift": shift1})
    r.details["word"] = list(word)
    return r


def check_dvector(ctx: CheckContext) -> Report:
    r = Report("dvector")
    g, rel = ctx.graph, ctx.relative
    together = ctx.together
    by_member: dict[tuple[str, str], int] = {}
    for i, s in enumerate(g.nodes):
        keys = g.cluster_keys(i)
        own = set(keys)
        for xkey, f in rel[i].items():
            r.instances_checked += 1
            d = an.denominator_vector(s, f)
            for j in s.frozen:
                if d[j - 1]:
                    r.fail({"node": i, "variable": xkey, "kind": "frozen entry", "index": j})
            for k in s.exchangeable:
                mk = keys[k - 1]
                if xkey not in own and d[k - 1] < 0:
                    r.fail({"node": i, "variable": xkey, "kind": "(i) negative", "k": k, "d": d})
                if xkey not in own and (xkey, mk) in together and d[k - 1] != 0:
                    r.fail({"node": i, "variable": xkey, "kind": "(ii) nonzero", "k": k, "d": d})
                if xkey in own and d[k - 1] > 0:
                    r.fail({"node": i, "variable": xkey, "kind": "cluster member positive", "k": k, "d": d})
                prev = by_member.setdefault((xkey, mk), d[k - 1])
                if prev != d[k - 1]:
                    r.fail({"node": i, "variable": xkey, "kind": "seed dependence", "k": k, "values": (prev, d[k - 1])})
        # variables one mutation away
        for k in s.exchangeable:
            r.instances_checked += 1
            f = s.as_initial().mutate(k).variable(k)
            d = an.denominator_vector(s, f)
            for j in s.exchangeable:
                if j != k and d[j - 1] > 0:
                    r.fail({"node": i, "k": k, "kind": "one-step shadow", "j": j, "d": d})
    r.details["variable_member_pairs"] = len(by_member)
    return r


def check_bar(ctx: CheckContext) -> Report:
    r = Report("bar")
    for key, f in ctx.graph.variables().items():
        r.instances_checked += 1
        if not an.bar_invariance_check(f):
            r.fail({"variable": key, "kind": "ambient"})
    for i, rel in enumerate(ctx.relative):
        for key, f in rel.items():
            r.instances_checked += 1
            if not an.bar_invariance_check(f):
                r.fail({"node": i, "variable": key, "kind": "relative"})
    return r


def _classical_key(cs: ClassicalSeed) -> tuple:
    return tuple(sorted(cs.cluster))


def check_q1(ctx: CheckContext) -> Report:
    r = Report("q1")
    g = ctx.graph
    root = g.nodes[0]
    classical = {(): ClassicalSeed.initial(root.exchangeable, root.Btilde)}
    for i, s in enumerate(g.nodes):
        path = g.paths[i]
        try:
            cs = classical.get(path)
            if cs is None:
                cs = classical_oracle_mutate(classical[path[:-1]], path[-1])
                classical[path] = cs
        except ClassicalLaurentFailure as exc:
            r.fail({"node": i, "kind": "classical division", "message": str(exc)})
            continue
        r.instances_checked += 1
        if cs.B != s.Btilde:
            r.fail({"node": i, "kind": "Btilde"})
        for j in s.indices:
            if s.variable(j).specialize_q1() != cs.poly(j):
                r.fail({"node": i, "kind": "variable", "index": j})
    # independent classical BFS
    start = classical[()]
    seen = {_classical_key(start)}
    frontier = [start]
    depth = 0
    while frontier and depth < ctx.max_depth:
        nxt = []
        for cs in frontier:
            for k in cs.exchangeable:
                t = classical_oracle_mutate(cs, k)
                key = _classical_key(t)
                if key not in seen:
                    seen.add(key)
                    nxt.append(t)
        frontier = nxt
        depth += 1
    r.instances_checked += 1
    r.details["quantum_nodes"] = len(g.nodes)
    r.details["classical_nodes"] = len(seen)
    if g.closed and not frontier and len(seen) != len(g.nodes):
        r.fail({"kind": "node count", "quantum": len(g.nodes), "classical": len(seen)})
    return r


CHECKS: dict[str, Callable[[CheckContext], Report]] = {
    "compatibility": check_compatibility,
    "involution": check_involution,
    "laurent": check_laurent,
    "transport": check_transport,
    "dominance": check_dominance,
    "pbw": check_pbw,
    "dvector": check_dvector,
    "bar": check_bar,
    "q1": check_q1,
}


def resolve_suites(selector: str | None) -> list[str]:
    if not selector or selector == "all":
        return list(SUITES)
    names = [s.strip() for s in selector.split(",") if s.strip()]
    for n in names:
        if n not in CHECKS:
            raise SeedError(f"unknown suite {n!r}; choose from {', '.join(SUITES)} or 'all'")
    return names


def run_checks(seed: QuantumSeed, suites: str | list[str] | None = None, rng_seed: int = DEFAULT_RNG_SEED,
               max_depth: int = 32) -> dict:
    names = resolve_suites(suites) if not isinstance(suites, list) else suites
    ctx = CheckContext(seed, rng_seed, max_depth)
    reports = [CHECKS[n](ctx) for n in names]
    return {
        "schema": SCHEMA,
        "kind": "check-report",
        "rng_seed": ctx.rng_seed,
        "suite_count": len(reports),
        "violation_count": sum(rep.violation_count for rep in reports),
        "graph": {"node_count": len(ctx.graph.nodes), "edge_count": len(ctx.graph.undirected_edges()),
                  "closed": ctx.graph.closed},
        "suites": [rep.to_json_obj() for rep in reports],
    }
