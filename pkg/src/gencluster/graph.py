r"""Exchange graphs: canonical seeds, exploration, theorem checkers.

Two seeds are equivalent when a permutation simultaneously relabels the
cluster, the coefficients and both indices of the exchange matrix.  The
canonical form sorts the cluster by its (faithful, deterministic) text
rendering, so equivalent seeds canonicalize identically; the dedup key
additionally carries the exchange degrees and interior coefficients
transported along the sort, which equivalent seeds of one pattern must
agree on.  Every dedup hit re-verifies the full transport on the actual
seeds and raises InconsistentDegreeTransportError if the degree data
fails to follow the permutation (that would be an engine bug, not data).

Exploration is a deterministic breadth-first walk (FIFO queue, ascending
directions) with optional depth and vertex limits; hitting a limit
yields a graph flagged incomplete whose frontier allows resuming.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field

from .errors import InconsistentDegreeTransportError, UnknownVariableError
from .invariants import d_matrix_by_recurrence, d_matrix_from_laurent
from .laurent import LaurentPolynomial
from .seeds import ClusterPattern, MutationPair, Seed, mutate_seed


@dataclass(frozen=True)
class CanonicalSeed:
    """A seed with its cluster sorted into rendering order.

    ``perm`` maps canonical positions to original indices:
    ``seed.x[p] == original.x[perm[p]]``.
    """

    key: str
    seed: Seed
    perm: tuple


def canonical_form(seed: Seed, pair: MutationPair) -> CanonicalSeed:
    """Sort the cluster by serialization; build the dedup key.

    Cluster variables of one seed form a free generating set and are
    pairwise distinct, so the sort has no ties; a tie means the engine
    produced a broken seed and is a hard error.
    """
    n = seed.n
    serials = [str(v) for v in seed.x]
    if len(set(serials)) != n:
        raise RuntimeError("cluster variables of a single seed must be distinct")
    perm = tuple(sorted(range(n), key=lambda i: serials[i]))
    xs = tuple(seed.x[i] for i in perm)
    ys = tuple(seed.y[i] for i in perm)
    rows = tuple(tuple(seed.B.rows[i][j] for j in perm) for i in perm)
    degs = tuple(pair.degrees[i] for i in perm)
    zser = tuple(tuple(str(z) for z in pair.frozen[i]) for i in perm)
    key = "B=%r;x=%r;y=%r;r=%r;z=%r" % (
        rows,
        tuple(serials[i] for i in perm),
        tuple(str(c) for c in ys),
        degs,
        zser,
    )
    # the permuted matrix is skew-symmetrizable iff the original is,
    # so rebuilding the Seed revalidates nothing surprising
    from .seeds import ExchangeMatrix
    return CanonicalSeed(key, Seed(ExchangeMatrix(rows), xs, ys), perm)


def key_hash(key: str) -> str:
    return hashlib.sha256(key.encode()).hexdigest()[:12]


@dataclass(frozen=True)
class VertexRecord:
    index: int
    canon: CanonicalSeed
    reached: Seed          # the seed exactly as produced along `path`
    path: tuple            # 0-based tree address of the representative


@dataclass
class ExchangeGraph:
    pattern: ClusterPattern
    vertices: list = field(default_factory=list)
    key_to_index: dict = field(default_factory=dict)
    edges: dict = field(default_factory=dict)   # (u, v) sorted -> set of directions
    complete: bool = False
    frontier: tuple = ()

    def vertex_count(self):
        return len(self.vertices)

    def edge_count(self):
        return len(self.edges)

    def neighbors(self, i):
        out = set()
        for (u, v) in self.edges:
            if u == i:
                out.add(v)
            elif v == i:
                out.add(u)
        return out

    def degree(self, i):
        return sum(1 for (u, v) in self.edges if u == i or v == i)

    def cluster_serials(self, i):
        return frozenset(str(v) for v in self.vertices[i].reached.x)

    def all_variable_serials(self):
        out = set()
        for rec in self.vertices:
            out.update(str(v) for v in rec.reached.x)
        return out

    def summary(self):
        return "%d vertices, %d edges, %s" % (
            self.vertex_count(), self.edge_count(),
            "complete" if self.complete else "truncated")

    def to_json_dict(self, include_seeds=True):
        verts = []
        for rec in self.vertices:
            entry = {"index": rec.index,
                     "key_hash": key_hash(rec.canon.key),
                     "path": [k + 1 for k in rec.path]}
            if include_seeds:
                entry.update(rec.reached.render())
                entry["d_matrix"] = [list(c) for c in
                                     d_matrix_from_laurent(rec.reached)]
            verts.append(entry)
        edges = [{"u": u, "v": v, "directions": sorted(k + 1 for k in labels)}
                 for (u, v), labels in sorted(self.edges.items())]
        return {"vertex_count": self.vertex_count(),
                "edge_count": self.edge_count(),
                "complete": self.complete,
                "vertices": verts,
                "edges": edges}

    def to_dot(self, label_dmatrix=False):
        lines = ["graph exchange {"]
        for rec in self.vertices:
            label = key_hash(rec.canon.key)
            if label_dmatrix:
                d = d_matrix_from_laurent(rec.reached)
                label += r"\nD=%s" % (str([list(c) for c in d]),)
            lines.append('  v%d [label="%s"];' % (rec.index, label))
        for (u, v), labels in sorted(self.edges.items()):
            text = ",".join(str(k + 1) for k in sorted(labels))
            lines.append('  v%d -- v%d [label="%s"];' % (u, v, text))
        lines.append("}")
        return "\n".join(lines) + "\n"


def _verify_dedup_transport(stored: VertexRecord, new_seed: Seed,
                            new_canon: CanonicalSeed, pair: MutationPair):
    """Re-verify the seed equivalence behind a dedup hit.

    The composed permutation sigma sends index i of the new seed to the
    index of the stored representative holding the same variable; the
    whole seed triple and the degree data must follow it.
    """
    n = new_seed.n
    perm_s = stored.canon.perm
    perm_n = new_canon.perm
    sigma = [0] * n
    for p in range(n):
        sigma[perm_n[p]] = perm_s[p]
    for i in range(n):
        j = sigma[i]
        if new_seed.x[i] != stored.reached.x[j] or new_seed.y[i] != stored.reached.y[j]:
            raise RuntimeError("canonical key collision: seeds are not equivalent")
        if (pair.degrees[i] != pair.degrees[j]
                or pair.frozen[i] != pair.frozen[j]):
            raise InconsistentDegreeTransportError(
                "equivalent seeds fail to transport exchange degrees along %r"
                % (tuple(sigma),))
    for i in range(n):
        for j in range(n):
            if new_seed.B.rows[i][j] != stored.reached.B.rows[sigma[i]][sigma[j]]:
                raise RuntimeError("canonical key collision: matrices differ")


def explore(pattern: ClusterPattern, depth_limit=None, vertex_limit=None,
            resume: ExchangeGraph = None) -> ExchangeGraph:
    """Deterministic BFS over seeds up to equivalence.

    At least one of depth_limit / vertex_limit must be set (unbounded
    search diverges on infinite-type patterns).  Pass ``resume`` to keep
    growing an earlier truncated graph under new limits.
    """
    if depth_limit is None and vertex_limit is None:
        raise ValueError("set depth_limit or vertex_limit (or both)")
    pair = pattern.pair
    n = pattern.n

    g = ExchangeGraph(pattern)
    if resume is not None:
        if resume.pattern != pattern:
            raise ValueError("resume graph belongs to a different pattern")
        g.vertices = list(resume.vertices)
        g.key_to_index = dict(resume.key_to_index)
        g.edges = {e: set(l) for e, l in resume.edges.items()}
        queue = deque(resume.frontier)
    else:
        init = pattern.initial_seed()
        canon = canonical_form(init, pair)
        g.vertices.append(VertexRecord(0, canon, init, ()))
        g.key_to_index[canon.key] = 0
        queue = deque([0])

    truncated = False
    unexpanded = []
    while queue:
        vi = queue.popleft()
        rec = g.vertices[vi]
        if depth_limit is not None and len(rec.path) >= depth_limit:
            truncated = True
            unexpanded.append(vi)
            continue
        for k in range(n):
            new_seed = mutate_seed(rec.reached, pair, k)
            canon = canonical_form(new_seed, pair)
            j = g.key_to_index.get(canon.key)
            if j is None:
                if vertex_limit is not None and len(g.vertices) >= vertex_limit:
                    truncated = True
                    continue
                j = len(g.vertices)
                g.vertices.append(VertexRecord(j, canon, new_seed, rec.path + (k,)))
                g.key_to_index[canon.key] = j
                queue.append(j)
            else:
                _verify_dedup_transport(g.vertices[j], new_seed, canon, pair)
            e = (vi, j) if vi <= j else (j, vi)
            g.edges.setdefault(e, set()).add(k)
    g.edges = {e: frozenset(l) for e, l in g.edges.items()}
    g.complete = not truncated
    g.frontier = tuple(unexpanded)
    return g


# ---- verification reports ----


@dataclass
class VerificationReport:
    name: str
    passed: bool
    complete: bool
    checked: int
    violations: list
    details: dict = field(default_factory=dict)

    @property
    def status(self):
        if not self.passed:
            return "fail"
        return "pass" if self.complete else "no-counterexample-within-horizon"

    def to_json_dict(self):
        return {"check": self.name,
                "status": self.status,
                "complete": self.complete,
                "checked": self.checked,
                "violations": self.violations,
                "details": self.details}


def _serials(graph, J):
    out = []
    for item in J:
        out.append(str(item) if isinstance(item, LaurentPolynomial) else str(item))
    known = graph.all_variable_serials()
    for s in out:
        if s not in known:
            raise UnknownVariableError(s)
    return frozenset(out)


def verify_connected_subgraph(graph: ExchangeGraph, J) -> VerificationReport:
    """The vertices whose clusters contain every member of J must induce
    a connected subgraph (membership by canonical serialization)."""
    want = _serials(graph, J)
    hits = [i for i in range(graph.vertex_count())
            if want <= graph.cluster_serials(i)]
    connected = True
    if len(hits) > 1:
        hitset = set(hits)
        seen = {hits[0]}
        stack = [hits[0]]
        while stack:
            u = stack.pop()
            for (a, b) in graph.edges:
                w = None
                if a == u and b in hitset:
                    w = b
                elif b == u and a in hitset:
                    w = a
                if w is not None and w not in seen:
                    seen.add(w)
                    stack.append(w)
        connected = len(seen) == len(hits)
    violations = [] if connected else [{"subset": sorted(want),
                                        "vertices": hits}]
    return VerificationReport("connected-subgraph", connected, graph.complete,
                              1, violations,
                              {"subset": sorted(want), "vertices": hits})


def verify_all_connected_subgraphs(graph: ExchangeGraph) -> VerificationReport:
    """Run the connectivity check for every subset of every cluster."""
    subsets = set()
    for i in range(graph.vertex_count()):
        cluster = sorted(graph.cluster_serials(i))
        n = len(cluster)
        for mask in range(1 << n):
            subsets.add(frozenset(cluster[j] for j in range(n) if mask >> j & 1))
    violations = []
    for J in sorted(subsets, key=lambda s: (len(s), sorted(s))):
        rep = verify_connected_subgraph(graph, J)
        if not rep.passed:
            violations.extend(rep.violations)
    return VerificationReport("connected-subgraph", not violations,
                              graph.complete, len(subsets), violations,
                              {"subsets_checked": len(subsets)})


def compatibility(graph: ExchangeGraph, a, b) -> bool:
    """True when the two variables occur together in some cluster."""
    want = _serials(graph, [a, b])
    return any(want <= graph.cluster_serials(i)
               for i in range(graph.vertex_count()))


def _value_table(graph: ExchangeGraph):
    ids = {}
    var_at = []
    for rec in graph.vertices:
        row = []
        for xv in rec.reached.x:
            s = str(xv)
            row.append(ids.setdefault(s, len(ids)))
        var_at.append(tuple(row))
    return ids, var_at


def _compatible_pairs(var_at):
    comp = set()
    for row in var_at:
        for a in row:
            for b in row:
                comp.add((a, b))
    return comp


def verify_dvector_trichotomy(graph: ExchangeGraph) -> VerificationReport:
    """Across every choice of base cluster, the denominator-vector entry
    of a variable against a base variable depends only on that pair of
    variables and is -1, 0 or positive according to equality,
    compatibility or incompatibility.

    Requires a completed exploration (compatibility must be exact).
    D-vectors against alternative bases come from the integer recurrence
    run from the base vertex along representative tree paths; the
    recurrence agrees with the Laurent expansions by the cross-oracle
    checks, and the root case is re-checked against them here.
    """
    if not graph.complete:
        raise ValueError("trichotomy check needs a completed exploration")
    ids, var_at = _value_table(graph)
    comp = _compatible_pairs(var_at)
    degrees = graph.pattern.pair.degrees
    nv = graph.vertex_count()
    n = graph.pattern.n

    table = {}
    violations = []
    checked = 0
    for w in range(nv):
        wrec = graph.vertices[w]
        back = tuple(reversed(wrec.path))
        for v in range(nv):
            vrec = graph.vertices[v]
            walk = back + vrec.path
            D = d_matrix_by_recurrence(wrec.reached.B, walk, degrees)
            if w == 0:
                if D != d_matrix_from_laurent(vrec.reached):
                    violations.append({"kind": "recurrence-vs-laurent",
                                       "vertex": v})
            for i in range(n):
                for k in range(n):
                    pair_key = (var_at[v][i], var_at[w][k])
                    d = D[i][k]
                    if pair_key in table:
                        if table[pair_key] != d:
                            violations.append({"kind": "not-well-defined",
                                               "pair": pair_key,
                                               "values": [table[pair_key], d],
                                               "base_vertex": w,
                                               "vertex": v})
                    else:
                        table[pair_key] = d
                    checked += 1
    for (a, b), d in sorted(table.items()):
        if a == b:
            ok = d == -1
        elif (a, b) in comp:
            ok = d == 0
        else:
            ok = d > 0
        if not ok:
            violations.append({"kind": "trichotomy", "pair": (a, b), "d": d,
                               "compatible": (a, b) in comp})
    return VerificationReport(
        "d-trichotomy", not violations, True, checked, violations,
        {"variables": len(ids), "pairs": len(table)})


def verify_compatible_sets(graph: ExchangeGraph) -> VerificationReport:
    """Brute-force: every pairwise compatible set sits inside a cluster,
    and the maximal compatible sets are exactly the clusters."""
    if not graph.complete:
        raise ValueError("compatible-set check needs a completed exploration")
    ids, var_at = _value_table(graph)
    nval = len(ids)
    if nval > 20:
        raise ValueError("too many variables for subset enumeration (%d)" % nval)
    comp = _compatible_pairs(var_at)
    clusters = {frozenset(row) for row in var_at}

    violations = []
    compatible_count = 0
    maximal = set()
    for mask in range(1 << nval):
        members = [a for a in range(nval) if mask >> a & 1]
        if any((members[p], members[q]) not in comp
               for p in range(len(members)) for q in range(p + 1, len(members))):
            continue
        compatible_count += 1
        sub = frozenset(members)
        if not any(sub <= c for c in clusters):
            violations.append({"kind": "not-in-a-cluster", "set": sorted(sub)})
        is_max = all(any((a, b) not in comp for a in members)
                     for b in range(nval) if b not in sub)
        if is_max and members:
            maximal.add(sub)
            if sub not in clusters:
                violations.append({"kind": "maximal-not-a-cluster",
                                   "set": sorted(sub)})
    for c in clusters:
        if c not in maximal:
            violations.append({"kind": "cluster-not-maximal", "set": sorted(c)})
    return VerificationReport(
        "compatible-sets", not violations, True, 1 << nval, violations,
        {"variables": nval, "compatible_sets": compatible_count,
         "maximal_sets": len(maximal), "clusters": len(clusters)})


def verify_initial_cluster_recovery(graph: ExchangeGraph) -> VerificationReport:
    """Whenever a seed's D-matrix is a column permutation of -I, its
    cluster must be the correspondingly permuted initial cluster."""
    init = graph.pattern.initial_seed()
    n = graph.pattern.n
    violations = []
    hits = 0
    for rec in graph.vertices:
        D = d_matrix_from_laurent(rec.reached)
        perm = []
        for col in D:
            neg = [i for i, v in enumerate(col) if v == -1]
            if len(neg) != 1 or any(v != 0 for i, v in enumerate(col) if i != neg[0]):
                perm = None
                break
            perm.append(neg[0])
        if perm is None or sorted(perm) != list(range(n)):
            continue
        hits += 1
        for i in range(n):
            if rec.reached.x[i] != init.x[perm[i]]:
                violations.append({"vertex": rec.index, "position": i,
                                   "expected": str(init.x[perm[i]]),
                                   "got": str(rec.reached.x[i])})
    return VerificationReport(
        "initial-cluster-recovery", not violations, graph.complete,
        hits, violations, {"matching_vertices": hits})
