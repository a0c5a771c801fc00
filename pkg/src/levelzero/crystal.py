"""Level-zero crystals of type A: fundamental crystals B(varpi_k) with their
z-grading, tensor products by the signature rule, the regular-crystal Weyl
group action, extremality, component enumeration and the census of the
set {s(z) b : b in the component of u~_lambda}."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import datum as make_datum
from .qsymbolic import loop_variables, partition_tuples, schur_product

# Orientation of the tensor rule. "kashiwara": f~ acts on the left factor when
# phi(b1) > eps(b2); this is the rule compatible with the coproduct
# Delta e = e (x) t^-1 + 1 (x) e, Delta f = f (x) 1 + t (x) f. The opposite
# orientation is kept so the module-level oracle can show it is wrong.
TENSOR_ORIENTATION = "kashiwara"


class MalformedCrystal(RuntimeError):
    pass


class Crystal:
    """Interface: e(i, b), f(i, b) return a node or None."""

    index_set: tuple

    def e(self, i, b):
        raise NotImplementedError

    def f(self, i, b):
        raise NotImplementedError

    def eps(self, i, b):
        n = 0
        while True:
            b = self.e(i, b)
            if b is None:
                return n
            n += 1

    def phi(self, i, b):
        n = 0
        while True:
            b = self.f(i, b)
            if b is None:
                return n
            n += 1

    def hw(self, i, b):
        """<h_i, wt b>."""
        raise NotImplementedError

    def weight_key(self, b):
        raise NotImplementedError

    def e_max(self, i, b):
        while True:
            nxt = self.e(i, b)
            if nxt is None:
                return b
            b = nxt

    def f_max(self, i, b):
        while True:
            nxt = self.f(i, b)
            if nxt is None:
                return b
            b = nxt


class LevelZeroFundamental(Crystal):
    """B(varpi_k) for sl_n^: nodes (S, m), S a k-subset of {1..n}, m in Z.

    f~_j (j >= 1) replaces j by j+1; f~_0 replaces n by 1 and lowers m by one,
    matching the f_0 table of the desk module. z: (S, m) -> (S, m+1).
    """

    def __init__(self, n: int, k: int):
        if not 1 <= k <= n - 1:
            raise ValueError("k must lie in 1..n-1")
        self.n, self.k = n, k
        self.index_set = tuple(range(n))
        self.datum = make_datum("A", n - 1)

    def __repr__(self):
        return f"B(varpi_{self.k}) for A_{self.n - 1}^(1)"

    def seed(self, m=0):
        return (tuple(range(1, self.k + 1)), m)

    def f(self, i, b):
        S, m = b
        n = self.n
        if i == 0:
            if n in S and 1 not in S:
                return tuple(sorted((set(S) - {n}) | {1})), m - 1
            return None
        if i in S and i + 1 not in S:
            return tuple(sorted((set(S) - {i}) | {i + 1})), m
        return None

    def e(self, i, b):
        S, m = b
        n = self.n
        if i == 0:
            if 1 in S and n not in S:
                return tuple(sorted((set(S) - {1}) | {n})), m + 1
            return None
        if i + 1 in S and i not in S:
            return tuple(sorted((set(S) - {i + 1}) | {i})), m
        return None

    def eps(self, i, b):
        return 0 if self.e(i, b) is None else 1

    def phi(self, i, b):
        return 0 if self.f(i, b) is None else 1

    def hw(self, i, b):
        S = b[0]
        if i == 0:
            return (self.n in S) - (1 in S)
        return (i in S) - (i + 1 in S)

    def weight_key(self, b):
        return tuple(self.hw(i, b) for i in range(1, self.n)), b[1]

    def z(self, b, power=1):
        return b[0], b[1] + power

    def nodes(self, band):
        for S in itertools.combinations(range(1, self.n + 1), self.k):
            for m in range(-band, band + 1):
                yield (S, m)


class TensorProductCrystal(Crystal):
    """B_1 (x) ... (x) B_r with the signature rule; nodes are tuples."""

    def __init__(self, factors, orientation=None):
        self.factors = tuple(factors)
        if not self.factors:
            raise ValueError("need at least one factor")
        self.index_set = self.factors[0].index_set
        self.n = getattr(self.factors[0], "n", None)
        self.orientation = orientation or TENSOR_ORIENTATION
        if self.orientation not in ("kashiwara", "opposite"):
            raise ValueError(f"unknown orientation {self.orientation!r}")

    def __repr__(self):
        return " (x) ".join(map(repr, self.factors))

    def _reduced_signature(self, i, b):
        positions = range(len(b)) if self.orientation == "kashiwara" else reversed(range(len(b)))
        stack = []
        for k in positions:
            c, node = self.factors[k], b[k]
            for _ in range(c.eps(i, node)):
                if stack and stack[-1][0] == "+":
                    stack.pop()
                else:
                    stack.append(("-", k))
            for _ in range(c.phi(i, node)):
                stack.append(("+", k))
        plus = [k for s, k in stack if s == "+"]
        minus = [k for s, k in stack if s == "-"]
        return plus, minus

    def f(self, i, b):
        plus, _ = self._reduced_signature(i, b)
        if not plus:
            return None
        k = plus[0]
        new = self.factors[k].f(i, b[k])
        return b[:k] + (new,) + b[k + 1:]

    def e(self, i, b):
        _, minus = self._reduced_signature(i, b)
        if not minus:
            return None
        k = minus[-1]
        new = self.factors[k].e(i, b[k])
        return b[:k] + (new,) + b[k + 1:]

    def eps(self, i, b):
        return len(self._reduced_signature(i, b)[1])

    def phi(self, i, b):
        return len(self._reduced_signature(i, b)[0])

    def hw(self, i, b):
        return sum(c.hw(i, x) for c, x in zip(self.factors, b))

    def weight_key(self, b):
        keys = [c.weight_key(x) for c, x in zip(self.factors, b)]
        classical = tuple(sum(col) for col in zip(*(k[0] for k in keys)))
        return classical, sum(k[1] for k in keys)

    def z(self, b, position, power=1):
        return b[:position] + (self.factors[position].z(b[position], power),) + b[position + 1:]

    def seed(self):
        return tuple(c.seed() for c in self.factors)


def level_zero_tensor(n: int, shape) -> TensorProductCrystal:
    """B~(lambda) = (x)_i B(varpi_i)^{(x) m_i}, factors in increasing i."""
    factors = []
    for i in sorted(shape):
        factors += [LevelZeroFundamental(n, i)] * shape[i]
    return TensorProductCrystal(factors)


def tensor_f(crystal: TensorProductCrystal, i, b):
    return crystal.f(i, b)


def tensor_e(crystal: TensorProductCrystal, i, b):
    return crystal.e(i, b)


# ---------------------------------------------------------------- Weyl action


def reflect_node(crystal: Crystal, i, b):
    """S_i b: f~_i^{<h_i,wt>} b if <h_i,wt> >= 0, else e~_i^{-<h_i,wt>} b."""
    n = crystal.hw(i, b)
    op = crystal.f if n >= 0 else crystal.e
    for _ in range(abs(n)):
        b = op(i, b)
        if b is None:
            raise MalformedCrystal(f"{'f' if n >= 0 else 'e'}~_{i}-string too short for S_{i}")
    return b


def weyl_action(crystal: Crystal, word, b):
    """S_w b for w = s_{word[0]} ... s_{word[-1]} (rightmost acts first)."""
    for i in reversed(tuple(word)):
        b = reflect_node(crystal, i, b)
    return b


def is_extremal(crystal: Crystal, b, radius: int = 4, in_band=None):
    """Check e~_i S_w b = 0 when <h_i, w wt> >= 0 and f~_i S_w b = 0 when <= 0
    for all w of length <= radius. Returns (verdict, witness) where a witness is
    (word, i) for a failure, or None."""
    seen = {b: ()}
    frontier = [b]
    for depth in range(radius + 1):
        nxt = []
        for c in frontier:
            word = seen[c]
            for i in crystal.index_set:
                h = crystal.hw(i, c)
                if h >= 0 and crystal.e(i, c) is not None:
                    return False, (word, i)
                if h <= 0 and crystal.f(i, c) is not None:
                    return False, (word, i)
            if depth == radius:
                continue
            for i in crystal.index_set:
                try:
                    d = reflect_node(crystal, i, c)
                except MalformedCrystal:
                    return False, (word, i)
                if in_band is not None and not in_band(d):
                    continue
                if d not in seen:
                    seen[d] = (i,) + word
                    nxt.append(d)
        frontier = nxt
    return True, None


# ------------------------------------------------------------ graph closure


@dataclass
class CrystalGraph:
    crystal: Crystal
    seeds: tuple
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)  # (source, i, target)
    boundary: set = field(default_factory=set)
    band: int | None = None

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, b):
        return b in self._index

    def __post_init__(self):
        self._index = {}

    @property
    def truncated(self):
        return bool(self.boundary)

    def to_dot(self, name="crystal"):
        ids = {b: k for k, b in enumerate(self.nodes)}
        lines = [f"digraph {name} {{"]
        for b, k in ids.items():
            classical, degree = self.crystal.weight_key(b)
            mark = ", style=dashed" if b in self.boundary else ""
            lines.append(f'  n{k} [label="{_node_label(b)}\\nwt={list(classical)} d={degree}"{mark}];')
        for src, i, dst in self.edges:
            lines.append(f'  n{ids[src]} -> n{ids[dst]} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def check_axioms(self):
        """Crystal axioms on the enumerated nodes; returns a list of violations."""
        C = self.crystal
        bad = []
        for b in self.nodes:
            classical, degree = C.weight_key(b)
            for i in C.index_set:
                if C.phi(i, b) - C.eps(i, b) != C.hw(i, b):
                    bad.append(("phi-eps", b, i))
                fb = C.f(i, b)
                if fb is not None:
                    if C.e(i, fb) != b:
                        bad.append(("inverse", b, i))
                    if C.eps(i, fb) != C.eps(i, b) + 1 or C.phi(i, fb) != C.phi(i, b) - 1:
                        bad.append(("string", b, i))
                    if C.hw(i, fb) != C.hw(i, b) - 2:
                        bad.append(("weight", b, i))
                eb = C.e(i, b)
                if eb is not None and C.f(i, eb) != b:
                    bad.append(("inverse", b, i))
        return bad


def _node_label(b):
    def one(x):
        S, m = x
        return "".join(map(str, S)) + f"[{m}]"
    if b and isinstance(b[0], tuple) and isinstance(b[0][0], tuple):
        return " x ".join(one(x) for x in b)
    return one(b)


def node_in_band(b, band):
    if b and isinstance(b[0], tuple) and isinstance(b[0][0], tuple):
        return all(abs(m) <= band for _, m in b)
    return abs(b[1]) <= band


def connected_component(crystal: Crystal, seed, band: int) -> CrystalGraph:
    """Closure of ``seed`` under e~_i, f~_i with every factor degree in [-band, band].

    Nodes with an edge leaving the band are recorded in ``boundary``.
    """
    graph = CrystalGraph(crystal, (seed,), band=band)
    if not node_in_band(seed, band):
        return graph
    seen = {seed}
    queue = deque([seed])
    while queue:
        b = queue.popleft()
        graph.nodes.append(b)
        graph._index[b] = len(graph.nodes) - 1
        for i in crystal.index_set:
            for op, forward in ((crystal.f, True), (crystal.e, False)):
                c = op(i, b)
                if c is None:
                    continue
                if not node_in_band(c, band):
                    graph.boundary.add(b)
                    continue
                if forward:
                    graph.edges.append((b, i, c))
                if c not in seen:
                    seen.add(c)
                    queue.append(c)
    return graph


def braid_check(crystal: Crystal, nodes, n):
    """S_iS_jS_i = S_jS_iS_j for adjacent i, j and S_iS_j = S_jS_i otherwise on
    the cyclic sl_n^ diagram; also S_i^2 = 1. Returns violations."""
    bad = []
    idx = crystal.index_set
    for b in nodes:
        for i in idx:
            if weyl_action(crystal, (i, i), b) != b:
                bad.append(((i, i), b))
        for i, j in itertools.combinations(idx, 2):
            adjacent = (j - i) % n in (1, n - 1)
            if n == 2:
                continue  # a_01 = -2: no finite braid relation
            if adjacent:
                lhs, rhs = (i, j, i), (j, i, j)
            else:
                lhs, rhs = (i, j), (j, i)
            if weyl_action(crystal, lhs, b) != weyl_action(crystal, rhs, b):
                bad.append((lhs, b))
    return bad


# ------------------------------------------------------------------- census


@dataclass
class CensusReport:
    n: int
    shape: dict
    band: int
    n_max: int
    counts: dict  # (classical, degree) -> number of distinct vectors s(z) b inside the band
    truncated: set
    independent: bool
    component_size: int

    def table(self):
        weights = sorted({k[0] for k in self.counts} | {k[0] for k in self.truncated}, reverse=True)
        degrees = list(range(self.n_max, -self.n_max - 1, -1))
        return degrees, [(mu, [(self.counts.get((mu, d), 0), (mu, d) in self.truncated) for d in degrees]) for mu in weights]

    def to_json(self):
        return {
            "n": self.n,
            "shape": {str(k): v for k, v in sorted(self.shape.items())},
            "band": self.band,
            "n_max": self.n_max,
            "independent": self.independent,
            "component_size": self.component_size,
            "slots": [
                {"weight": list(mu), "degree": d, "N": -d, "count": self.counts.get((mu, d), 0),
                 "truncated": (mu, d) in self.truncated}
                for mu, d in sorted(set(self.counts) | self.truncated, key=lambda k: (k[0], -k[1]), reverse=True)
            ],
        }


def bijection_census(n: int, shape, n_max: int, band: int) -> CensusReport:
    """Count the distinct vectors s_{c0}(z) b (c0 with l(lambda^(i)) <= m_i,
    b in the component of u~_lambda) whose support lies in the band, per
    weight slot with |degree| <= n_max.

    Distinct pairs can give the same vector (s_{(1,1)}(z) z^-1 b = b), so the
    count is over vectors, not pairs. Slots fed by component nodes on the band
    boundary are flagged as truncated.
    """
    shape = {int(i): int(m) for i, m in shape.items() if m}
    crystal = level_zero_tensor(n, shape)
    # b itself may sit below the band and be lifted into it by s(z)
    graph = connected_component(crystal, crystal.seed(), 3 * band)
    variables = loop_variables(shape)
    positions = {}
    k = 0
    for i in sorted(shape):
        for nu in range(1, shape[i] + 1):
            positions[(i, nu)] = k
            k += 1
    perm = [positions[v] for v in variables]
    max_deg = 2 * band * sum(shape.values())
    vectors = {}
    truncated = set()
    for total in range(0, max_deg + 1):
        for c0 in partition_tuples(shape, total):
            poly = schur_product(c0, shape)
            terms = [(tuple(e), int(c.num.constant())) for e, c in poly.terms.items()]
            if any(max(abs(x) for x in e) > 2 * band for e, _ in terms):
                continue
            for b in graph.nodes:
                classical, degree = crystal.weight_key(b)
                d = degree + total
                if abs(d) > n_max:
                    continue
                vec = {}
                inside = True
                for e, c in terms:
                    node = b
                    for var_pos, power in zip(perm, e):
                        if power:
                            node = crystal.z(node, var_pos, power)
                    if not node_in_band(node, band):
                        inside = False
                        break
                    vec[node] = vec.get(node, 0) + c
                if not inside:
                    continue
                if b in graph.boundary:
                    truncated.add((classical, d))
                key = (classical, d)
                vectors.setdefault(key, set()).add(frozenset((x, c) for x, c in vec.items() if c))
    counts = {key: len(v) for key, v in vectors.items()}
    independent = all(_rank([dict(v) for v in vs]) == len(vs) for vs in vectors.values())
    return CensusReport(n, shape, band, n_max, counts, truncated, independent, len(graph))


def _rank(rows):
    """Rank of integer vectors given as dicts, over Q."""
    rows = [{k: Fraction(v) for k, v in r.items()} for r in rows]
    rank = 0
    pivots = []
    for r in rows:
        r = dict(r)
        for p, pr in pivots:
            c = r.get(p)
            if c:
                for key, val in pr.items():
                    r[key] = r.get(key, 0) - c * val
                r = {a: b for a, b in r.items() if b}
        if r:
            p = min(r)
            inv = 1 / r[p]
            pr = {a: b * inv for a, b in r.items()}
            pivots.append((p, pr))
            rank += 1
    return rank
