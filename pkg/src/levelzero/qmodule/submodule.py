"""Cyclic submodules of desk modules: graded dimensions by exact elimination
over Q(q), and the bar involution on the generated span."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..qsymbolic import RatFunc, RONE
from .desk import BandError, DeskModule, ModuleVector, ZERO_VECTOR


class BarDomainError(ValueError):
    """The vector is not in the certified span of the cyclic submodule."""


class SlotSpan:
    """Span of vectors in one weight slot, kept in reduced echelon form.

    Every accepted generator is a word in Chevalley generators applied to the
    seed; ``coords`` records each echelon row in terms of those generators so
    arbitrary members can be expanded back.
    """

    def __init__(self):
        self.generators = []
        self.rows = []  # (pivot label, row vector, coords dict gen-index -> RatFunc)

    def __len__(self):
        return len(self.generators)

    def _reduce(self, v, coords):
        for pivot, row, rc in self.rows:
            c = v.coefficient(pivot)
            if c.is_zero():
                continue
            v = v - row.scale(c)
            for g, x in rc.items():
                val = coords.get(g, RatFunc(0)) - x * c
                if val.is_zero():
                    coords.pop(g, None)
                else:
                    coords[g] = val
        return v, coords

    def add(self, v: ModuleVector) -> bool:
        """Insert v if it is independent; return whether it was new."""
        idx = len(self.generators)
        rest, coords = self._reduce(v, {idx: RONE})
        if rest.is_zero():
            return False
        pivot = min(rest.terms, key=_label_key)
        inv = rest.coefficient(pivot).inverse()
        rest = rest.scale(inv)
        coords = {g: c * inv for g, c in coords.items()}
        # keep the echelon form reduced
        new_rows = []
        for p, row, rc in self.rows:
            c = row.coefficient(pivot)
            if not c.is_zero():
                row = row - rest.scale(c)
                rc = dict(rc)
                for g, x in coords.items():
                    val = rc.get(g, RatFunc(0)) - x * c
                    if val.is_zero():
                        rc.pop(g, None)
                    else:
                        rc[g] = val
            new_rows.append((p, row, rc))
        new_rows.append((pivot, rest, coords))
        self.rows = new_rows
        self.generators.append(v)
        return True

    def expand(self, v: ModuleVector):
        """Coefficients of v in the generators, or None if v is outside the span."""
        out = {}
        rest = v
        for pivot, row, rc in self.rows:
            c = rest.coefficient(pivot)
            if c.is_zero():
                continue
            rest = rest - row.scale(c)
            for g, x in rc.items():
                val = out.get(g, RatFunc(0)) + x * c
                if val.is_zero():
                    out.pop(g, None)
                else:
                    out[g] = val
        if not rest.is_zero():
            return None
        return out


def _label_key(b):
    return tuple((S, m) for S, m in b)


@dataclass
class GradedSubmodule:
    """Result of closing a seed under e_j, f_j inside a band."""

    module: DeskModule
    seed: ModuleVector
    slots: dict = field(default_factory=dict)  # (classical weight, degree) -> SlotSpan
    truncated: set = field(default_factory=set)

    def dimensions(self):
        return {key: len(span) for key, span in sorted(self.slots.items())}

    def dimension(self, classical, degree):
        span = self.slots.get((tuple(classical), degree))
        return 0 if span is None else len(span)

    def is_truncated(self, classical, degree):
        return (tuple(classical), degree) in self.truncated

    def table(self, degrees=None):
        """Rows keyed by classical weight, columns by delta-drop N = -degree."""
        keys = set(self.slots) | set(self.truncated)
        weights = sorted({k[0] for k in keys}, reverse=True)
        if degrees is None:
            degrees = sorted({k[1] for k in keys}, reverse=True)
        rows = []
        for mu in weights:
            row = []
            for d in degrees:
                key = (mu, d)
                row.append((self.dimension(mu, d), key in self.truncated))
            rows.append((mu, row))
        return degrees, rows

    def bar(self, v: ModuleVector) -> ModuleVector:
        """Bar involution: q -> q^-1 on coordinates along the word vectors,
        which are bar-invariant since e_j, f_j and the seed are."""
        out = ZERO_VECTOR
        for key, part in self.module.split_weight(v).items():
            span = self.slots.get(key)
            coords = None if span is None else span.expand(part)
            if coords is None or key in self.truncated:
                raise BarDomainError(f"vector component at {key} is outside the certified span")
            for g, c in coords.items():
                out = out + span.generators[g].scale(c.bar())
        return out


def generate_submodule(module: DeskModule, seed: ModuleVector, max_vectors: int = 100000) -> GradedSubmodule:
    """Close ``seed`` under all e_j, f_j (j in I^) within the module band.

    An application that leaves the band flags its target slot as truncated:
    that slot may be missing vectors, and its dimension is only a lower bound.
    """
    result = GradedSubmodule(module, seed)
    if seed.is_zero():
        return result
    queue = deque()
    for key, part in module.split_weight(seed).items():
        span = result.slots.setdefault(key, SlotSpan())
        if span.add(part):
            queue.append((key, part))
    count = 0
    while queue:
        key, v = queue.popleft()
        for j in module.index_set:
            for raising in (True, False):
                key2 = _target_key(module, key, j, raising)
                try:
                    w = module.e(j, v) if raising else module.f(j, v)
                except BandError:
                    result.truncated.add(key2)
                    continue
                if w.is_zero():
                    continue
                span = result.slots.setdefault(key2, SlotSpan())
                if span.add(w):
                    queue.append((key2, w))
                    count += 1
                    if count > max_vectors:
                        raise RuntimeError("submodule generation exceeded max_vectors")
    return result


def _target_key(module, key, j, raising):
    """Weight slot reached from ``key`` by e_j (raising) or f_j."""
    classical, degree = key
    d = module.datum
    sign = 1 if raising else -1
    if j == 0:
        theta = d.highest_root
        # alpha_0 = delta - theta: classical part -theta, degree +1
        col = [sum(d.finite_cartan[r][c] * theta[c] for c in range(len(theta))) for r in range(len(theta))]
        new = tuple(x - sign * y for x, y in zip(classical, col))
        return new, degree + sign
    col = [d.finite_cartan[r][j - 1] for r in range(len(classical))]
    new = tuple(x + sign * y for x, y in zip(classical, col))
    return new, degree
