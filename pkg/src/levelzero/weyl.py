"""Affine and extended affine Weyl groups, translations and convex orders."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cartan import (
    AffineCartanDatum,
    CoweightVector,
    DatumMismatch,
    RootVector,
    WeightVector,
    as_weight,
    bilinear_form,
    pairing,
)


class FactorizationError(RuntimeError):
    pass


class InvalidPeriodWord(ValueError):
    def __init__(self, k, beta, message):
        super().__init__(message)
        self.k = k
        self.beta = beta


def reflect(d: AffineCartanDatum, i: int, x):
    """s_i applied to a weight or a root."""
    if isinstance(x, RootVector):
        a = d.cartan_matrix
        p = sum(a[i][j] * x.coords[j] for j in d.index_set)
        if not p:
            return x
        coords = list(x.coords)
        coords[i] -= p
        return RootVector(d, coords)
    p = x.lam[i]
    if not p:
        return x
    return x - d.alpha(i).to_weight() * p


def _apply_word(d, word, x):
    for i in reversed(word):
        x = reflect(d, i, x)
    return x


class WeylWord:
    """s_{j_1} s_{j_2} ... s_{j_m}; acts on the right-most letter first."""

    def __init__(self, d: AffineCartanDatum, indices):
        self.datum = d
        self.indices = tuple(int(i) for i in indices)
        for i in self.indices:
            if i not in d.index_set:
                raise ValueError(f"index {i} outside 0..{d.rank}")

    def __len__(self):
        return len(self.indices)

    def __repr__(self):
        return f"WeylWord{self.indices}"

    def __eq__(self, other):
        return isinstance(other, WeylWord) and self.datum == other.datum and self.indices == other.indices

    def __hash__(self):
        return hash((self.datum, self.indices))

    def act(self, x):
        if x.datum != self.datum:
            raise DatumMismatch(f"{self.datum} vs {x.datum}")
        return _apply_word(self.datum, self.indices, x)

    def inverse(self):
        return WeylWord(self.datum, reversed(self.indices))

    def __mul__(self, other):
        return WeylWord(self.datum, self.indices + other.indices)

    def inversion_set(self):
        return inversion_set(self)

    @property
    def is_reduced(self):
        return all(r.is_positive_root() for r in inversion_set(self))

    def to_json(self):
        return {"type": self.datum.family, "rank": self.datum.rank, "word": list(self.indices),
                "reduced": self.is_reduced}


def inversion_set(word: WeylWord, side="right"):
    """R+ ∩ w^{-1}(R-) for w = s_{j_1}...s_{j_m}, listed as
    α_{j_m}, s_{j_m}α_{j_{m-1}}, ..., s_{j_m}...s_{j_2}α_{j_1}.

    ``side="left"`` lists R+ ∩ w(R-) instead: α_{j_1}, s_{j_1}α_{j_2}, ...
    The word is reduced iff every listed root is positive.
    """
    d = word.datum
    idx = word.indices if side == "left" else tuple(reversed(word.indices))
    out = []
    for k, j in enumerate(idx):
        out.append(_apply_word(d, idx[:k], d.alpha(j)))
    return out


def is_reduced(word: WeylWord) -> bool:
    return word.is_reduced


def translation_action(xi: CoweightVector, lam):
    """t_ξ(λ) = λ + <c,λ>ν(ξ) - ((λ,ν(ξ)) + ½(ξ,ξ)<c,λ>)δ."""
    lam = as_weight(lam)
    d = lam.datum
    nu = xi.nu()
    lev = lam.level
    out = lam
    if lev:
        out = out + nu * lev
    shift = bilinear_form(lam, nu) + Fraction(1, 2) * bilinear_form(nu, nu) * lev
    if shift:
        out = out - d.delta * shift
    return out


def _rho_fin(d):
    out = WeightVector(d, [0] * (d.rank + 1), 0)
    for i in d.finite_index_set:
        out = out + d.varpi(i)
    return out


def _finite_word_to_dominant(d, mu):
    """Reduced finite word u with u(ρ) = mu (mu a regular level-zero W-image of ρ)."""
    word = []
    while True:
        for i in d.finite_index_set:
            if mu.lam[i] < 0:
                mu = reflect(d, i, mu)
                word.append(i)
                break
        else:
            break
    # mu_orig = s_{w1} s_{w2} ... (rho) with word recorded in application order
    return tuple(word)


def _coweight_from_level0(d, lam):
    return CoweightVector(d, [int(x) for x in lam.lam[1:]])


def _act_finite_on_coweight(d, word, xi: CoweightVector):
    return _coweight_from_level0(d, _apply_word(d, word, xi.nu()))


class ExtendedWeylElement:
    """Element t_ξ u of W ⋉ P^vee, u a finite Weyl element.

    Normal form B is (u, ξ) with u stored as a reduced finite word;
    normal form A is (τ, w) with w an affine reduced word, from ``normal_form_a``.
    """

    def __init__(self, d: AffineCartanDatum, finite_word=(), xi=None):
        self.datum = d
        if xi is None:
            xi = CoweightVector(d, [0] * d.rank)
        self.xi = xi
        for i in finite_word:
            if i not in d.finite_index_set:
                raise ValueError("finite word must avoid the affine index")
        mu = _apply_word(d, tuple(finite_word), _rho_fin(d))
        self._urho = mu
        self.finite_word = _finite_word_to_dominant(d, mu)

    # constructors
    @classmethod
    def identity(cls, d):
        return cls(d)

    @classmethod
    def translation(cls, xi: CoweightVector):
        return cls(xi.datum, (), xi)

    @classmethod
    def simple_reflection(cls, d, i):
        if i != 0:
            return cls(d, (i,))
        # s_0 = t_θ s_θ with θ viewed as a coweight through ν
        theta = d.finite_root(d.highest_root).to_weight()
        theta_cw = _coweight_from_level0(d, theta)
        word = _reflection_word(d, d.highest_root)
        return cls(d, word, theta_cw)

    @classmethod
    def from_word(cls, word: WeylWord):
        out = cls.identity(word.datum)
        for i in word.indices:
            out = out * cls.simple_reflection(word.datum, i)
        return out

    # group structure
    def __mul__(self, other):
        d = self.datum
        xi = self.xi + _act_finite_on_coweight(d, self.finite_word, other.xi)
        return ExtendedWeylElement(d, self.finite_word + other.finite_word, xi)

    def inverse(self):
        d = self.datum
        inv_word = tuple(reversed(self.finite_word))
        return ExtendedWeylElement(d, inv_word, -_act_finite_on_coweight(d, inv_word, self.xi))

    def key(self):
        return (tuple(self._urho.lam), self.xi.coords)

    def __eq__(self, other):
        return isinstance(other, ExtendedWeylElement) and self.datum == other.datum and self.key() == other.key()

    def __hash__(self):
        return hash((self.datum, self.key()))

    def __repr__(self):
        return f"ExtendedWeylElement(u={self.finite_word}, xi={self.xi.coords})"

    def act(self, x):
        if x.datum != self.datum:
            raise DatumMismatch(f"{self.datum} vs {x.datum}")
        is_root = isinstance(x, RootVector)
        w = _apply_word(self.datum, self.finite_word, as_weight(x))
        out = translation_action(self.xi, w)
        return out.to_root() if is_root else out

    def normal_form_b(self):
        return self.finite_word, self.xi

    def normal_form_a(self):
        """(τ, word) with self = π_τ · s_{word}, π_τ of length zero."""
        d = self.datum
        x = self
        descents = []
        guard = 0
        while True:
            for i in d.index_set:
                if not x.act(d.alpha(i)).is_positive_root():
                    x = x * ExtendedWeylElement.simple_reflection(d, i)
                    descents.append(i)
                    break
            else:
                break
            guard += 1
            if guard > 10_000:
                raise FactorizationError("descent loop did not terminate")
        tau = []
        for j in d.index_set:
            img = x.act(d.alpha(j))
            simple = [k for k in d.index_set if img == d.alpha(k)]
            if len(simple) != 1:
                raise FactorizationError(f"length-zero part does not permute simple roots at {j}")
            tau.append(simple[0])
        tau = tuple(tau)
        check_diagram_automorphism(d, tau)
        word = WeylWord(d, tuple(reversed(descents)))
        return tau, word, x

    def length(self):
        return len(self.normal_form_a()[1])


def _reflection_word(d, beta):
    """Finite word for the reflection s_β (β a positive finite root)."""
    root = d.finite_root(beta)
    word = []
    while sum(root.coords[1:]) > 1 or root.coords[0] != 0:
        for i in d.finite_index_set:
            if root.to_weight().lam[i] > 0:
                root = reflect(d, i, root)
                word.append(i)
                break
        else:
            raise FactorizationError("could not reduce root to a simple one")
    j = next(k for k in d.finite_index_set if root.coords[k] == 1)
    w = tuple(word)
    return w + (j,) + tuple(reversed(w))


def check_diagram_automorphism(d, tau):
    a = d.cartan_matrix
    if sorted(tau) != list(d.index_set):
        raise FactorizationError(f"{tau} is not a permutation of the index set")
    for i in d.index_set:
        for j in d.index_set:
            if a[tau[i]][tau[j]] != a[i][j]:
                raise FactorizationError(f"{tau} does not preserve the Cartan matrix")
    return True


@dataclass
class Factorization:
    xi: CoweightVector
    tau: tuple
    word: WeylWord
    element: ExtendedWeylElement
    pi: ExtendedWeylElement

    def to_json(self):
        return {"xi": list(self.xi.coords), "tau": list(self.tau), "word": list(self.word.indices),
                "length": len(self.word)}


def factor_translation(xi: CoweightVector) -> Factorization:
    """t_ξ = π_τ s_{i_1}...s_{i_m} with a reduced affine word."""
    d = xi.datum
    if not xi.is_dominant():
        raise ValueError("factor_translation expects a dominant coweight")
    t = ExtendedWeylElement.translation(xi)
    tau, word, pi = t.normal_form_a()
    if not word.is_reduced:
        raise FactorizationError("descent word is not reduced")
    # round trip on all Λ_i, α_i and δ
    rebuilt = pi * ExtendedWeylElement.from_word(word)
    basis = [d.Lambda(i) for i in d.index_set] + [d.alpha(i).to_weight() for i in d.index_set] + [d.delta]
    for b in basis:
        if rebuilt.act(b) != t.act(b) or translation_action(xi, b) != t.act(b):
            raise FactorizationError(f"factorization disagrees on {b}")
    return Factorization(xi, tau, word, t, pi)


def length_zero_elements(d):
    """The group T of length-zero elements, as (τ, element) pairs."""
    found = {tuple(d.index_set): ExtendedWeylElement.identity(d)}
    frontier = list(found.values())
    gens = []
    for i in d.finite_index_set:
        f = factor_translation(d.fund_coweight(i))
        gens.append(f.pi)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                tau, word, _ = y.normal_form_a()
                if len(word) == 0 and tau not in found:
                    found[tau] = y
                    nxt.append(y)
        frontier = nxt
    return sorted(found.items())


def _conjugate_word(tau, word):
    """Word for π^{-1} s_word π, i.e. indices mapped through τ^{-1}."""
    inv = {t: i for i, t in enumerate(tau)}
    return tuple(inv[j] for j in word)


def _compose_tau(t1, t2):
    return tuple(t1[t2[j]] for j in range(len(t1)))


def period_word(d: AffineCartanDatum):
    """Reduced word for t_{2ρ^vee}: the factored t_{varpi_i^vee}, i in index order,
    taken twice with twists pushed to the left."""
    pieces = [factor_translation(d.fund_coweight(i)) for i in d.finite_index_set] * 2
    tau_total = tuple(d.index_set)
    word = ()
    # running product: π_total · word; multiply on the right by π_i w_i
    for f in pieces:
        word = _conjugate_word(f.tau, word) + f.word.indices
        tau_total = _compose_tau(tau_total, f.tau)
    if tau_total != tuple(d.index_set):
        raise FactorizationError("twists of the period word do not cancel")
    w = WeylWord(d, word)
    if not w.is_reduced:
        raise FactorizationError("period word is not reduced")
    rho2 = CoweightVector(d, [2] * d.rank)
    target = ExtendedWeylElement.translation(rho2)
    if ExtendedWeylElement.from_word(w) != target:
        raise FactorizationError("period word does not realize t_{2ρ}")
    return word


class ConvexOrderSequence:
    def __init__(self, d: AffineCartanDatum, word=None):
        self.datum = d
        self.word = tuple(word) if word is not None else period_word(d)
        self.period = len(self.word)

    def index(self, k):
        # i_k = i_{k mod N}, positions 1..N
        return self.word[(k - 1) % self.period]

    def beta(self, k):
        d = self.datum
        if k > 0:
            prefix = [self.index(j) for j in range(1, k)]
        else:
            prefix = [self.index(j) for j in range(0, k, -1)]
        return _apply_word(d, tuple(prefix), d.alpha(self.index(k)))

    def window(self, k_min, k_max):
        """β_k for k_min <= k <= k_max, built incrementally."""
        d = self.datum
        out = {}
        # k > 0: β_k = s_{i_1}...s_{i_{k-1}} α_{i_k}
        for k in range(max(1, k_min), k_max + 1):
            out[k] = self.beta(k)
        for k in range(min(0, k_max), k_min - 1, -1):
            out[k] = self.beta(k)
        return [out[k] for k in range(k_min, k_max + 1)]


def in_R_greater(r: RootVector):
    beta = r.finite_part()
    return r.delta_degree >= 0 and tuple(beta) in r.datum._root_set


def in_R_less(r: RootVector):
    beta = tuple(-x for x in r.finite_part())
    return r.delta_degree > 0 and beta in r.datum._root_set


@dataclass
class ConvexOrderReport:
    datum: str
    word: tuple
    k_min: int
    k_max: int
    passed: bool
    first_bad: int | None = None
    message: str = ""

    def to_json(self):
        return {"datum": self.datum, "period_word": list(self.word), "window": [self.k_min, self.k_max],
                "status": "pass" if self.passed else "fail", "first_bad": self.first_bad, "message": self.message}


def validate_period_word(seq: ConvexOrderSequence, k_min, k_max) -> ConvexOrderReport:
    roots = seq.window(k_min, k_max)
    seen = set()
    for k, r in zip(range(k_min, k_max + 1), roots):
        ok = in_R_less(r) if k > 0 else in_R_greater(r)
        if not ok:
            return ConvexOrderReport(seq.datum.type_label, seq.word, k_min, k_max, False, k,
                                     f"beta_{k} = {r} on the wrong side")
        if r in seen:
            return ConvexOrderReport(seq.datum.type_label, seq.word, k_min, k_max, False, k,
                                     f"beta_{k} = {r} repeats")
        seen.add(r)
    return ConvexOrderReport(seq.datum.type_label, seq.word, k_min, k_max, True)


def beta_sequence(d: AffineCartanDatum, window, word=None):
    """β_k on [k_min, k_max] after validating the period word on that window."""
    k_min, k_max = window
    seq = ConvexOrderSequence(d, word)
    report = validate_period_word(seq, k_min, k_max)
    if not report.passed:
        raise InvalidPeriodWord(report.first_bad, None, report.message)
    return seq.window(k_min, k_max)


def act_on_weight(w, lam):
    return w.act(lam)


@dataclass
class BraidReport:
    datum: str
    checked: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {"datum": self.datum, "checked": self.checked, "skipped": self.skipped,
                "failures": self.failures, "status": "pass" if self.passed else "fail"}


def braid_relation_check(d: AffineCartanDatum) -> BraidReport:
    rep = BraidReport(d.type_label)
    basis = [d.Lambda(i) for i in d.index_set] + [d.delta]
    a = d.cartan_matrix
    for i in d.index_set:
        for j in d.index_set:
            if j <= i:
                continue
            if a[i][j] == -1:
                lhs, rhs = (i, j, i), (j, i, j)
            elif a[i][j] == 0:
                lhs, rhs = (i, j), (j, i)
            else:
                rep.skipped.append([i, j])
                continue
            for b in basis:
                if _apply_word(d, lhs, b) != _apply_word(d, rhs, b):
                    rep.failures.append({"pair": [i, j], "weight": repr(b)})
            rep.checked.append([i, j])
    return rep
