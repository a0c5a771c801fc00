"""Drinfeld generators realized on desk modules by braid conjugation, and the
imaginary root vectors P, P~ built from them."""

from __future__ import annotations

import itertools
from fractions import Fraction

from ..qsymbolic import Laurent, RatFunc, gauss_int, newton_transition
from ..weyl import factor_translation
from .desk import DeskModule, ModuleVector, ZERO_VECTOR

Q_MINUS_QINV = RatFunc(Laurent({1: 1, -1: -1}))


class DrinfeldEngine:
    """Loop generators x^±_{i,r}, h_{i,m} on a desk module for a fixed i in I.

    T_{varpi_i^vee} is realized as (twist)^p ∘ T_{j_1} ∘ ... ∘ T_{j_m} from the
    factorization t_{varpi_i^vee} = π s_{j_1}...s_{j_m}.
    """

    def __init__(self, module: DeskModule, i: int):
        if i not in module.index_set or i == 0:
            raise ValueError("i must be a finite index")
        self.module = module
        self.i = i
        fact = factor_translation(module.datum.fund_coweight(i))
        self.factorization = fact
        self.twist_power = module.rotation_power(fact.tau)
        self.word = fact.word.indices
        self.o = module.o[i]
        self._theta = {1: {}, -1: {}}

    # Θ = T_{varpi_i^vee} and its inverse on basis vectors
    def _theta_basis(self, b, sign):
        memo = self._theta[sign]
        hit = memo.get(b)
        if hit is not None:
            return hit
        M = self.module
        v = ModuleVector.basis(b)
        if sign > 0:
            for j in reversed(self.word):
                v = M.braid_T(j, v, 1)
            v = M.twist(v, self.twist_power)
        else:
            v = M.twist(v, -self.twist_power)
            for j in self.word:
                v = M.braid_T(j, v, -1)
        memo[b] = v
        return v

    def theta(self, v, power=1):
        sign = 1 if power > 0 else -1
        for _ in range(abs(power)):
            v = self.module._linear(lambda b: self._theta_basis(b, sign), v)
        return v

    def xplus(self, r, v):
        """x^+_{i,r} = o(i)^r T^{-r}(e_i) as the operator Θ^{-r} e_i Θ^{r}."""
        w = self.module.e(self.i, self.theta(v, r))
        w = self.theta(w, -r)
        return w if self.o ** r == 1 else -w

    def xminus(self, r, v):
        """x^-_{i,r} = o(i)^r T^{r}(f_i) as the operator Θ^{r} f_i Θ^{-r}."""
        w = self.module.f(self.i, self.theta(v, -r))
        w = self.theta(w, r)
        return w if self.o ** r == 1 else -w

    def psi_normalized(self, n, v):
        """Ψ_n = t_i^{-1} ψ^+_{i,n} = (q - q^-1) t_i^{-1} [x^+_{i,n}, x^-_{i,0}] for n >= 1,
        and Φ_n = t_i ψ^-_{i,-n} = -(q - q^-1) t_i [x^+_{i,0}, x^-_{i,-n}] for n <= -1 (indexed by -n)."""
        M, i = self.module, self.i
        if n > 0:
            comm = self.xplus(n, M.f(i, v)) - M.f(i, self.xplus(n, v))
            return M.t(i, comm, -1).scale(Q_MINUS_QINV)
        m = -n
        comm = M.e(i, self.xminus(-m, v)) - self.xminus(-m, M.e(i, v))
        return M.t(i, comm, 1).scale(-Q_MINUS_QINV)

    def h(self, m, v):
        """h_{i,m} from the generating series Ψ(u) = exp(±(q-q^-1) Σ h_{±m} u^{±m})."""
        if m == 0:
            raise ValueError("h_{i,0} is not a loop generator")
        sign = 1 if m > 0 else -1
        n = abs(m)
        total = self.psi_normalized(sign * n, v).scale(n)
        for r in range(1, n):
            inner = self.psi_normalized(sign * (n - r), v)
            total = total - self.h(sign * r, inner).scale(RatFunc(r) * Q_MINUS_QINV * sign)
        return total.divide(Q_MINUS_QINV * (n * sign))

    def power_sum_operator(self, r, v, negative=False):
        """p_r = r o^r h_{i,±r}/[r]: the power sums of which P and P~ are
        (signed) elementary and complete functions."""
        coeff = RatFunc(Laurent(r * self.o ** r)) / RatFunc(gauss_int(r))
        return self.h(-r if negative else r, v).scale(coeff)

    def imaginary_P(self, m, v, tilde=False):
        """P_{m,i} v (or P~_{m,i} v); negative m uses h_{i,-r} (the Ω-image)."""
        if m == 0:
            return v
        k = abs(m)
        negative = m < 0
        elem, comp = newton_transition(k)
        poly = comp[k] if tilde else elem[k]
        sign = 1 if tilde or k % 2 == 0 else -1
        out = ZERO_VECTOR
        for mu, c in poly.items():
            w = v
            for r in mu:
                w = self.power_sum_operator(r, w, negative)
                if w.is_zero():
                    break
            out = out + w.scale(RatFunc(Laurent(c * sign)))
        return out

    def imaginary_P_recursive(self, m, v, tilde=False):
        """Independent route: n X_n = Σ_r A_r X_{n-r} with A_r = ∓ r o^r h_r/[r]."""
        if m == 0:
            return v
        k = abs(m)
        negative = m < 0
        sgn = 1 if tilde else -1
        cache = {0: v}
        for n in range(1, k + 1):
            acc = ZERO_VECTOR
            for r in range(1, n + 1):
                acc = acc + self.power_sum_operator(r, cache[n - r], negative).scale(sgn)
            cache[n] = acc.divide(n)
        return cache[k]

    def schur_operator(self, lam, v, tilde=True, negative=False):
        """Jacobi-Trudi determinant det(P~_{lam_k - k + l}) applied to v (the
        P~ commute, so the permutation expansion is an operator identity)."""
        lam = tuple(lam)
        t = len(lam)
        if t == 0:
            return v
        out = ZERO_VECTOR
        for perm in itertools.permutations(range(t)):
            degs = [lam[k] - k + perm[k] for k in range(t)]
            if any(d < 0 for d in degs):
                continue
            w = v
            for d in degs:
                if d:
                    w = self.imaginary_P(-d if negative else d, w, tilde)
                if w.is_zero():
                    break
            if not w.is_zero():
                out = out + (w if _perm_sign(perm) > 0 else -w)
        return out


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for s in range(len(perm)):
        if seen[s]:
            continue
        j, length = s, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
