"""The psi-contravariant bilinear form on V(varpi_i) and the constant-term
form ( , )~ on tensor products."""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction

from ..qsymbolic import Laurent, MultiLaurentZ, RatFunc, RONE, RZERO, loop_variables, vandermonde_weight_multi
from .desk import DeskModule, ModuleVector


class FormError(RuntimeError):
    """Weight descent produced inconsistent norms (band too small or bad tables)."""


def fundamental_norms(n: int, k: int, band: int = 2):
    """Norms (v, v) of the basis of V(varpi_k) for sl_n^, solved by weight descent.

    Seeds (u_varpi, u_varpi) = 1 and propagates along every e_j / f_j edge using
    (f_j w, x) = (w, q^-1 t_j e_j x) and (e_j w, x) = (w, q^-1 t_j^-1 f_j x).
    Distinct basis vectors are orthogonal because psi fixes q^h. Every edge of
    the band is re-checked, so an inconsistent table raises FormError.
    """
    M = DeskModule(n, (k,), band=band)
    seed = M.seed_label()
    norms = {seed: RONE}
    queue = deque([seed])
    edges = []
    while queue:
        b = queue.popleft()
        for j in M.index_set:
            for kind, table in (("f", M.factor_f), ("e", M.factor_e)):
                img = table(j, b[0])
                if img is None or abs(img[1]) > band:
                    continue
                b2 = (img,)
                hw = M.hw(j, b)
                # psi(f_j) = q^-1 t_j e_j ; psi(e_j) = q^-1 t_j^-1 f_j
                exp = -1 + (hw if kind == "f" else -hw)
                value = norms[b] * RatFunc(Laurent.monomial(exp))
                edges.append((b2, value))
                if b2 not in norms:
                    norms[b2] = value
                    queue.append(b2)
    for b2, value in edges:
        if norms[b2] != value:
            raise FormError(f"inconsistent norm at {b2}: {norms[b2]} vs {value}")
    by_column = {}
    for (fb,), val in norms.items():
        S = fb[0]
        if by_column.setdefault(S, val) != val:
            raise FormError(f"norm of column {S} depends on the z-degree")
    return by_column


class TensorForm:
    """( , )~ on a desk module: the z-valued form ((u, v)) = prod_nu z_nu^{a_nu - b_nu}(..)
    followed by prod_i 1/m_i! [ . prod_{mu != nu}(1 - z_mu/z_nu) ]_1.

    For a single factor this is the contravariant form itself.
    """

    def __init__(self, module: DeskModule):
        if module.dual:
            raise ValueError("forms are defined on the undualized module")
        self.module = module
        self.norms = {k: fundamental_norms(module.n, k) for k in set(module.factors)}
        self.shape = {}
        self.slots = []
        for k in module.factors:
            self.shape[k] = self.shape.get(k, 0) + 1
            self.slots.append((k, self.shape[k]))
        self.variables = loop_variables(self.shape)
        self._pos = [self.variables.index(s) for s in self.slots]
        self._weight = vandermonde_weight_multi(self.shape)
        self._norm = math.prod(math.factorial(v) for v in self.shape.values())

    def _basis_zform(self, b1, b2):
        """((b1, b2)) as (exponent tuple, coefficient) or None."""
        coeff = RONE
        exps = [0] * len(self.variables)
        for (S1, m1), (S2, m2), k, p in zip(b1, b2, self.module.factors, self._pos):
            if S1 != S2:
                return None
            coeff = coeff * self.norms[k][S1]
            exps[p] = m1 - m2
        return tuple(exps), coeff

    def zform(self, u: ModuleVector, v: ModuleVector) -> MultiLaurentZ:
        terms = {}
        for b1, c1 in u.items():
            for b2, c2 in v.items():
                hit = self._basis_zform(b1, b2)
                if hit is None:
                    continue
                e, c = hit
                val = c1 * c2 * c
                terms[e] = terms[e] + val if e in terms else val
        return MultiLaurentZ(self.variables, terms)

    def __call__(self, u: ModuleVector, v: ModuleVector) -> RatFunc:
        total = RZERO
        for b1, c1 in u.items():
            for b2, c2 in v.items():
                hit = self._basis_zform(b1, b2)
                if hit is None:
                    continue
                e, c = hit
                w = self._weight.get(tuple(-a for a in e))
                if w:
                    total = total + c1 * c2 * c * w
        if self._norm != 1:
            total = total * RatFunc(Laurent(Fraction(1, self._norm)))
        return total

    def gram(self, vectors):
        return [[self(a, b) for b in vectors] for a in vectors]


def psi_image(module: DeskModule, gen: str, i: int, v: ModuleVector) -> ModuleVector:
    """psi(x) v for x = e_i, f_i or t_i (psi(e) = q^-1 t^-1 f, psi(f) = q^-1 t e)."""
    qinv = RatFunc(Laurent.monomial(-1))
    if gen == "e":
        return module.t(i, module.f(i, v), -1).scale(qinv)
    if gen == "f":
        return module.t(i, module.e(i, v), 1).scale(qinv)
    if gen == "t":
        return module.t(i, v, 1)
    raise ValueError(f"unknown generator {gen!r}")


def apply_generator(module: DeskModule, gen: str, i: int, v: ModuleVector) -> ModuleVector:
    if gen == "e":
        return module.e(i, v)
    if gen == "f":
        return module.f(i, v)
    if gen == "t":
        return module.t(i, v, 1)
    raise ValueError(f"unknown generator {gen!r}")
