"""Exact scalars in q, Laurent polynomials in loop variables, Schur functions
and the constant-term pairing."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache, reduce


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Laurent:
    """Laurent polynomial in q with rational (usually integer) coefficients.

    Immutable. The internal map never stores zero coefficients.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = {0: terms}
        self.terms = {e: _norm(c) for e, c in terms.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls._raw({exp: _norm(coeff)} if coeff != 0 else {})

    # structure
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or set(self.terms) == {0}

    def is_monomial(self):
        return len(self.terms) == 1

    def min_exp(self):
        return min(self.terms)

    def max_exp(self):
        return max(self.terms)

    def lead(self):
        return self.terms[max(self.terms)]

    def shift(self, k):
        return Laurent._raw({e + k: c for e, c in self.terms.items()})

    def bar(self):
        return Laurent._raw({-e: c for e, c in self.terms.items()})

    def coeff(self, e):
        return self.terms.get(e, 0)

    def constant(self):
        return self.terms.get(0, 0)

    def at_zero(self):
        """Value at q = 0; requires no negative powers."""
        if self.terms and self.min_exp() < 0:
            raise ValueError(f"{self} is not regular at q = 0")
        return self.terms.get(0, 0)

    def evaluate(self, x):
        return sum(c * x ** e for e, c in self.terms.items())

    def content(self):
        """Positive rational g with self/g having coprime integer coefficients."""
        if not self.terms:
            return 1
        nums = [Fraction(c) for c in self.terms.values()]
        den = reduce(math.lcm, (c.denominator for c in nums), 1)
        g = reduce(math.gcd, (int(c * den) for c in nums), 0)
        return _norm(Fraction(g, den))

    def scale(self, c):
        if c == 0:
            return Laurent._raw({})
        return Laurent._raw({e: _norm(v * c) for e, v in self.terms.items()})

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, Laurent):
            other = Laurent(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        return Laurent._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Laurent):
            other = Laurent(other)
        return self + (-other)

    def __rsub__(self, other):
        return Laurent(other) - self

    def __mul__(self, other):
        if not isinstance(other, Laurent):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return Laurent._raw({})
        if len(a) == 1:
            (ea, ca), = a.items()
            return Laurent._raw({e + ea: _norm(c * ca) for e, c in b.items()})
        if len(b) == 1:
            (eb, cb), = b.items()
            return Laurent._raw({e + eb: _norm(c * cb) for e, c in a.items()})
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                k = ea + eb
                out[k] = out.get(k, 0) + ca * cb
        return Laurent._raw({e: _norm(c) for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            (e, c), = self.terms.items()
            return Laurent._raw({e * n: _norm(Fraction(1, 1) / Fraction(c) ** (-n))})
        result = Laurent(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod_exact(self, other):
        """Return self / other when the quotient is a Laurent polynomial, else None."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return Laurent._raw({})
        if other.is_monomial():
            (e, c), = other.terms.items()
            return Laurent._raw({k - e: _norm(Fraction(v) / c) for k, v in self.terms.items()})
        rem = dict(self.terms)
        dmax, dmin = other.max_exp(), other.min_exp()
        lead = Fraction(other.terms[dmax])
        quot = {}
        lo = self.min_exp()
        while rem:
            top = max(rem)
            if top - dmax < lo - dmin:
                return None
            k = top - dmax
            c = rem[top] / lead
            quot[k] = _norm(c)
            for e, v in other.terms.items():
                val = rem.get(e + k, 0) - c * v
                if val:
                    rem[e + k] = val
                else:
                    rem.pop(e + k, None)
        return Laurent._raw(quot)

    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self.terms == other.terms
        if isinstance(other, RatFunc):
            return other == self
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: _norm(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Laurent({self})"

    def __str__(self):
        return render_terms(self.terms, "q")


def render_terms(terms, var):
    """Canonical rendering: descending exponents, explicit signs."""
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


Q = Laurent.monomial(1)
ONE = Laurent(1)
ZERO = Laurent()


def q_power(k):
    return Laurent.monomial(k)


# polynomial gcd over Q on exponent-normalized Laurent polynomials
def _to_poly(a):
    """Dense coefficient list (low degree first) of a polynomial Laurent."""
    lo = a.min_exp()
    out = [Fraction(0)] * (a.max_exp() - lo + 1)
    for e, c in a.terms.items():
        out[e - lo] = Fraction(c)
    return out, lo


def _poly_rem(a, b):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        c = a[-1] / lb
        shift = len(a) - 1 - db
        for k, v in enumerate(b):
            a[k + shift] -= c * v
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_gcd(a: Laurent, b: Laurent) -> Laurent:
    """Monic gcd of the polynomial parts (monomial factors stripped)."""
    pa, _ = _to_poly(a)
    pb, _ = _to_poly(b)
    while pb:
        pa, pb = pb, _poly_rem(pa, pb)
    lead = pa[-1]
    return Laurent({k: c / lead for k, c in enumerate(pa)})


class RatFunc:
    """Element of Q(q) as a reduced fraction num/den.

    den is a polynomial with nonzero constant term and leading coefficient 1,
    or None for den = 1 (the common case, kept on a fast path).
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None):
        if not isinstance(num, Laurent):
            num = Laurent(num)
        if den is not None and not isinstance(den, Laurent):
            den = Laurent(den)
        self.num, self.den = num, None
        if den is not None:
            self._reduce(den)

    @classmethod
    def _raw(cls, num, den=None):
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    def _reduce(self, den):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num = self.num
        if num.is_zero():
            self.num, self.den = Laurent._raw({}), None
            return
        if den.is_monomial():
            (e, c), = den.terms.items()
            self.num = num.scale(Fraction(1) / Fraction(c)).shift(-e)
            return
        quot = num.divmod_exact(den)
        if quot is not None:
            self.num = quot
            return
        g = poly_gcd(num, den)
        if not g.is_constant():
            num = num.divmod_exact(g)
            den = den.divmod_exact(g)
        lo = den.min_exp()
        lead = den.lead()
        den = den.shift(-lo).scale(Fraction(1) / Fraction(lead))
        num = num.shift(-lo).scale(Fraction(1) / Fraction(lead))
        if den.is_monomial():
            self.num, self.den = num, None
        else:
            self.num, self.den = num, den

    @staticmethod
    def coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Laurent):
            return RatFunc._raw(x)
        return RatFunc._raw(Laurent(x))

    def is_zero(self):
        return self.num.is_zero()

    def is_laurent(self):
        return self.den is None

    def as_laurent(self):
        if self.den is not None:
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        o = other if isinstance(other, RatFunc) else RatFunc.coerce(other)
        if self.den is None and o.den is None:
            return RatFunc._raw(self.num + o.num)
        if self.den is not None and o.den is not None and self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        d1 = self.den if self.den is not None else ONE
        d2 = o.den if o.den is not None else ONE
        return RatFunc(self.num * d2 + o.num * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        o = other if isinstance(other, RatFunc) else RatFunc.coerce(other)
        if self.den is None and o.den is None:
            return RatFunc._raw(self.num * o.num)
        if self.num.is_zero() or o.num.is_zero():
            return RatFunc._raw(Laurent._raw({}))
        d1 = self.den if self.den is not None else ONE
        d2 = o.den if o.den is not None else ONE
        return RatFunc(self.num * o.num, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den if self.den is not None else ONE, self.num)

    def __truediv__(self, other):
        o = RatFunc.coerce(other)
        if o.den is None and self.den is None:
            quot = self.num.divmod_exact(o.num)
            if quot is not None:
                return RatFunc._raw(quot)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if self.den is None:
            return RatFunc._raw(self.num ** n)
        return RatFunc(self.num ** n, self.den ** n)

    def bar(self):
        if self.den is None:
            return RatFunc._raw(self.num.bar())
        return RatFunc(self.num.bar(), self.den.bar())

    def regular_at_zero(self):
        # den has nonzero constant term by normalization
        return self.num.is_zero() or self.num.min_exp() >= 0

    def at_zero(self):
        if not self.regular_at_zero():
            raise ValueError(f"{self} has a pole at q = 0")
        if self.num.is_zero():
            return 0
        c = self.num.terms.get(0, 0)
        if self.den is None:
            return c
        return _norm(Fraction(c) / self.den.terms[0])

    def regular_at_infinity(self):
        if self.num.is_zero():
            return True
        dd = self.den.max_exp() if self.den is not None else 0
        return self.num.max_exp() <= dd

    def in_q_integral(self):
        """True iff self lies in q Q[q]."""
        if self.num.is_zero():
            return True
        return self.den is None and self.num.min_exp() >= 1

    def evaluate(self, x):
        n = self.num.evaluate(x)
        if self.den is None:
            return n
        return n / self.den.evaluate(x)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Laurent, int, Fraction)):
            return self.den is None and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den is None:
            return str(self.num)
        return f"({self.num})/({self.den})"


def rf(x):
    return RatFunc.coerce(x)


RQ = RatFunc._raw(Q)
RONE = RatFunc._raw(ONE)
RZERO = RatFunc._raw(ZERO)


def rq_power(k):
    return RatFunc._raw(Laurent.monomial(k))


@lru_cache(maxsize=None)
def gauss_int(n: int) -> Laurent:
    """[n]_q = (q^n - q^-n)/(q - q^-1)."""
    if n == 0:
        return ZERO
    if n < 0:
        return -gauss_int(-n)
    return Laurent({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def gauss_factorial(n: int) -> Laurent:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    out = ONE
    for k in range(1, n + 1):
        out = out * gauss_int(k)
    return out


@lru_cache(maxsize=None)
def gauss_binomial(n: int, k: int) -> Laurent:
    if k < 0 or k > n:
        return ZERO
    quot = gauss_factorial(n).divmod_exact(gauss_factorial(k) * gauss_factorial(n - k))
    assert quot is not None
    return quot


# ---------------------------------------------------------------------------
# multivariate Laurent polynomials in loop variables z


class MultiLaurentZ:
    """Laurent polynomial in named variables with coefficients in Q(q).

    ``variables`` is a tuple of hashable names such as ``(i, nu)``; terms map
    exponent tuples (aligned with ``variables``) to RatFunc coefficients.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        out = {}
        for e, c in (terms or {}).items():
            c = RatFunc.coerce(c)
            if not c.is_zero():
                out[tuple(e)] = c
        self.terms = out

    @classmethod
    def one(cls, variables):
        return cls(variables, {(0,) * len(variables): RONE})

    @classmethod
    def variable(cls, variables, name, power=1):
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = power
        return cls(variables, {tuple(e): RONE})

    def _check(self, other):
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MultiLaurentZ(self.variables, out)

    def __neg__(self):
        return MultiLaurentZ(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiLaurentZ):
            c = RatFunc.coerce(other)
            return MultiLaurentZ(self.variables, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return MultiLaurentZ(self.variables, out)

    __rmul__ = __mul__

    def bar_z(self):
        """Substitute every z by z^-1 (coefficients untouched)."""
        return MultiLaurentZ(self.variables, {tuple(-a for a in e): c for e, c in self.terms.items()})

    def constant_term(self):
        return self.terms.get((0,) * len(self.variables), RZERO)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), RZERO)

    def __eq__(self, other):
        if not isinstance(other, MultiLaurentZ):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiLaurentZ({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(
                (f"z{_vname(v)}" if a == 1 else f"z{_vname(v)}^{a}")
                for v, a in zip(self.variables, e) if a
            )
            c = self.terms[e]
            if not mono:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def _vname(v):
    if isinstance(v, tuple):
        return "_" + "_".join(str(x) for x in v)
    return str(v)


# ---------------------------------------------------------------------------
# partitions and partition tuples


def partitions(n, max_len=None, max_part=None):
    """Partitions of n as weakly decreasing tuples, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, None if max_len is None else max_len - 1, first):
            yield (first,) + rest


def _check_partition(p):
    p = tuple(int(x) for x in p)
    if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"not a partition: {p}")
    return p


class PartitionTuple:
    """Map i -> partition, equivalently c0 on imaginary roots (k delta, i)."""

    __slots__ = ("parts",)

    def __init__(self, parts=None):
        parts = parts or {}
        self.parts = {int(i): _check_partition(p) for i, p in parts.items() if len(p)}

    @classmethod
    def from_c0(cls, c0):
        """c0 maps (k, i) to the multiplicity of k in the i-th partition."""
        out = {}
        for (k, i), mult in c0.items():
            if mult < 0 or k <= 0:
                raise ValueError(f"bad c0 entry {(k, i)}: {mult}")
            out.setdefault(i, []).extend([k] * mult)
        return cls({i: sorted(v, reverse=True) for i, v in out.items()})

    def to_c0(self):
        out = {}
        for i, p in self.parts.items():
            for k in p:
                out[(k, i)] = out.get((k, i), 0) + 1
        return out

    def get(self, i):
        return self.parts.get(i, ())

    def degree(self):
        return sum(sum(p) for p in self.parts.values())

    def __eq__(self, other):
        return isinstance(other, PartitionTuple) and self.parts == other.parts

    def __hash__(self):
        return hash(tuple(sorted(self.parts.items())))

    def __repr__(self):
        return f"PartitionTuple({dict(sorted(self.parts.items()))})"

    def to_json(self):
        return {str(i): list(p) for i, p in sorted(self.parts.items())}


def tuple_in_lambda(c0: PartitionTuple, m) -> bool:
    """m maps i to <h_i, lambda>."""
    return all(len(p) <= m.get(i, 0) for i, p in c0.parts.items())


def partition_tuples(m, degree):
    """All partition tuples of total degree ``degree`` with l(lambda^(i)) <= m_i."""
    idx = sorted(i for i, v in m.items() if v > 0)
    for split in _compositions(degree, len(idx)):
        choices = [list(partitions(d, max_len=m[i])) for i, d in zip(idx, split)]
        for combo in itertools.product(*choices):
            yield PartitionTuple(dict(zip(idx, combo)))


def _compositions(n, k):
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Schur functions


def complete_homogeneous(k, variables, sign=1):
    if k < 0:
        return MultiLaurentZ(variables)
    m = len(variables)
    terms = {}
    for combo in itertools.combinations_with_replacement(range(m), k):
        e = [0] * m
        for j in combo:
            e[j] += sign
        terms[tuple(e)] = RONE
    return MultiLaurentZ(variables, terms)


def _det(matrix, zero):
    n = len(matrix)
    if n == 0:
        return None
    total = zero
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = None
        for r in range(n):
            entry = matrix[r][perm[r]]
            if entry.is_zero():
                term = None
                break
            term = entry if term is None else term * entry
        else:
            total = total + term if inv % 2 == 0 else total - term
    return total


def schur_poly(lam, variables, sign=1):
    """Jacobi-Trudi s_lam = det(h_{lam_k - k + l}) in the given variables.

    ``sign = -1`` substitutes z -> z^-1.
    """
    lam = _check_partition(lam)
    variables = tuple(variables)
    if len(lam) > len(variables):
        return MultiLaurentZ(variables)
    t = len(lam)
    if t == 0:
        return MultiLaurentZ.one(variables)
    matrix = [[complete_homogeneous(lam[k] - k + l, variables, sign) for l in range(t)] for k in range(t)]
    return _det(matrix, MultiLaurentZ(variables))


def loop_variables(m):
    """Ordered variable names (i, nu) for the shape m: i -> m_i."""
    return tuple((i, nu) for i in sorted(m) for nu in range(1, m[i] + 1))


def schur_product(c0: PartitionTuple, m, sign=1, variables=None):
    """prod_i s_{lambda^(i)}(z_{i,.}^{sign}) over the loop variables of shape m."""
    if variables is None:
        variables = loop_variables(m)
    out = MultiLaurentZ.one(variables)
    for i in sorted(set(c0.parts) | set(m)):
        p = c0.get(i)
        if not p:
            continue
        block = tuple(v for v in variables if v[0] == i)
        if len(p) > len(block):
            return MultiLaurentZ(variables)
        local = schur_poly(p, block, sign)
        out = out * _embed(local, variables)
    return out


def _embed(f, variables):
    pos = [variables.index(v) for v in f.variables]
    terms = {}
    for e, c in f.terms.items():
        full = [0] * len(variables)
        for p, a in zip(pos, e):
            full[p] = a
        terms[tuple(full)] = c
    return MultiLaurentZ(variables, terms)


@lru_cache(maxsize=None)
def vandermonde_weight(m):
    """Coefficients of prod_{mu != nu}(1 - z_mu/z_nu) in m variables (integer dict)."""
    out = {(0,) * m: 1}
    for a in range(m):
        for b in range(m):
            if a == b:
                continue
            shift = [0] * m
            shift[a] += 1
            shift[b] -= 1
            new = {}
            for e, c in out.items():
                new[e] = new.get(e, 0) + c
                e2 = tuple(x + y for x, y in zip(e, shift))
                new[e2] = new.get(e2, 0) - c
            out = {e: c for e, c in new.items() if c}
    return out


def weight_factor(m_shape, variables):
    """prod over blocks of the weight function, embedded in ``variables``."""
    out = MultiLaurentZ.one(variables)
    for i in sorted(m_shape):
        block = tuple(v for v in variables if v[0] == i)
        if len(block) != m_shape[i]:
            raise ValueError(f"variable shape mismatch for block {i}")
        local = MultiLaurentZ(block, {e: c for e, c in vandermonde_weight(len(block)).items()})
        out = out * _embed(local, variables)
    return out


def macdonald_pair(f: MultiLaurentZ, g: MultiLaurentZ, m_shape) -> RatFunc:
    """prod_i (1/m_i!) [ f * bar_z(g) * prod_{mu != nu}(1 - z_mu/z_nu) ]_1."""
    variables = loop_variables(m_shape)
    if f.variables != variables or g.variables != variables:
        raise ValueError("variable-shape mismatch in macdonald_pair")
    wf = vandermonde_weight_multi(m_shape)
    gb = g.bar_z()
    total = RZERO
    # constant term of f * gb * W = sum over f-terms, gb-terms with W-coefficient at -(e1+e2)
    for e1, c1 in f.terms.items():
        for e2, c2 in gb.terms.items():
            need = tuple(-(a + b) for a, b in zip(e1, e2))
            w = wf.get(need)
            if w:
                total = total + c1 * c2 * w
    norm = 1
    for v in m_shape.values():
        norm *= math.factorial(v)
    return total * RatFunc(Laurent(Fraction(1, norm)))


@lru_cache(maxsize=None)
def _vw_multi(shape_items):
    shape = dict(shape_items)
    variables = loop_variables(shape)
    w = weight_factor(shape, variables)
    return {e: c.num.constant() for e, c in w.terms.items()}


def vandermonde_weight_multi(m_shape):
    return _vw_multi(tuple(sorted(m_shape.items())))


# ---------------------------------------------------------------------------
# Newton transition between power sums and elementary / complete functions


def newton_transition(k):
    """Express e_1..e_k and h_1..h_k as polynomials in p_1..p_k.

    Returns ``(elementary, complete)``: lists indexed 0..k where entry n maps
    a partition (the power-sum monomial p_mu) to its rational coefficient.
    Both families are triangular in the dominance-free sense that e_n, h_n only
    involve p_mu with |mu| = n, and p_n enters with coefficient (-1)^(n-1)/n and 1/n.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    elem = [{(): Fraction(1)}]
    comp = [{(): Fraction(1)}]
    for n in range(1, k + 1):
        e_n, h_n = {}, {}
        for r in range(1, n + 1):
            sgn = (-1) ** (r - 1)
            for mu, c in elem[n - r].items():
                key = tuple(sorted(mu + (r,), reverse=True))
                e_n[key] = e_n.get(key, 0) + Fraction(sgn, n) * c
            for mu, c in comp[n - r].items():
                key = tuple(sorted(mu + (r,), reverse=True))
                h_n[key] = h_n.get(key, 0) + Fraction(1, n) * c
        elem.append({m: c for m, c in e_n.items() if c})
        comp.append({m: c for m, c in h_n.items() if c})
    return elem, comp


def power_sums_from(family, k):
    """Inverse transition: p_1..p_k as polynomials in the given family's generators.

    ``family`` is 'e' or 'h'; keys of the result are partitions meaning the
    monomial x_{mu_1} x_{mu_2} ... in the family's generators.
    """
    out = [{}]
    for n in range(1, k + 1):
        # Newton: p_n = (-1)^(n-1) n e_n + sum_{r=1}^{n-1} (-1)^(r-1) e_r p_{n-r}   (for e)
        #         p_n = n h_n - sum_{r=1}^{n-1} h_r p_{n-r}                          (for h)
        p_n = {(n,): Fraction((-1) ** (n - 1) * n if family == "e" else n)}
        for r in range(1, n):
            c_r = Fraction((-1) ** (r - 1)) if family == "e" else Fraction(-1)
            for mu, c in out[n - r].items():
                key = tuple(sorted(mu + (r,), reverse=True))
                p_n[key] = p_n.get(key, 0) + c_r * c
        out.append({m: c for m, c in p_n.items() if c})
    return out
