"""Exact scalar arithmetic over the ground field Q(q).

Provides integer/rational Laurent polynomials in q, the rational function
field Q(q) with a bit-exact canonical form, membership in the subring
A = Q(q) ∩ Q[[q^-1]] together with the value at q = infinity, q-combinatorics
([m], [m]!, binomials), and truncated power series in an auxiliary variable u
over an arbitrary commutative Q-algebra of coefficients.
"""

from fractions import Fraction
from math import gcd

from ._speed import kernels as _k

# ---------------------------------------------------------------------------
# integer polynomial helpers (dense lists, ascending degree)


def _content(coeffs):
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def _primitive(coeffs):
    g = _content(coeffs)
    if g > 1:
        coeffs = [c // g for c in coeffs]
    return coeffs


def _trim_list(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul(a, b):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                r[i + j] += ca * cb
    return _trim_list(r)


def _poly_pseudo_rem(a, b):
    """Pseudo-remainder of a by b (both nonempty, deg a >= deg b)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        da, la = len(a) - 1, a[-1]
        a = [c * lb for c in a]
        shift = da - db
        for j in range(len(b)):
            a[shift + j] -= la * b[j]
        _trim_list(a)
    return a


def _poly_gcd(a, b):
    """Primitive gcd of integer polynomials with positive leading coefficient."""
    a = _primitive(_trim_list(list(a)))
    b = _primitive(_trim_list(list(b)))
    if not a:
        r = b
    elif not b:
        r = a
    else:
        while b:
            if len(a) < len(b):
                a, b = b, a
            r = _poly_pseudo_rem(a, b)
            a, b = b, _primitive(r)
        r = a
    if r and r[-1] < 0:
        r = [-c for c in r]
    return r


def _poly_divexact(a, b):
    """Exact division a / b over Q, returned as an integer polynomial.

    Valid only when b divides a in Q[q] and the quotient is integral, which
    holds for the cofactor-by-primitive-gcd divisions used here.
    """
    if not a:
        return []
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lb = Fraction(b[-1])
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / lb
        q[i] = c
        if c:
            for j in range(len(b)):
                a[i + j] -= c * b[j]
    out = []
    for c in q:
        if c.denominator != 1:
            raise ArithmeticError("non-integral exact division")
        out.append(c.numerator)
    return _trim_list(out)


def _lp_to_list(d):
    """Laurent dict -> (valuation, dense ascending list)."""
    if not d:
        return 0, []
    v = min(d)
    top = max(d)
    out = [0] * (top - v + 1)
    for e, c in d.items():
        out[e - v] = c
    return v, out


def _list_to_lp(v, coeffs):
    return {v + i: c for i, c in enumerate(coeffs) if c}


# ---------------------------------------------------------------------------
# Laurent polynomials with rational coefficients (user-facing)


class LaurentPoly:
    """Laurent polynomial in q over Q, stored as {exponent: Fraction}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    d[int(e)] = c
        self.coeffs = d

    @classmethod
    def constant(cls, c):
        return cls({0: Fraction(c)})

    @classmethod
    def q_power(cls, e, c=1):
        return cls({e: Fraction(c)})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other):
        r = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = r.get(e, 0) + c
            if s:
                r[e] = s
            elif e in r:
                del r[e]
        out = LaurentPoly()
        out.coeffs = r
        return out

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        out = LaurentPoly()
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        r = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = r.get(e, 0) + c1 * c2
                if s:
                    r[e] = s
                elif e in r:
                    del r[e]
        out = LaurentPoly()
        out.coeffs = r
        return out

    __rmul__ = __mul__

    def bar(self):
        """The involution q -> q^-1."""
        out = LaurentPoly()
        out.coeffs = {-e: c for e, c in self.coeffs.items()}
        return out

    def is_bar_invariant(self):
        return self.coeffs == {-e: c for e, c in self.coeffs.items()}

    def is_integral(self):
        """True iff the polynomial lies in Z[q, q^-1]."""
        return all(c.denominator == 1 for c in self.coeffs.values())

    def to_int_dict(self):
        if not self.is_integral():
            raise ValueError("not an integer Laurent polynomial")
        return {e: c.numerator for e, c in self.coeffs.items()}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                parts.append(str(c))
            else:
                qs = "q" if e == 1 else "q^%d" % e
                if c == 1:
                    parts.append(qs)
                elif c == -1:
                    parts.append("-" + qs)
                else:
                    parts.append("%s*%s" % (c, qs))
        s = parts[0]
        for p in parts[1:]:
            s += "+" + p if not p.startswith("-") else p
        return s

    __repr__ = __str__


# ---------------------------------------------------------------------------
# the field Q(q)


class RationalFunction:
    """Element of Q(q) as a quotient of integer Laurent polynomials.

    Arithmetic is lazy: num/den are only brought to canonical form when the
    fraction grows past a size threshold or when a canonical answer is needed
    (equality uses cross-multiplication and never requires reduction).
    """

    __slots__ = ("num", "den")

    _REDUCE_SPAN = 64

    def __init__(self, num, den=None):
        self.num = num
        self.den = den if den is not None else {0: 1}
        if not self.den:
            raise ZeroDivisionError("zero denominator in Q(q)")

    # -- constructors
    @classmethod
    def from_int(cls, c):
        return cls({0: c} if c else {})

    @classmethod
    def from_fraction(cls, fr):
        fr = Fraction(fr)
        return cls({0: fr.numerator} if fr.numerator else {}, {0: fr.denominator})

    @classmethod
    def from_laurent(cls, lp):
        if isinstance(lp, LaurentPoly):
            den = 1
            for c in lp.coeffs.values():
                den = den * c.denominator // gcd(den, c.denominator)
            num = {e: int(c * den) for e, c in lp.coeffs.items()}
            return cls(num, {0: den})
        return cls(dict(lp))

    @classmethod
    def q_power(cls, e):
        return cls({e: 1})

    # -- basic predicates
    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def _span(self):
        n, d = self.num, self.den
        s = 0
        if n:
            s += max(n) - min(n)
        if d:
            s += max(d) - min(d)
        return s

    def _maybe_reduce(self):
        if self._span() > self._REDUCE_SPAN or len(self.den) > 8:
            r = self.reduced()
            self.num, self.den = r.num, r.den
        return self

    # -- arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(_k.lp_add(self.num, other.num), dict(self.den))._maybe_reduce()
        num = _k.lp_add(_k.lp_mul(self.num, other.den), _k.lp_mul(other.num, self.den))
        return RationalFunction(num, _k.lp_mul(self.den, other.den))._maybe_reduce()

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return RationalFunction(_k.lp_neg(self.num), dict(self.den))

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(_k.lp_mul(self.num, other.num),
                                _k.lp_mul(self.den, other.den))._maybe_reduce()

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(q)")
        return RationalFunction(_k.lp_mul(self.num, other.den),
                                _k.lp_mul(self.den, other.num))._maybe_reduce()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("division by zero in Q(q)")
        return RationalFunction(dict(self.den), dict(self.num))

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _k.lp_mul(self.num, other.den) == _k.lp_mul(other.num, self.den)

    def __hash__(self):
        n, d = self.canonical_pair()
        return hash((tuple(sorted(n.items())), tuple(sorted(d.items()))))

    def bar(self):
        """The involution q -> q^-1."""
        return RationalFunction({-e: c for e, c in self.num.items()},
                                {-e: c for e, c in self.den.items()})

    # -- canonical form
    def reduced(self):
        """Fully reduced copy: den primitive-positive, no common factors."""
        if not self.num:
            return RationalFunction({}, {0: 1})
        vn, n = _lp_to_list(self.num)
        vd, d = _lp_to_list(self.den)
        g = _poly_gcd(n, d)
        if len(g) > 1:
            n = _poly_divexact(n, g)
            d = _poly_divexact(d, g)
        cn, cd = _content(n), _content(d)
        cg = gcd(cn, cd)
        if cg > 1:
            n = [c // cg for c in n]
            d = [c // cg for c in d]
        if d[-1] < 0:
            n = [-c for c in n]
            d = [-c for c in d]
        # normalize the net power of q so min(val_num, val_den) == 0
        shift = min(vn, vd)
        return RationalFunction(_list_to_lp(vn - shift, n), _list_to_lp(vd - shift, d))

    def canonical_pair(self):
        r = self.reduced()
        return r.num, r.den

    # -- A-ring and limits
    def top_degree_pair(self):
        r = self.reduced()
        dn = max(r.num) if r.num else None
        dd = max(r.den)
        return dn, dd

    def in_A(self):
        """Membership in A = Q(q) ∩ Q[[q^-1]]: no pole at q = infinity."""
        dn, dd = self.top_degree_pair()
        return dn is None or dn <= dd

    def limit_at_infinity(self):
        """Constant term of the q^-1 expansion; requires membership in A."""
        r = self.reduced()
        if not r.num:
            return Fraction(0)
        dn, dd = max(r.num), max(r.den)
        if dn > dd:
            raise ValueError("not in A: pole at q = infinity")
        if dn < dd:
            return Fraction(0)
        return Fraction(r.num[dn], r.den[dd])

    def is_laurent(self):
        """True iff the value lies in Q[q, q^-1]."""
        r = self.reduced()
        return len(r.den) == 1

    def to_laurent(self):
        r = self.reduced()
        if len(r.den) != 1:
            raise ValueError("not a Laurent polynomial")
        (ed, cd), = r.den.items()
        return LaurentPoly({e - ed: Fraction(c, cd) for e, c in r.num.items()})

    def evaluate(self, q0):
        """Exact evaluation at a rational point q0 != 0."""
        q0 = Fraction(q0)
        num = sum(c * q0 ** e for e, c in self.num.items())
        den = sum(c * q0 ** e for e, c in self.den.items())
        return num / den

    def evaluate_mod(self, a, p):
        """Evaluation at q = a over GF(p); a must be a unit mod p."""
        ainv = pow(a, p - 2, p)

        def ev(d):
            s = 0
            for e, c in d.items():
                s += c * (pow(a, e, p) if e >= 0 else pow(ainv, -e, p))
            return s % p

        num, den = ev(self.num), ev(self.den)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes mod p")
        return num * pow(den, p - 2, p) % p

    # -- serialization: "num/den" with polynomials in descending powers
    @staticmethod
    def _poly_str(d):
        if not d:
            return "0"
        parts = []
        for e in sorted(d, reverse=True):
            c = d[e]
            if e == 0:
                parts.append(str(c))
            else:
                qs = "q" if e == 1 else "q^%d" % e
                if c == 1:
                    parts.append(qs)
                elif c == -1:
                    parts.append("-" + qs)
                else:
                    parts.append("%d*%s" % (c, qs))
        s = parts[0]
        for p in parts[1:]:
            s += "+" + p if not p.startswith("-") else p
        return s

    def serialize(self):
        n, d = self.canonical_pair()
        ns = self._poly_str(n)
        if d == {0: 1}:
            return ns
        ds = self._poly_str(d)
        if len(n) > 1:
            ns = "(%s)" % ns
        if len(d) > 1:
            ds = "(%s)" % ds
        return "%s/%s" % (ns, ds)

    def __str__(self):
        return self.serialize()

    def __repr__(self):
        return "RF(%s)" % self.serialize()


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, int):
        return RationalFunction.from_int(x)
    if isinstance(x, Fraction):
        return RationalFunction.from_fraction(x)
    if isinstance(x, LaurentPoly):
        return RationalFunction.from_laurent(x)
    return NotImplemented


RF_ZERO = RationalFunction.from_int(0)
RF_ONE = RationalFunction.from_int(1)


def rf(x):
    """Coerce an int, Fraction or LaurentPoly into Q(q)."""
    r = _coerce(x)
    if r is NotImplemented:
        raise TypeError("cannot coerce %r into Q(q)" % (x,))
    return r


def in_A(f):
    return rf(f).in_A()


def limit_at_infinity(f):
    return rf(f).limit_at_infinity()


# ---------------------------------------------------------------------------
# q-combinatorics


def q_int(m):
    """[m] = (q^m - q^-m)/(q - q^-1)."""
    if m < 0:
        raise ValueError("q_int requires m >= 0")
    return LaurentPoly({m - 1 - 2 * s: Fraction(1) for s in range(m)})


def q_fact(m):
    if m < 0:
        raise ValueError("q_fact requires m >= 0")
    out = LaurentPoly.constant(1)
    for s in range(2, m + 1):
        out = out * q_int(s)
    return out


def q_binom(m, r):
    """Gaussian binomial [m choose r]; lies in Z[q,q^-1] for m >= r >= 0."""
    if r < 0 or m < r:
        raise ValueError("q_binom requires m >= r >= 0")
    num = RF_ONE
    for s in range(r):
        num = num * rf(q_int(m - s))
    den = rf(q_fact(r))
    return (num / den).to_laurent()


def q_int_rf(m):
    return rf(q_int(m))


def q_fact_rf(m):
    return rf(q_fact(m))


# ---------------------------------------------------------------------------
# truncated power series over a commutative coefficient algebra


class SeriesRing:
    """Coefficient-algebra adapter for PowerSeries.

    zero/one are nullary constructors; add/mul are binary; mul_fraction maps
    (element, Fraction) to an element.  Commutativity of mul is the caller's
    responsibility.
    """

    def __init__(self, zero, one, add, mul, mul_fraction, is_zero=None):
        self.zero = zero
        self.one = one
        self.add = add
        self.mul = mul
        self.mul_fraction = mul_fraction
        self.is_zero = is_zero if is_zero is not None else (lambda x: not x)


RF_SERIES_RING = SeriesRing(
    zero=lambda: RF_ZERO,
    one=lambda: RF_ONE,
    add=lambda a, b: a + b,
    mul=lambda a, b: a * b,
    mul_fraction=lambda a, fr: a * RationalFunction.from_fraction(fr),
    is_zero=lambda a: a.is_zero(),
)


class PowerSeries:
    """Truncated series sum c_k u^k, 0 <= k <= order, over a SeriesRing."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring, order, coeffs=None):
        self.ring = ring
        self.order = order
        if coeffs is None:
            coeffs = [ring.zero() for _ in range(order + 1)]
        else:
            coeffs = list(coeffs)[: order + 1]
            while len(coeffs) < order + 1:
                coeffs.append(ring.zero())
        self.coeffs = coeffs

    def __getitem__(self, k):
        return self.coeffs[k]

    def __add__(self, other):
        order = min(self.order, other.order)
        return PowerSeries(self.ring, order,
                           [self.ring.add(self.coeffs[k], other.coeffs[k])
                            for k in range(order + 1)])

    def __mul__(self, other):
        ring = self.ring
        order = min(self.order, other.order)
        out = [ring.zero() for _ in range(order + 1)]
        for i in range(order + 1):
            if ring.is_zero(self.coeffs[i]):
                continue
            for j in range(order + 1 - i):
                out[i + j] = ring.add(out[i + j], ring.mul(self.coeffs[i], other.coeffs[j]))
        return PowerSeries(ring, order, out)

    def shifted_is_zero_constant(self):
        return self.ring.is_zero(self.coeffs[0])


def series_exp(s):
    """exp of a series with zero constant term, to the same truncation."""
    ring = s.ring
    if not ring.is_zero(s.coeffs[0]):
        raise ValueError("series_exp requires zero constant term")
    order = s.order
    out = [ring.zero() for _ in range(order + 1)]
    out[0] = ring.one()
    term = PowerSeries(ring, order, out)  # running s^k / k!
    acc = PowerSeries(ring, order, list(term.coeffs))
    for k in range(1, order + 1):
        term = term * s
        term = PowerSeries(ring, order,
                           [ring.mul_fraction(c, Fraction(1, k)) for c in term.coeffs])
        acc = acc + term
    return acc


def series_log(s):
    """log of a series with constant term 1, to the same truncation."""
    ring = s.ring
    one = ring.one()
    c0 = s.coeffs[0]
    if not ring.is_zero(ring.add(c0, ring.mul_fraction(one, Fraction(-1)))):
        raise ValueError("series_log requires constant term 1")
    order = s.order
    t = PowerSeries(ring, order, list(s.coeffs))
    t.coeffs[0] = ring.zero()  # s - 1
    acc = PowerSeries(ring, order)
    term = PowerSeries(ring, order)
    term.coeffs[0] = one
    for k in range(1, order + 1):
        term = term * t
        signed = PowerSeries(ring, order,
                             [ring.mul_fraction(c, Fraction((-1) ** (k + 1), k))
                              for c in term.coeffs])
        acc = acc + signed
    return acc
