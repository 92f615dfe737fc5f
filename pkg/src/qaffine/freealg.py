"""The graded free algebra on the generators E_i, i in {0,...,n}.

Elements carry a single Q(q) scale times a map {word: integer Laurent
coefficient}, which keeps the hot operations (products, derivations,
consolidation) division-free.  Quotient-level equality lives in form.py.
"""

from fractions import Fraction

from ._speed import kernels as _k
from .cartan import Weight
from .scalar import (RF_ONE, LaurentPoly, RationalFunction, SeriesRing,
                     q_binom, q_fact_rf, rf)

DEFAULT_HEIGHT_CAP = 12


class HeightCapExceeded(RuntimeError):
    pass


def _gcd_scales(s1, s2):
    """Common scale s with s1 = s*m1, s2 = s*m2 and m1, m2 Laurent dicts."""
    from math import gcd as igcd

    from .scalar import (_content, _list_to_lp, _lp_to_list, _poly_divexact,
                         _poly_gcd, _poly_mul)
    if s1.num == s2.num and s1.den == s2.den:
        return s1, {0: 1}, {0: 1}
    vn1, n1 = _lp_to_list(s1.num)
    vn2, n2 = _lp_to_list(s2.num)
    vd1, d1 = _lp_to_list(s1.den)
    vd2, d2 = _lp_to_list(s2.den)
    v1 = vn1 - vd1
    v2 = vn2 - vd2
    g = _poly_gcd(n1, n2)
    dg = _poly_gcd(d1, d2)
    lcm_d = _poly_mul(d1, _poly_divexact(d2, dg))
    m1 = _poly_mul(_poly_divexact(n1, g), _poly_divexact(d2, dg))
    m2 = _poly_mul(_poly_divexact(n2, g), _poly_divexact(d1, dg))
    cg = igcd(_content(m1), _content(m2))
    if cg > 1:
        m1 = [c // cg for c in m1]
        m2 = [c // cg for c in m2]
        g = [c * cg for c in g]
    v = min(v1, v2)
    s = RationalFunction(_list_to_lp(v, g), _list_to_lp(0, lcm_d))
    return s, _list_to_lp(v1 - v, m1), _list_to_lp(v2 - v, m2)


class FreeElement:
    """Finite Q(q)-combination of words over the node alphabet."""

    __slots__ = ("n", "scale", "terms")

    def __init__(self, n, scale=None, terms=None):
        self.n = n
        self.scale = scale if scale is not None else RF_ONE
        self.terms = terms if terms is not None else {}
        if not self.terms:
            self.scale = RF_ONE

    # -- constructors
    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, RF_ONE, {b"": {0: 1}})

    @classmethod
    def generator(cls, n, i):
        if not 0 <= i <= n:
            raise ValueError("generator index out of range")
        return cls(n, RF_ONE, {bytes([i]): {0: 1}})

    @classmethod
    def from_word(cls, n, word, coeff=None):
        w = bytes(word)
        if any(c > n for c in w):
            raise ValueError("letter out of range")
        el = cls(n, RF_ONE, {w: {0: 1}})
        if coeff is not None:
            el = el.scaled(coeff)
        return el

    # -- predicates and accessors
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def num_terms(self):
        return len(self.terms)

    def words(self):
        return self.terms.keys()

    def coefficient(self, word):
        w = bytes(word)
        c = self.terms.get(w)
        if c is None:
            return RationalFunction.from_int(0)
        return self.scale * RationalFunction(dict(c))

    def max_height(self):
        return max((len(w) for w in self.terms), default=0)

    def is_homogeneous(self):
        return len({self._word_weight(w) for w in self.terms}) <= 1

    def _word_weight(self, w):
        d = [0] * (self.n + 1)
        for c in w:
            d[c] += 1
        return Weight(d)

    def weight(self):
        ws = {self._word_weight(w) for w in self.terms}
        if len(ws) != 1:
            raise ValueError("element is not homogeneous")
        return next(iter(ws))

    def homogeneous_components(self):
        buckets = {}
        for w, c in self.terms.items():
            buckets.setdefault(self._word_weight(w), {})[w] = c
        return {wt: FreeElement(self.n, self.scale, t) for wt, t in buckets.items()}

    # -- ring operations
    def __add__(self, other):
        self._check_compat(other)
        if not other.terms:
            return FreeElement(self.n, self.scale, dict(self.terms))
        if not self.terms:
            return FreeElement(other.n, other.scale, dict(other.terms))
        s, m1, m2 = _gcd_scales(self.scale, other.scale)
        acc = {}
        _k.fe_scaled_add_into(acc, m1, self.terms)
        _k.fe_scaled_add_into(acc, m2, other.terms)
        return FreeElement(self.n, s, acc)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __neg__(self):
        return self.scaled(-1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction, LaurentPoly)):
            return self.scaled(other)
        self._check_compat(other)
        if not self.terms or not other.terms:
            return FreeElement.zero(self.n)
        ht = self.max_height() + other.max_height()
        if ht > _height_cap[0]:
            raise HeightCapExceeded("product height %d exceeds cap %d"
                                    % (ht, _height_cap[0]))
        return FreeElement(self.n, self.scale * other.scale,
                           _k.fe_mul(self.terms, other.terms))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction, LaurentPoly)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, c):
        c = rf(c) if not isinstance(c, RationalFunction) else c
        if c.is_zero() or not self.terms:
            return FreeElement.zero(self.n)
        return FreeElement(self.n, self.scale * c, dict(self.terms))

    def shifted(self, e):
        """Multiply by q^e."""
        return self.scaled(RationalFunction.q_power(e))

    def _check_compat(self, other):
        if self.n != other.n:
            raise ValueError("mixed alphabets")

    def __eq__(self, other):
        """Equality of free-algebra representatives (not in the quotient)."""
        if not isinstance(other, FreeElement):
            return NotImplemented
        diff = self - other
        return not diff.terms

    def __hash__(self):
        raise TypeError("FreeElement is unhashable")

    # -- symmetries
    def sigma(self):
        """Anti-automorphism: reverse every word, fix coefficients."""
        out = {}
        for w, c in self.terms.items():
            rw = w[::-1]
            cur = out.get(rw)
            if cur is None:
                out[rw] = dict(c)
            else:
                out[rw] = _k.lp_add(cur, c)
                if not out[rw]:
                    del out[rw]
        return FreeElement(self.n, self.scale, out)

    def bar(self):
        """Conjugate every coefficient by q -> q^-1; words are fixed."""
        out = {w: {-e: v for e, v in c.items()} for w, c in self.terms.items()}
        return FreeElement(self.n, self.scale.bar(), out)

    # -- normalization: pull common content and q-powers into the scale
    def normalized(self):
        if not self.terms:
            return FreeElement.zero(self.n)
        from math import gcd as igcd
        g = 0
        lo = None
        hi = None
        for c in self.terms.values():
            for e, v in c.items():
                g = igcd(g, abs(v))
            mn, mx = min(c), max(c)
            lo = mn if lo is None else min(lo, mn)
            hi = mx if hi is None else max(hi, mx)
        if g == 1 and lo == 0:
            return self
        mult = RationalFunction({lo: g})
        terms = {w: {e - lo: v // g for e, v in c.items()}
                 for w, c in self.terms.items()}
        return FreeElement(self.n, self.scale * mult, terms)

    # -- serialization
    def text(self):
        """Sum of terms "coeff * E[i1]E[i2]..." with canonical coefficients."""
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = (self.scale * RationalFunction(dict(self.terms[w]))).serialize()
            mono = "".join("E[%d]" % ch for ch in w) if w else "1"
            parts.append("%s * %s" % (c, mono))
        return " + ".join(parts)

    def __repr__(self):
        if len(self.terms) > 6:
            return "<FreeElement with %d terms>" % len(self.terms)
        return self.text()


_height_cap = [DEFAULT_HEIGHT_CAP]


def set_height_cap(cap):
    _height_cap[0] = cap


def get_height_cap():
    return _height_cap[0]


def mul(x, y):
    return x * y


def add(x, y):
    return x + y


def scalar_mul(c, x):
    return x.scaled(c)


def commutator(x, y):
    return x * y - y * x


def q_commutator(x, y, e):
    """x*y - q^e * y*x."""
    return x * y - (y * x).shifted(e)


# ---------------------------------------------------------------------------
# derivations


def r_i(datum, x, i):
    """Right derivation: strips a trailing E_i with the product rule
    r_i(xy) = q^(|y|,alpha_i) r_i(x) y + x r_i(y)."""
    arow = tuple(datum.a[c][i] for c in range(datum.n + 1))
    return FreeElement(x.n, x.scale, _k.fe_ri(x.terms, i, arow))


def ir(datum, x, i):
    """Left derivation: strips a leading E_i with the product rule
    ir(xy) = ir(x) y + q^(|x|,alpha_i) x ir(y)."""
    arow = tuple(datum.a[c][i] for c in range(datum.n + 1))
    return FreeElement(x.n, x.scale, _k.fe_ir(x.terms, i, arow))


# ---------------------------------------------------------------------------
# divided powers


def divided_power(x, r):
    if r < 0:
        raise ValueError("divided power needs r >= 0")
    if r == 0:
        return FreeElement.one(x.n)
    out = x
    for _ in range(r - 1):
        out = out * x
    return out.scaled(q_fact_rf(r).inverse())


# ---------------------------------------------------------------------------
# the twisted tensor square and the coproduct


class TensorElement:
    """Q(q)-combination of pure tensors of words with the twisted product
    (x1 (x) x2)(y1 (x) y2) = q^(|x2|,|y1|) x1y1 (x) x2y2."""

    __slots__ = ("datum", "scale", "terms")

    def __init__(self, datum, scale=None, terms=None):
        self.datum = datum
        self.scale = scale if scale is not None else RF_ONE
        self.terms = terms if terms is not None else {}
        if not self.terms:
            self.scale = RF_ONE

    @classmethod
    def zero(cls, datum):
        return cls(datum)

    @classmethod
    def one(cls, datum):
        return cls(datum, RF_ONE, {(b"", b""): {0: 1}})

    def is_zero(self):
        return not self.terms

    def coefficient(self, w1, w2):
        c = self.terms.get((bytes(w1), bytes(w2)))
        if c is None:
            return RationalFunction.from_int(0)
        return self.scale * RationalFunction(dict(c))

    def __add__(self, other):
        if not other.terms:
            return TensorElement(self.datum, self.scale, dict(self.terms))
        if not self.terms:
            return TensorElement(other.datum, other.scale, dict(other.terms))
        s, m1, m2 = _gcd_scales(self.scale, other.scale)
        acc = {}
        _k.fe_scaled_add_into(acc, m1, self.terms)
        _k.fe_scaled_add_into(acc, m2, other.terms)
        return TensorElement(self.datum, s, acc)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        c = rf(c) if not isinstance(c, RationalFunction) else c
        if c.is_zero() or not self.terms:
            return TensorElement.zero(self.datum)
        return TensorElement(self.datum, self.scale * c, dict(self.terms))

    def _twist(self, x2, y1):
        a = self.datum.a
        e = 0
        for c1 in x2:
            row = a[c1]
            for c2 in y1:
                e += row[c2]
        return e

    def __mul__(self, other):
        out = {}
        for (x1, x2), c1 in self.terms.items():
            for (y1, y2), c2 in other.terms.items():
                e = self._twist(x2, y1)
                key = (x1 + y1, x2 + y2)
                cur = out.get(key)
                if cur is None:
                    cur = {}
                    out[key] = cur
                for e1, v1 in c1.items():
                    for e2, v2 in c2.items():
                        k = e1 + e2 + e
                        s = cur.get(k, 0) + v1 * v2
                        if s:
                            cur[k] = s
                        elif k in cur:
                            del cur[k]
                if not cur:
                    del out[key]
        return TensorElement(self.datum, self.scale * other.scale, out)

    def __eq__(self, other):
        return not (self - other).terms

    def legs(self):
        return self.terms.keys()

    def __repr__(self):
        return "<TensorElement with %d terms>" % len(self.terms)


def coproduct_r(datum, x):
    """Lusztig's coproduct r: algebra map into the twisted tensor square
    with r(E_i) = E_i (x) 1 + 1 (x) E_i, expanded wordwise."""
    a = datum.a
    out = {}
    for w, c in x.terms.items():
        # process letters right to left; prepend to either leg
        pieces = {(b"", b""): dict(c)}
        for p in range(len(w) - 1, -1, -1):
            ch = w[p:p + 1]
            ci = w[p]
            row = a[ci]
            nxt = {}
            for (w1, w2), cc in pieces.items():
                key1 = (ch + w1, w2)
                cur = nxt.get(key1)
                if cur is None:
                    nxt[key1] = dict(cc)
                else:
                    nxt[key1] = _k.lp_add(cur, cc)
                    if not nxt[key1]:
                        del nxt[key1]
                e = sum(row[c2] for c2 in w1)
                key2 = (w1, ch + w2)
                cur = nxt.get(key2)
                if cur is None:
                    nxt[key2] = _k.lp_shift(cc, e)
                else:
                    nxt[key2] = _k.lp_add(cur, _k.lp_shift(cc, e))
                    if not nxt[key2]:
                        del nxt[key2]
            pieces = nxt
        for key, cc in pieces.items():
            cur = out.get(key)
            if cur is None:
                out[key] = cc
            else:
                out[key] = _k.lp_add(cur, cc)
                if not out[key]:
                    del out[key]
    return TensorElement(datum, x.scale, out)


# ---------------------------------------------------------------------------
# quantum Serre elements


def quantum_serre(datum, i, j):
    """sum_r (-1)^r [1-a_ij choose r] E_i^r E_j E_i^(1-a_ij-r), i != j."""
    if i == j:
        raise ValueError("Serre elements need i != j")
    m = 1 - datum.a[i][j]
    n = datum.n
    out = FreeElement.zero(n)
    for r in range(m + 1):
        word = bytes([i] * r + [j] + [i] * (m - r))
        coeff = rf(q_binom(m, r)) * ((-1) ** r)
        out = out + FreeElement.from_word(n, word, coeff)
    return out


# ---------------------------------------------------------------------------
# series coefficients over the free algebra


def free_series_ring(n):
    return SeriesRing(
        zero=lambda: FreeElement.zero(n),
        one=lambda: FreeElement.one(n),
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        mul_fraction=lambda a, fr: a.scaled(Fraction(fr)),
        is_zero=lambda a: a.is_zero(),
    )
