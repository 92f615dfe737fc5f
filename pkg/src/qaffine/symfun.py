"""The imaginary subalgebra as a ring of symmetric functions.

Elements are kept as polynomials in the commuting generators P~_{k,i}
(monomial = sorted tuple of (k, i) factors) and materialized into the free
algebra lazily.  An independent classical symmetric-functions oracle over the
complete homogeneous basis cross-validates the Jacobi-Trudi and Pieri layers
through the substitution h_k -> P~_{k,i}.
"""

from fractions import Fraction
from itertools import permutations

from .cartan import check_partition, pieri_shapes
from .form import equals_in_uplus
from .freealg import FreeElement
from .scalar import (PowerSeries, RF_ONE, RationalFunction, q_int_rf, rf,
                     series_exp)
from .freealg import free_series_ring


class ImaginaryElement:
    """Element of the imaginary subalgebra; polynomial rep and/or free rep."""

    __slots__ = ("table", "poly", "_free")

    def __init__(self, table, poly=None, free=None):
        self.table = table
        self.poly = poly
        self._free = free
        if poly is None and free is None:
            raise ValueError("need at least one representation")

    # -- constructors
    @classmethod
    def zero(cls, table):
        return cls(table, poly={})

    @classmethod
    def one(cls, table):
        return cls(table, poly={(): RF_ONE})

    @classmethod
    def generator(cls, table, k, i):
        """P~_{k,i} as a monomial."""
        return cls(table, poly={((k, i),): RF_ONE})

    @classmethod
    def from_free(cls, table, free):
        return cls(table, free=free)

    # -- polynomial arithmetic
    def _require_poly(self):
        if self.poly is None:
            raise ValueError("element has no polynomial representation")
        return self.poly

    def __add__(self, other):
        p1, p2 = self._require_poly(), other._require_poly()
        out = dict(p1)
        for m, c in p2.items():
            s = out.get(m, RationalFunction.from_int(0)) + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return ImaginaryElement(self.table, poly=out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __mul__(self, other):
        p1, p2 = self._require_poly(), other._require_poly()
        out = {}
        for m1, c1 in p1.items():
            for m2, c2 in p2.items():
                m = tuple(sorted(m1 + m2))
                s = out.get(m, RationalFunction.from_int(0)) + c1 * c2
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return ImaginaryElement(self.table, poly=out)

    def scaled(self, c):
        c = rf(c) if not isinstance(c, RationalFunction) else c
        p = self._require_poly()
        if c.is_zero():
            return ImaginaryElement.zero(self.table)
        return ImaginaryElement(self.table, poly={m: cc * c for m, cc in p.items()})

    def is_zero_poly(self):
        return self.poly is not None and not self.poly

    def degree_delta(self):
        """Total delta-degree (if the polynomial rep is homogeneous)."""
        p = self._require_poly()
        degs = {sum(k for k, _ in m) for m in p}
        if len(degs) > 1:
            raise ValueError("not homogeneous in the delta grading")
        return degs.pop() if degs else 0

    # -- materialization into the free algebra
    def free(self):
        if self._free is None:
            table = self.table
            n = table.datum.n
            acc = FreeElement.zero(n)
            for m, c in self.poly.items():
                piece = FreeElement.one(n)
                for (k, i) in m:
                    piece = piece * table.p_tilde_free(k, i)
                acc = acc + piece.scaled(c)
            self._free = acc
        return self._free

    def equals(self, other):
        """Equality in the quotient (materializes both sides)."""
        return equals_in_uplus(self.free(), other.free(), self.table.datum)

    def __repr__(self):
        if self.poly is None:
            return "<ImaginaryElement (free only)>"
        parts = []
        for m in sorted(self.poly):
            c = self.poly[m].serialize()
            mono = "*".join("Pt[%d,%d]" % ki for ki in m) if m else "1"
            parts.append("%s * %s" % (c, mono))
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# the generators


def P(table, k, i):
    """P_{k,i}; carried as a free element (it is polynomial in the P~ too,
    but the defining recursion lives at the free level)."""
    return ImaginaryElement.from_free(table, table.p_free(k, i))


def P_tilde(table, k, i):
    out = ImaginaryElement.generator(table, k, i)
    out._free = table.p_tilde_free(k, i)
    return out


def newton_crosscheck(table, k, i):
    """P~_{k,i} = (1/k) sum_s (s/[s]) E_{s delta,i} P~_{k-s,i}."""
    datum = table.datum
    acc = FreeElement.zero(datum.n)
    for s in range(1, k + 1):
        c = q_int_rf(s).inverse() * Fraction(s, k)
        acc = acc + (table.imag_E(s, i) * table.p_tilde_free(k - s, i)).scaled(c)
    return equals_in_uplus(acc, table.p_tilde_free(k, i), datum)


def p_generating_function_check(table, k, i, tilde=True):
    """Check the exponential generating identity for P or P~ up to degree k."""
    datum = table.datum
    ring = free_series_ring(datum.n)
    n = datum.n
    coeffs = [FreeElement.zero(n)]
    for s in range(1, k + 1):
        sign = 1 if tilde else -1
        coeffs.append(table.imag_E(s, i).scaled(q_int_rf(s).inverse() * sign))
    exp = series_exp(PowerSeries(ring, k, coeffs))
    for s in range(0, k + 1):
        want = table.p_tilde_free(s, i) if tilde else table.p_free(s, i)
        if not equals_in_uplus(exp[s], want, datum):
            return False
    return True


# ---------------------------------------------------------------------------
# Schur elements


def schur(table, lam, i, t=None):
    """s_{lambda,i} by the Jacobi-Trudi determinant det(P~_{lambda_k - k + m})."""
    lam = check_partition(lam)
    size = len(lam) if t is None else t
    if size < len(lam):
        raise ValueError("matrix size below the partition length")
    if size == 0:
        return ImaginaryElement.one(table)

    def entry(k, m):
        # 1-indexed row k, column m; parts beyond the length are zero
        lam_k = lam[k - 1] if k - 1 < len(lam) else 0
        d = lam_k - k + m
        if d < 0:
            return None
        if d == 0:
            return ImaginaryElement.one(table)
        return ImaginaryElement.generator(table, d, i)

    acc = ImaginaryElement.zero(table)
    for perm in permutations(range(1, size + 1)):
        inv = sum(1 for a in range(size) for b in range(a + 1, size)
                  if perm[a] > perm[b])
        sign = -1 if inv % 2 else 1
        piece = ImaginaryElement.one(table)
        ok = True
        for k in range(1, size + 1):
            e = entry(k, perm[k - 1])
            if e is None:
                ok = False
                break
            piece = piece * e
        if ok:
            acc = acc + piece.scaled(sign)
    return acc


def S(table, c0):
    """S_{c0}: the product over colors of Schur elements, where the color-i
    partition has c0(k delta, i) parts equal to k."""
    lam_by_color = {}
    for (k, i), mult in c0.items():
        lam_by_color.setdefault(i, []).extend([k] * mult)
    out = ImaginaryElement.one(table)
    for i in sorted(lam_by_color):
        lam = tuple(sorted(lam_by_color[i], reverse=True))
        out = out * schur(table, lam, i)
    return out


# ---------------------------------------------------------------------------
# the abstract symmetric-functions oracle (complete homogeneous basis)


class AbstractSymFn:
    """Symmetric function over Q(q) in the h-basis: {partition: coeff}."""

    __slots__ = ("h",)

    def __init__(self, h=None):
        self.h = h if h is not None else {}

    @classmethod
    def one(cls):
        return cls({(): RF_ONE})

    @classmethod
    def h_gen(cls, k):
        return cls({(k,): RF_ONE}) if k else cls.one()

    def __add__(self, other):
        out = dict(self.h)
        for m, c in other.h.items():
            s = out.get(m, RationalFunction.from_int(0)) + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return AbstractSymFn(out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        c = rf(c) if not isinstance(c, RationalFunction) else c
        return AbstractSymFn({m: cc * c for m, cc in self.h.items()})

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.h.items():
            for m2, c2 in other.h.items():
                m = tuple(sorted(m1 + m2, reverse=True))
                s = out.get(m, RationalFunction.from_int(0)) + c1 * c2
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return AbstractSymFn(out)

    def __eq__(self, other):
        diff = self - other
        return not diff.h

    def power_sums(self, kmax):
        """Derived power sums via Newton: k h_k = sum_s p_s h_{k-s}."""
        # solve for p_k in the h-polynomial ring
        ps = {}
        for k in range(1, kmax + 1):
            acc = AbstractSymFn.h_gen(k).scaled(k)
            for s in range(1, k):
                acc = acc - ps[s] * AbstractSymFn.h_gen(k - s)
            ps[k] = acc
        return ps

    def __repr__(self):
        parts = []
        for m in sorted(self.h):
            parts.append("%s*h%s" % (self.h[m].serialize(), list(m)))
        return " + ".join(parts) if parts else "0"


def abstract_schur(lam, t=None):
    """Jacobi-Trudi in the abstract h-basis."""
    lam = check_partition(lam)
    size = len(lam) if t is None else t
    if size == 0:
        return AbstractSymFn.one()
    acc = AbstractSymFn()
    for perm in permutations(range(1, size + 1)):
        inv = sum(1 for a in range(size) for b in range(a + 1, size)
                  if perm[a] > perm[b])
        sign = -1 if inv % 2 else 1
        piece = AbstractSymFn.one()
        ok = True
        for k in range(1, size + 1):
            lam_k = lam[k - 1] if k - 1 < len(lam) else 0
            d = lam_k - k + perm[k - 1]
            if d < 0:
                ok = False
                break
            piece = piece * AbstractSymFn.h_gen(d)
        if ok:
            acc = acc + piece.scaled(sign)
    return acc


def abstract_pieri(k, mu):
    """s_(k) * s_mu and the predicted sum over horizontal strips, in h-terms."""
    lhs = abstract_schur((k,)) * abstract_schur(mu) if mu else abstract_schur((k,))
    rhs = AbstractSymFn()
    for lam in pieri_shapes(k, mu):
        rhs = rhs + abstract_schur(lam)
    return lhs, rhs


def hom_to_U0(table, f, i):
    """Substitute h_k -> P~_{k,i} into an abstract symmetric function."""
    out = ImaginaryElement.zero(table)
    for m, c in f.h.items():
        piece = ImaginaryElement.one(table)
        for k in m:
            piece = piece * ImaginaryElement.generator(table, k, i)
        out = out + piece.scaled(c)
    return out
