"""Root datum for affine type A: Cartan matrix, weights, affine roots,
the bilinear pairing, the alternating sign map, and partition combinatorics.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class AffineCartanDatum:
    """Extended Cartan datum of untwisted affine sl_{n+1}.

    a[i][j] is the Cartan matrix over the node set {0, ..., n}; o[i] is the
    sign map on the finite nodes 1..n with o(i) = -o(j) on adjacent nodes.
    """

    n: int
    a: tuple
    o: tuple

    @property
    def nodes(self):
        return range(self.n + 1)

    @property
    def finite_nodes(self):
        return range(1, self.n + 1)

    def adjacent(self, i, j):
        return i != j and self.a[i][j] < 0


def build_datum(n):
    if n < 1:
        raise ValueError("rank must be >= 1")
    size = n + 1
    if n == 1:
        a = ((2, -2), (-2, 2))
    else:
        rows = []
        for i in range(size):
            row = [0] * size
            row[i] = 2
            row[(i + 1) % size] = -1
            row[(i - 1) % size] = -1
            rows.append(tuple(row))
        a = tuple(rows)
    o = tuple((-1) ** i for i in range(size))
    return AffineCartanDatum(n=n, a=a, o=o)


# ---------------------------------------------------------------------------
# weights: integer vectors over the affine node set


class Weight:
    """Element of the affine root lattice in simple-root coordinates."""

    __slots__ = ("d",)

    def __init__(self, d):
        self.d = tuple(d)

    def __add__(self, other):
        return Weight(x + y for x, y in zip(self.d, other.d))

    def __sub__(self, other):
        return Weight(x - y for x, y in zip(self.d, other.d))

    def __neg__(self):
        return Weight(-x for x in self.d)

    def scaled(self, c):
        return Weight(c * x for x in self.d)

    def __eq__(self, other):
        return isinstance(other, Weight) and self.d == other.d

    def __hash__(self):
        return hash(self.d)

    def __getitem__(self, i):
        return self.d[i]

    def __iter__(self):
        return iter(self.d)

    def ht(self):
        return sum(self.d)

    def is_nonnegative(self):
        return all(x >= 0 for x in self.d)

    def is_zero(self):
        return all(x == 0 for x in self.d)

    def support(self):
        return [i for i, x in enumerate(self.d) if x]

    def __repr__(self):
        return "Weight%s" % (self.d,)


def alpha(datum, i):
    return Weight(1 if j == i else 0 for j in datum.nodes)


def delta(datum):
    """The null root; all marks are 1 in type A."""
    return Weight(1 for _ in datum.nodes)


def zero_weight(datum):
    return Weight(0 for _ in datum.nodes)


def pairing(datum, w1, w2):
    """Symmetric bilinear form with (alpha_i, alpha_j) = a_ij."""
    a = datum.a
    total = 0
    for i, x in enumerate(w1.d):
        if x:
            row = a[i]
            for j, y in enumerate(w2.d):
                if y:
                    total += x * y * row[j]
    return total


def finite_positive_roots(datum):
    """Positive roots of the finite A_n subdiagram as interval supports."""
    out = []
    for lo in range(1, datum.n + 1):
        for hi in range(lo, datum.n + 1):
            w = [0] * (datum.n + 1)
            for i in range(lo, hi + 1):
                w[i] = 1
            out.append(Weight(w))
    return out


# ---------------------------------------------------------------------------
# affine positive roots with multiplicity


@dataclass(frozen=True)
class AffineRoot:
    """Positive affine root: real k*delta + alpha (kind '+', k >= 0),
    real k*delta - alpha (kind '-', k >= 1), or imaginary (k*delta, i)
    (kind '0', k >= 1, color i).
    """

    kind: str
    k: int
    alpha: tuple = ()   # finite part in simple-root coordinates over 0..n
    color: int = 0      # only for imaginary roots

    def to_weight(self, datum):
        d = delta(datum).scaled(self.k).d
        if self.kind == "+":
            return Weight(x + y for x, y in zip(d, self.alpha))
        if self.kind == "-":
            return Weight(x - y for x, y in zip(d, self.alpha))
        return Weight(d)

    def __repr__(self):
        if self.kind == "0":
            return "(%dd,%d)" % (self.k, self.color)
        sign = "+" if self.kind == "+" else "-"
        body = "+".join("a%d" % i for i, x in enumerate(self.alpha) if x)
        if self.k == 0:
            return body if sign == "+" else "-" + body
        return "%dd%s%s" % (self.k, sign, body)


def real_plus(datum, k, alpha_weight):
    if k < 0:
        raise ValueError("real plus roots need k >= 0")
    return AffineRoot(kind="+", k=k, alpha=tuple(alpha_weight.d))


def real_minus(datum, k, alpha_weight):
    if k < 1:
        raise ValueError("real minus roots need k >= 1")
    return AffineRoot(kind="-", k=k, alpha=tuple(alpha_weight.d))


def imaginary(datum, k, i):
    if k < 1:
        raise ValueError("imaginary roots need k >= 1")
    if not 1 <= i <= datum.n:
        raise ValueError("imaginary color out of range")
    return AffineRoot(kind="0", k=k, color=i)


def classify_root_vector(datum, w):
    """Turn a lattice vector into an AffineRoot, if it is one."""
    k = w[0]
    rest = [w[i] - k for i in datum.nodes]
    if all(x == 0 for x in rest):
        raise ValueError("imaginary vectors carry a color; classify manually")
    if all(x >= 0 for x in rest):
        return AffineRoot(kind="+", k=k, alpha=tuple(rest))
    if all(x <= 0 for x in rest):
        return AffineRoot(kind="-", k=k, alpha=tuple(-x for x in rest))
    raise ValueError("%r is not an affine root" % (w,))


# ---------------------------------------------------------------------------
# partitions and the Pieri rule


def check_partition(parts):
    parts = tuple(parts)
    if any(p <= 0 for p in parts):
        raise ValueError("partition parts must be positive")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("partition parts must be weakly decreasing")
    return parts


def partition_size(parts):
    return sum(parts)


def pieri_shapes(k, mu):
    """All partitions lambda ⊇ mu with lambda/mu a horizontal k-strip.

    The strip condition is the interlacing mu_{i-1} >= lambda_i >= mu_i.
    """
    if k < 1:
        raise ValueError("strip size must be >= 1")
    mu = check_partition(mu)
    rows = len(mu) + 1
    out = []

    def go(i, prev, remaining, acc):
        if i == rows:
            if remaining == 0:
                out.append(tuple(p for p in acc if p > 0))
            return
        lo = mu[i] if i < len(mu) else 0
        hi = min(prev, lo + remaining)
        for val in range(hi, lo - 1, -1):
            go(i + 1, mu[i] if i < len(mu) else 0, remaining - (val - lo), acc + [val])

    go(0, mu[0] + k if mu else k, k, [])
    return sorted(out, reverse=True)
