"""Affine Weyl group machinery: reflections acting on the affine root
lattice, greedy reduced words, the translation by 2*rho, the doubly infinite
reflection sequence, the beta enumeration of real roots, and the total order
on positive roots with multiplicity.
"""

from dataclasses import dataclass
from fractions import Fraction

from .cartan import (AffineRoot, Weight, alpha, classify_root_vector, delta,
                     imaginary, pairing)


class AffineWeylElement:
    """Linear action on the affine root lattice, stored as the matrix of
    images of the simple roots in simple-root coordinates."""

    __slots__ = ("datum", "cols")

    def __init__(self, datum, cols):
        self.datum = datum
        self.cols = tuple(tuple(c) for c in cols)

    def __eq__(self, other):
        return self.cols == other.cols

    def __hash__(self):
        return hash(self.cols)

    def act(self, w):
        size = len(w.d)
        out = [0] * size
        for j, x in enumerate(w.d):
            if x:
                col = self.cols[j]
                for i in range(size):
                    out[i] += x * col[i]
        return Weight(out)

    def is_identity(self):
        size = len(self.cols)
        return all(self.cols[j][i] == (1 if i == j else 0)
                   for j in range(size) for i in range(size))


def identity_element(datum):
    size = datum.n + 1
    return AffineWeylElement(datum, [[1 if i == j else 0 for i in range(size)]
                                     for j in range(size)])


def simple_reflection(datum, i):
    size = datum.n + 1
    cols = []
    for j in range(size):
        col = [1 if r == j else 0 for r in range(size)]
        col[i] -= datum.a[i][j]
        cols.append(col)
    return AffineWeylElement(datum, cols)


def compose(w1, w2):
    """The element acting as w1 after w2."""
    cols = [w1.act(Weight(c)).d for c in w2.cols]
    return AffineWeylElement(w1.datum, cols)


def inverse(w):
    size = len(w.cols)
    m = [[Fraction(w.cols[j][i]) for j in range(size)] for i in range(size)]
    inv = [[Fraction(1 if i == j else 0) for j in range(size)] for i in range(size)]
    for col in range(size):
        piv = next(r for r in range(col, size) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        f = m[col][col]
        m[col] = [x / f for x in m[col]]
        inv[col] = [x / f for x in inv[col]]
        for r in range(size):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    cols = []
    for j in range(size):
        col = []
        for i in range(size):
            v = inv[i][j]
            if v.denominator != 1:
                raise ArithmeticError("non-integral inverse")
            col.append(v.numerator)
        cols.append(col)
    return AffineWeylElement(w.datum, cols)


def translation(datum, omega_pairings):
    """t_omega given the integers (omega, alpha_i) for i in 0..n."""
    d = delta(datum)
    cols = []
    for j in datum.nodes:
        img = alpha(datum, j) - d.scaled(omega_pairings[j])
        cols.append(img.d)
    return AffineWeylElement(datum, cols)


def t_two_rho(datum):
    """Translation by twice the half-sum of the positive finite roots."""
    pairings = [0] * (datum.n + 1)
    for i in datum.finite_nodes:
        pairings[i] = 2
    pairings[0] = -2 * datum.n
    return translation(datum, pairings)


def is_positive_vector(w):
    return any(w.d) and all(x >= 0 for x in w.d)


def is_negative_vector(w):
    return any(w.d) and all(x <= 0 for x in w.d)


def is_left_descent(w, i):
    """l(s_i w) < l(w), i.e. w^{-1}(alpha_i) is a negative affine root."""
    winv = inverse(w)
    return is_negative_vector(winv.act(alpha(w.datum, i)))


def act(w, root_vector):
    """Action on a lattice vector (affine root in alpha-coordinates)."""
    return w.act(root_vector)


@dataclass(frozen=True)
class ReducedWord:
    """Reduced expression tau * s_{i_1} ... s_{i_m}; tau is trivial here."""

    word: tuple

    def __len__(self):
        return len(self.word)


def greedy_reduced_word(w):
    """Strip left descents until the identity; the word s_{i_1}...s_{i_m}."""
    datum = w.datum
    word = []
    cur = w
    guard = 0
    while not cur.is_identity():
        for i in datum.nodes:
            if is_left_descent(cur, i):
                word.append(i)
                cur = compose(simple_reflection(datum, i), cur)
                break
        else:
            raise ArithmeticError("no descent found; element not in the affine group")
        guard += 1
        if guard > 10000:
            raise ArithmeticError("descent extraction did not terminate")
    return ReducedWord(word=tuple(word))


def length(w):
    return len(greedy_reduced_word(w))


def is_descent(w, i):
    return is_left_descent(w, i)


def t_two_rho_word(datum):
    word = greedy_reduced_word(t_two_rho(datum))
    # sanity: the word must reproduce the translation on all simple roots
    t = t_two_rho(datum)
    prod = identity_element(datum)
    for i in word.word:
        prod = compose(prod, simple_reflection(datum, i))
    if prod != t:
        raise ArithmeticError("reduced word does not evaluate to t_{2rho}")
    return word


def word_index(word, k):
    """i_k of the doubly infinite sequence: i_k = i_{k mod N}, 1-indexed."""
    n = len(word.word)
    return word.word[(k - 1) % n]


def beta_sequence(datum, word, lo, hi):
    """beta_k for lo <= k <= hi as AffineRoots (k = 0 separates the sides)."""
    out = {}
    if lo <= 0:
        cur = identity_element(datum)
        k = 0
        while True:
            v = cur.act(alpha(datum, word_index(word, k)))
            if k <= hi:
                out[k] = classify_root_vector(datum, v)
            cur = compose(cur, simple_reflection(datum, word_index(word, k)))
            k -= 1
            if k < lo:
                break
    if hi >= 1:
        cur = identity_element(datum)
        k = 1
        while k <= hi:
            v = cur.act(alpha(datum, word_index(word, k)))
            if k >= lo:
                out[k] = classify_root_vector(datum, v)
            cur = compose(cur, simple_reflection(datum, word_index(word, k)))
            k += 1
    return out


class RootWindow:
    """Precomputed beta enumeration out to a delta-degree bound, with the
    total order: beta_0 < beta_{-1} < ... < (k delta, i) < ... < beta_2 < beta_1.
    """

    def __init__(self, datum, max_delta):
        self.datum = datum
        self.max_delta = max_delta
        self.word = t_two_rho_word(datum)
        n_per_period = len(self.word.word)
        periods = max_delta + 2
        betas = beta_sequence(datum, self.word,
                              -n_per_period * periods, n_per_period * periods)
        self._index_of = {}
        for k, root in betas.items():
            if root in self._index_of:
                raise ArithmeticError("beta sequence repeats a root")
            self._index_of[root] = k
        self.betas = betas

    def beta_index(self, root):
        try:
            return self._index_of[root]
        except KeyError:
            raise KeyError("root %r outside the enumerated window" % (root,))

    def sort_key(self, root):
        if root.kind == "0":
            return (1, root.k, root.color)
        k = self.beta_index(root)
        if k <= 0:
            return (0, -k)
        return (2, -k)

    def compare(self, r1, r2):
        k1, k2 = self.sort_key(r1), self.sort_key(r2)
        return -1 if k1 < k2 else (0 if k1 == k2 else 1)

    def real_roots(self):
        return list(self.betas.values())

    def all_roots_up_to(self, max_delta=None):
        """Every positive root with delta-degree <= the bound, sorted."""
        bound = self.max_delta if max_delta is None else max_delta
        out = [r for r in self.betas.values() if r.k <= bound]
        for k in range(1, bound + 1):
            for i in self.datum.finite_nodes:
                out.append(imaginary(self.datum, k, i))
        out.sort(key=self.sort_key)
        return out


def root_order_compare(window, r1, r2):
    return window.compare(r1, r2)


def t_two_rho_length_oracle(datum):
    """Inversion count l(t_{2rho}) = sum over finite positive roots of
    |(2rho, alpha^v)|; independent of the reduced-word machinery."""
    from .cartan import finite_positive_roots
    roots = finite_positive_roots(datum)
    two_rho = roots[0].scaled(0)
    for root in roots:
        two_rho = two_rho + root
    total = 0
    for root in roots:
        num = pairing(datum, two_rho, root)
        den = pairing(datum, root, root)
        total += abs(2 * num // den)
    return total
