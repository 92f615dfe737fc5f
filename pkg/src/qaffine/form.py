"""Lusztig's bilinear form on the free algebra, the radical zero test, weight
space dimensions, coordinates against a PBW-type basis, and lattice
membership.

The pairing of two words of common height h equals an integer Laurent
polynomial divided by (1-q^-2)^h; the integer part J is what gets memoized.
Zero testing in the quotient reduces a homogeneous element along a chosen
node: the top divided-power component is extracted by iterated left
derivations, peeled off, and the residue is attacked with the remaining
nodes.  All of this is division-free.
"""

import random
from math import gcd as _igcd

from ._speed import kernels as _k
from .cartan import Weight, alpha, finite_positive_roots
from .freealg import FreeElement, HeightCapExceeded, get_height_cap, ir, quantum_serre, r_i
from .scalar import RationalFunction, rf

_J_MEMO_MAX_HT = 9


class PairingCache:
    """Memo of J-values keyed by ordered word pairs of equal weight."""

    def __init__(self, datum):
        self.datum = datum
        self.table = {}

    def stats(self):
        return {"entries": len(self.table)}


_caches = {}


def _cache_for(datum):
    c = _caches.get(datum)
    if c is None:
        c = PairingCache(datum)
        _caches[datum] = c
    return c


def _word_weight_key(w, n):
    d = [0] * (n + 1)
    for c in w:
        d[c] += 1
    return tuple(d)


def pairing_J(datum, w1, w2, cache=None):
    """J(w1, w2) = (w1, w2) * (1-q^-2)^ht as an integer Laurent dict."""
    if cache is None:
        cache = _cache_for(datum).table
    n = datum.n
    if _word_weight_key(w1, n) != _word_weight_key(w2, n):
        return {}
    a = datum.a

    def rec(u, v):
        if not u:
            return {0: 1}
        key = (u, v) if u <= v else (v, u)
        hit = cache.get(key)
        if hit is not None:
            return hit
        head = u[0]
        tail = u[1:]
        arow = a[head] if False else None
        out = {}
        e = 0
        for p in range(len(v)):
            c = v[p]
            if c == head:
                sub = rec(tail, v[:p] + v[p + 1:])
                if sub:
                    _k.lp_shift_axpy(out, e, 1, sub)
            e += a[c][head]
        cache[key] = out
        return out

    return rec(bytes(w1), bytes(w2))


def _one_minus_qm2_power(h):
    """(1-q^-2)^h as an integer Laurent dict."""
    out = {0: 1}
    base = {0: 1, -2: -1}
    for _ in range(h):
        out = _k.lp_mul(out, base)
    return out


def _inner_terms_trie(datum, t1, t2, ht):
    """J-level pairing of two term maps of equal weight, by head recursion."""
    a = datum.a
    n = datum.n

    def rec(tx, ty):
        # group tx by leading letter
        const = tx.get(b"")
        if const is not None:
            cy = ty.get(b"")
            return _k.lp_mul(const, cy) if cy else {}
        out = {}
        groups = {}
        for w, c in tx.items():
            groups.setdefault(w[0], {})[w[1:]] = c
        for head, sub in groups.items():
            arow = tuple(a[c][head] for c in range(n + 1))
            dy = _k.fe_ir(ty, head, arow)
            if dy:
                part = rec(sub, dy)
                if part:
                    out = _k.lp_add(out, part)
        return out

    return rec(t1, t2)


def inner(x, y, datum=None):
    """The bilinear form (x, y), exact in Q(q)."""
    if datum is None:
        raise TypeError("inner requires the Cartan datum")
    if x.is_zero() or y.is_zero():
        return RationalFunction.from_int(0)
    total = RationalFunction.from_int(0)
    xs = x.homogeneous_components()
    ys = y.homogeneous_components()
    for wt, xc in xs.items():
        yc = ys.get(wt)
        if yc is None:
            continue
        h = wt.ht()
        if h <= _J_MEMO_MAX_HT:
            cache = _cache_for(datum).table
            acc = {}
            for w1, c1 in xc.terms.items():
                for w2, c2 in yc.terms.items():
                    j = pairing_J(datum, w1, w2, cache)
                    if j:
                        _k.lp_axpy(acc, _k.lp_mul(c1, c2), j)
        else:
            acc = _inner_terms_trie(datum, xc.terms, yc.terms, h)
        if acc:
            val = RationalFunction(acc, _one_minus_qm2_power(h))
            total = total + val * (xc.scale * yc.scale)
    return total


def inner_tensor(datum, t, y1, y2):
    """Pairing of a TensorElement against y1 (x) y2 legwise."""
    total = RationalFunction.from_int(0)
    for (w1, w2), c in t.terms.items():
        f1 = inner(FreeElement(datum.n, terms={w1: dict(c)}), y1, datum)
        if f1.is_zero():
            continue
        f2 = inner(FreeElement(datum.n, terms={w2: {0: 1}}), y2, datum)
        if f2.is_zero():
            continue
        total = total + f1 * f2
    return total * t.scale


# ---------------------------------------------------------------------------
# zero test in the quotient


def _fe_ir_terms(datum, terms, i):
    arow = tuple(datum.a[c][i] for c in range(datum.n + 1))
    return _k.fe_ir(terms, i, arow)


def _qfact_int(r):
    """[r]! as an integer Laurent dict."""
    out = {0: 1}
    for s in range(2, r + 1):
        out = _k.lp_mul(out, {s - 1 - 2 * t: 1 for t in range(s)})
    return out


def _vanishes(datum, terms, wt):
    """True iff the class of the term map vanishes in the quotient."""
    if not terms:
        return True
    h = sum(wt)
    if h == 0:
        return not terms.get(b"")
    support = [i for i, d in enumerate(wt) if d]
    # reduce along the node with the largest multiplicity
    j = max(support, key=lambda i: wt[i])
    d = wt[j]
    cur = _k.fe_strip_content(terms)
    for r in range(d, 0, -1):
        der = cur
        for _ in range(r):
            der = _fe_ir_terms(datum, der, j)
        if der:
            sub_wt = list(wt)
            sub_wt[j] -= r
            if not _vanishes(datum, _k.fe_strip_content(der), tuple(sub_wt)):
                return False
            # cur <- [r]! * cur - q^(-r(r-1)/2) * (j^r ++ der)
            prefix = bytes([j] * r)
            shift = -r * (r - 1) // 2
            nxt = {}
            fact = _qfact_int(r)
            _k.fe_scaled_add_into(nxt, fact, cur)
            neg = {w: c for w, c in (((prefix + w), _k.lp_shift(c, shift))
                                     for w, c in der.items()) if c}
            nxt2 = dict(nxt)
            for w, c in neg.items():
                curc = nxt2.get(w)
                if curc is None:
                    nxt2[w] = _k.lp_neg(c)
                else:
                    nc = _k.lp_sub(curc, c)
                    if nc:
                        nxt2[w] = nc
                    else:
                        del nxt2[w]
            cur = _k.fe_strip_content(nxt2)
    if not cur:
        return True
    # the residue lies in the kernel of the left j-derivation
    if all(i == j for i in support):
        return True
    for i in support:
        if i == j:
            continue
        der = _fe_ir_terms(datum, cur, i)
        sub_wt = list(wt)
        sub_wt[i] -= 1
        if not _vanishes(datum, der, tuple(sub_wt)):
            return False
    return True


def is_zero_in_uplus(x, datum):
    """True iff x lies in the quantum Serre ideal (the form's radical)."""
    if x.is_zero():
        return True
    if x.max_height() > get_height_cap():
        raise HeightCapExceeded("zero test at height %d exceeds cap %d"
                                % (x.max_height(), get_height_cap()))
    for wt, comp in x.homogeneous_components().items():
        if not _vanishes(datum, comp.terms, wt.d):
            return False
    return True


def equals_in_uplus(x, y, datum):
    return is_zero_in_uplus(x - y, datum)


def is_zero_plain(x, datum):
    """Reference zero test: recurse over every left derivation."""
    def rec(terms, h):
        if not terms:
            return True
        if h == 0:
            return not terms.get(b"")
        letters = {w[0] for w in terms if w}
        for i in letters:
            if not rec(_fe_ir_terms(datum, terms, i), h - 1):
                return False
        return True

    for wt, comp in x.homogeneous_components().items():
        if not rec(comp.terms, wt.ht()):
            return False
    return True


# ---------------------------------------------------------------------------
# weight spaces: word bases, PBW counts, certified Gram rank


def words_of_weight(datum, wt):
    """All words with letter multiplicities wt, lexicographically sorted."""
    letters = []
    for i, d in enumerate(wt):
        letters.extend([i] * d)
    out = []

    def rec(remaining, acc):
        if not any(remaining):
            out.append(bytes(acc))
            return
        for i in range(len(remaining)):
            if remaining[i]:
                remaining[i] -= 1
                acc.append(i)
                rec(remaining, acc)
                acc.pop()
                remaining[i] += 1

    rec(list(wt), [])
    return out


def dim_oracle(datum, wt):
    """Number of PBW indices of the given weight: finitely supported maps
    from positive roots (with multiplicity) to N."""
    wt = tuple(wt)
    if any(d < 0 for d in wt):
        return 0
    max_k = wt[0] + 1
    roots = []
    for root in finite_positive_roots(datum):
        for k in range(0, max_k + 1):
            v = [k + x for x in root.d]
            v[0] = k
            if all(v[i] <= wt[i] for i in range(len(wt))):
                roots.append(tuple(v))
        for k in range(1, max_k + 1):
            v = [k - x for x in root.d]
            v[0] = k
            if min(v) >= 0 and all(v[i] <= wt[i] for i in range(len(wt))):
                roots.append(tuple(v))
    for k in range(1, max_k + 1):
        for _color in datum.finite_nodes:
            v = [k] * (datum.n + 1)
            if all(v[i] <= wt[i] for i in range(len(wt))):
                roots.append(tuple(v))

    count = 0
    roots.sort()
    m = len(roots)

    def rec(idx, remaining):
        nonlocal count
        if not any(remaining):
            count += 1
            return
        if idx == m:
            return
        root = roots[idx]
        rec(idx + 1, remaining)
        cur = list(remaining)
        while True:
            ok = True
            for i in range(len(cur)):
                cur[i] -= root[i]
                if cur[i] < 0:
                    ok = False
            if not ok:
                break
            rec(idx + 1, cur)

    rec(0, list(wt))
    return count


def _serre_ideal_vectors(datum, wt, words_index):
    """Word-coordinate vectors of u * S_ij * v spanning the ideal at wt."""
    n = datum.n
    vectors = []
    serres = []
    for i in range(n + 1):
        for j in range(n + 1):
            if i != j:
                s = quantum_serre(datum, i, j)
                serres.append(s)
    for s in serres:
        s_wt = s.weight()
        rest = [wt[i] - s_wt[i] for i in range(n + 1)]
        if any(x < 0 for x in rest):
            continue
        total_rest = sum(rest)
        for u in words_of_weight(datum, tuple(rest)):
            for split in range(len(u) + 1):
                left, right = u[:split], u[split:]
                vec = {}
                for w, c in s.terms.items():
                    vec[left + w + right] = c
                vectors.append(vec)
            if total_rest == 0:
                break
    # deduplicate
    seen = set()
    out = []
    for vec in vectors:
        key = tuple(sorted((w, tuple(sorted(c.items()))) for w, c in vec.items()))
        if key not in seen:
            seen.add(key)
            out.append(vec)
    return out


def _lp_eval_mod(d, qa, qainv, p):
    s = 0
    for e, c in d.items():
        s += c * (pow(qa, e, p) if e >= 0 else pow(qainv, -e, p))
    return s % p


def _rank_mod(rows, p):
    """Rank of a list of dense mod-p rows (mutates a copy)."""
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    r = 0
    while r < len(rows) and col < ncols:
        piv = None
        for rr in range(r, len(rows)):
            if rows[rr][col] % p:
                piv = rr
                break
        if piv is None:
            col += 1
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for rr in range(len(rows)):
            if rr != r and rows[rr][col] % p:
                f = rows[rr][col]
                rows[rr] = [(x - f * y) % p for x, y in zip(rows[rr], rows[r])]
        r += 1
        col += 1
        rank += 1
    return rank


_RANK_PRIME = (1 << 61) - 1


def gram_rank_certified(datum, wt, rng=None):
    """Exact rank of the word Gram matrix at the given weight.

    Lower bound: rank of the matrix specialized at a random point mod p.
    Upper bound: #words minus the span of explicit Serre ideal vectors,
    each verified to pair to zero against every word (exactly).  The two
    bounds must meet; the shared value is returned.
    """
    rng = rng or random.Random(20_2408)
    wt = tuple(wt)
    words = words_of_weight(datum, wt)
    nw = len(words)
    if nw == 0:
        return 0
    cache = _cache_for(datum).table
    jmat = [[pairing_J(datum, w1, w2, cache) for w2 in words] for w1 in words]

    ideal = _serre_ideal_vectors(datum, wt, None)
    widx = {w: t for t, w in enumerate(words)}
    ideal_rows = []
    for vec in ideal:
        row = [None] * nw
        for w, c in vec.items():
            row[widx[w]] = c
        ideal_rows.append(row)
        # exact kernel check: vec . J == 0
        for t2 in range(nw):
            acc = {}
            for w, c in vec.items():
                _k.lp_axpy(acc, c, jmat[widx[w]][t2])
            if acc:
                raise ArithmeticError("Serre vector does not pair to zero")

    p = _RANK_PRIME
    for _ in range(6):
        qa = rng.randrange(2, p - 1)
        qainv = pow(qa, p - 2, p)
        grows = [[_lp_eval_mod(e, qa, qainv, p) for e in row] for row in jmat]
        lower = _rank_mod(grows, p)
        if ideal_rows:
            irows = [[_lp_eval_mod(c, qa, qainv, p) if c else 0 for c in row]
                     for row in ideal_rows]
            ideal_dim_lower = _rank_mod(irows, p)
        else:
            ideal_dim_lower = 0
        upper = nw - ideal_dim_lower
        if lower == upper:
            return lower
    raise ArithmeticError("rank certificates did not meet at weight %r" % (wt,))


def dim_uplus(datum, wt):
    """(certified Gram rank, PBW count) for cross-validation."""
    rank = gram_rank_certified(datum, wt)
    count = dim_oracle(datum, wt)
    return rank, count


# ---------------------------------------------------------------------------
# coordinates and the lattice


def _solve_exact(gram, rhs):
    """Solve G a = rhs over Q(q) by Gaussian elimination with exact RFs."""
    m = len(gram)
    aug = [[gram[i][j] for j in range(m)] + [rhs[i]] for i in range(m)]
    for col in range(m):
        piv = None
        for r in range(col, m):
            if not aug[r][col].is_zero():
                piv = r
                break
        if piv is None:
            raise ArithmeticError("singular Gram matrix: basis not independent")
        aug[col], aug[piv] = aug[piv], aug[col]
        pivval = aug[col][col]
        aug[col] = [x / pivval for x in aug[col]]
        for r in range(m):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][m].reduced() for i in range(m)]


def coords(x, basis, datum, certify=True):
    """Coordinates of x in the given basis of its weight space."""
    gram = [[inner(b1, b2, datum) for b2 in basis] for b1 in basis]
    rhs = [inner(x, b, datum) for b in basis]
    sol = _solve_exact(gram, rhs)
    if certify:
        recon = FreeElement.zero(datum.n)
        for c, b in zip(sol, basis):
            recon = recon + b.scaled(c)
        if not is_zero_in_uplus(x - recon, datum):
            raise ArithmeticError("coordinates failed verification")
    return sol


def in_lattice(x, datum):
    """Membership in the crystal lattice: (x, x) in A."""
    return inner(x, x, datum).in_A()
