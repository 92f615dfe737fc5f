"""Pure-Python hot kernels: integer Laurent dicts and free-word term maps.

A Laurent polynomial in q with integer coefficients is a dict {exponent: coeff}
with no zero values.  A term map is a dict {word: laurent} where the word is a
bytes object over the node alphabet.  Everything here is division-free; the
compiled twin in _kernels.pyx must match these results exactly.
"""

IMPLEMENTATION = "python"


def lp_trim(a):
    """Drop zero coefficients in place and return the dict."""
    dead = [e for e, c in a.items() if not c]
    for e in dead:
        del a[e]
    return a


def lp_add(a, b):
    r = dict(a)
    for e, c in b.items():
        s = r.get(e, 0) + c
        if s:
            r[e] = s
        elif e in r:
            del r[e]
    return r


def lp_sub(a, b):
    r = dict(a)
    for e, c in b.items():
        s = r.get(e, 0) - c
        if s:
            r[e] = s
        elif e in r:
            del r[e]
    return r


def lp_neg(a):
    return {e: -c for e, c in a.items()}


def lp_mul(a, b):
    if not a or not b:
        return {}
    if len(b) < len(a):
        a, b = b, a
    r = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = r.get(e, 0) + ca * cb
            if s:
                r[e] = s
            elif e in r:
                del r[e]
    return r


def lp_shift(a, e):
    if not e:
        return dict(a)
    return {ea + e: ca for ea, ca in a.items()}


def lp_scale(a, c):
    if c == 1:
        return dict(a)
    if not c:
        return {}
    return {e: c * ca for e, ca in a.items()}


def lp_axpy(acc, c, x):
    """acc += c*x where c is a laurent dict; mutates and returns acc."""
    for ec, cc in c.items():
        for ex, cx in x.items():
            e = ec + ex
            s = acc.get(e, 0) + cc * cx
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
    return acc


def lp_shift_axpy(acc, e, c, x):
    """acc += c * q^e * x with integer c; mutates and returns acc."""
    for ex, cx in x.items():
        k = ex + e
        s = acc.get(k, 0) + c * cx
        if s:
            acc[k] = s
        elif k in acc:
            del acc[k]
    return acc


def fe_add_into(acc, t):
    """acc += t for term maps; mutates acc."""
    for w, c in t.items():
        cur = acc.get(w)
        if cur is None:
            acc[w] = dict(c)
        else:
            for e, v in c.items():
                s = cur.get(e, 0) + v
                if s:
                    cur[e] = s
                elif e in cur:
                    del cur[e]
            if not cur:
                del acc[w]
    return acc


def fe_scaled_add_into(acc, mult, t):
    """acc += mult * t with mult a laurent dict; mutates acc."""
    for w, c in t.items():
        cur = acc.get(w)
        if cur is None:
            cur = {}
            acc[w] = cur
        for em, cm in mult.items():
            for e, v in c.items():
                k = em + e
                s = cur.get(k, 0) + cm * v
                if s:
                    cur[k] = s
                elif k in cur:
                    del cur[k]
        if not cur:
            del acc[w]
    return acc


def fe_mul(t1, t2):
    """Concatenation product of term maps."""
    r = {}
    for w1, c1 in t1.items():
        for w2, c2 in t2.items():
            w = w1 + w2
            cur = r.get(w)
            if cur is None:
                cur = {}
                r[w] = cur
            for e1, v1 in c1.items():
                for e2, v2 in c2.items():
                    e = e1 + e2
                    s = cur.get(e, 0) + v1 * v2
                    if s:
                        cur[e] = s
                    elif e in cur:
                        del cur[e]
            if not cur:
                del r[w]
    return r


def fe_scale_laurent(t, c):
    """Return c * t with c a laurent dict."""
    r = {}
    for w, coeff in t.items():
        cur = {}
        for e1, v1 in c.items():
            for e2, v2 in coeff.items():
                e = e1 + e2
                s = cur.get(e, 0) + v1 * v2
                if s:
                    cur[e] = s
                elif e in cur:
                    del cur[e]
        if cur:
            r[w] = cur
    return r


def fe_ir(t, letter, arow):
    """One step of the left derivation: strip one occurrence of `letter`.

    arow[c] is the Cartan pairing a_{c,letter}; the stripped word at position
    p picks up q**(sum of arow over the prefix).
    """
    r = {}
    for w, c in t.items():
        e = 0
        for p in range(len(w)):
            wc = w[p]
            if wc == letter:
                nw = w[:p] + w[p + 1:]
                cur = r.get(nw)
                if cur is None:
                    cur = {}
                    r[nw] = cur
                for ec, vc in c.items():
                    k = ec + e
                    s = cur.get(k, 0) + vc
                    if s:
                        cur[k] = s
                    elif k in cur:
                        del cur[k]
                if not cur:
                    del r[nw]
            e += arow[wc]
    return r


def fe_strip_content(t):
    """Divide all coefficients by their common integer content and common
    q-power; the class of a term map only matters up to a nonzero scalar."""
    from math import gcd
    if not t:
        return t
    g = 0
    lo = None
    for c in t.values():
        for v in c.values():
            if g != 1:
                g = gcd(g, v)
        mn = min(c)
        if lo is None or mn < lo:
            lo = mn
    if g in (0, 1) and not lo:
        return t
    if g in (0, 1):
        return {w: {e - lo: v for e, v in c.items()} for w, c in t.items()}
    return {w: {e - lo: v // g for e, v in c.items()} for w, c in t.items()}


def fe_ri(t, letter, arow):
    """One step of the right derivation: twists accumulate over the suffix."""
    r = {}
    for w, c in t.items():
        e = 0
        for p in range(len(w) - 1, -1, -1):
            wc = w[p]
            if wc == letter:
                nw = w[:p] + w[p + 1:]
                cur = r.get(nw)
                if cur is None:
                    cur = {}
                    r[nw] = cur
                for ec, vc in c.items():
                    k = ec + e
                    s = cur.get(k, 0) + vc
                    if s:
                        cur[k] = s
                    elif k in cur:
                        del cur[k]
                if not cur:
                    del r[nw]
            e += arow[wc]
    return r
