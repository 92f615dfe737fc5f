# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; must agree bit-for-bit with _kernels_py."""

from math import gcd

IMPLEMENTATION = "cython"


def lp_trim(dict a):
    dead = [e for e, c in a.items() if not c]
    for e in dead:
        del a[e]
    return a


def lp_add(dict a, dict b):
    cdef dict r = dict(a)
    for e, c in b.items():
        s = r.get(e, 0) + c
        if s:
            r[e] = s
        elif e in r:
            del r[e]
    return r


def lp_sub(dict a, dict b):
    cdef dict r = dict(a)
    for e, c in b.items():
        s = r.get(e, 0) - c
        if s:
            r[e] = s
        elif e in r:
            del r[e]
    return r


def lp_neg(dict a):
    return {e: -c for e, c in a.items()}


def lp_mul(dict a, dict b):
    if not a or not b:
        return {}
    if len(b) < len(a):
        a, b = b, a
    cdef dict r = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = r.get(e, 0) + ca * cb
            if s:
                r[e] = s
            elif e in r:
                del r[e]
    return r


def lp_shift(dict a, e):
    if not e:
        return dict(a)
    return {ea + e: ca for ea, ca in a.items()}


def lp_scale(dict a, c):
    if c == 1:
        return dict(a)
    if not c:
        return {}
    return {e: c * ca for e, ca in a.items()}


def lp_axpy(dict acc, dict c, dict x):
    for ec, cc in c.items():
        for ex, cx in x.items():
            e = ec + ex
            s = acc.get(e, 0) + cc * cx
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
    return acc


def lp_shift_axpy(dict acc, e, c, dict x):
    for ex, cx in x.items():
        k = ex + e
        s = acc.get(k, 0) + c * cx
        if s:
            acc[k] = s
        elif k in acc:
            del acc[k]
    return acc


def fe_add_into(dict acc, dict t):
    cdef dict cur
    for w, c in t.items():
        cur = acc.get(w)
        if cur is None:
            acc[w] = dict(c)
        else:
            for e, v in (<dict>c).items():
                s = cur.get(e, 0) + v
                if s:
                    cur[e] = s
                elif e in cur:
                    del cur[e]
            if not cur:
                del acc[w]
    return acc


def fe_scaled_add_into(dict acc, dict mult, dict t):
    cdef dict cur
    for w, c in t.items():
        cur = acc.get(w)
        if cur is None:
            cur = {}
            acc[w] = cur
        for em, cm in mult.items():
            for e, v in (<dict>c).items():
                k = em + e
                s = cur.get(k, 0) + cm * v
                if s:
                    cur[k] = s
                elif k in cur:
                    del cur[k]
        if not cur:
            del acc[w]
    return acc


def fe_mul(dict t1, dict t2):
    cdef dict r = {}
    cdef dict cur
    cdef bytes w
    for w1, c1 in t1.items():
        for w2, c2 in t2.items():
            w = <bytes>w1 + <bytes>w2
            cur = r.get(w)
            if cur is None:
                cur = {}
                r[w] = cur
            for e1, v1 in (<dict>c1).items():
                for e2, v2 in (<dict>c2).items():
                    e = e1 + e2
                    s = cur.get(e, 0) + v1 * v2
                    if s:
                        cur[e] = s
                    elif e in cur:
                        del cur[e]
            if not cur:
                del r[w]
    return r


def fe_scale_laurent(dict t, dict c):
    cdef dict r = {}
    cdef dict cur
    for w, coeff in t.items():
        cur = {}
        for e1, v1 in c.items():
            for e2, v2 in (<dict>coeff).items():
                e = e1 + e2
                s = cur.get(e, 0) + v1 * v2
                if s:
                    cur[e] = s
                elif e in cur:
                    del cur[e]
        if cur:
            r[w] = cur
    return r


def fe_ir(dict t, int letter, tuple arow):
    cdef dict r = {}
    cdef dict cur
    cdef bytes w, nw
    cdef int p, m
    cdef long long e
    cdef int wc
    for wobj, c in t.items():
        w = <bytes>wobj
        m = len(w)
        e = 0
        for p in range(m):
            wc = w[p]
            if wc == letter:
                nw = w[:p] + w[p + 1:]
                cur = r.get(nw)
                if cur is None:
                    cur = {}
                    r[nw] = cur
                for ec, vc in (<dict>c).items():
                    k = ec + e
                    s = cur.get(k, 0) + vc
                    if s:
                        cur[k] = s
                    elif k in cur:
                        del cur[k]
                if not cur:
                    del r[nw]
            e += <long long>(<object>arow[wc])
    return r


def fe_ri(dict t, int letter, tuple arow):
    cdef dict r = {}
    cdef dict cur
    cdef bytes w, nw
    cdef int p, m
    cdef long long e
    cdef int wc
    for wobj, c in t.items():
        w = <bytes>wobj
        m = len(w)
        e = 0
        for p in range(m - 1, -1, -1):
            wc = w[p]
            if wc == letter:
                nw = w[:p] + w[p + 1:]
                cur = r.get(nw)
                if cur is None:
                    cur = {}
                    r[nw] = cur
                for ec, vc in (<dict>c).items():
                    k = ec + e
                    s = cur.get(k, 0) + vc
                    if s:
                        cur[k] = s
                    elif k in cur:
                        del cur[k]
                if not cur:
                    del r[nw]
            e += <long long>(<object>arow[wc])
    return r


def fe_strip_content(dict t):
    if not t:
        return t
    g = 0
    lo = None
    for c in t.values():
        for v in (<dict>c).values():
            if g != 1:
                g = gcd(g, v)
        mn = min(<dict>c)
        if lo is None or mn < lo:
            lo = mn
    if g in (0, 1) and not lo:
        return t
    if g in (0, 1):
        return {w: {e - lo: v for e, v in (<dict>c).items()} for w, c in t.items()}
    return {w: {e - lo: v // g for e, v in (<dict>c).items()} for w, c in t.items()}
