"""PBW indices, the ordered monomials, crystal monomials, the projection
onto the imaginary subalgebra, and the orthonormality/integrality suites.
"""

from .cartan import Weight, imaginary
from .form import coords, dim_oracle, inner, words_of_weight
from .freealg import FreeElement, divided_power
from .scalar import RationalFunction
from .symfun import S


class PBWIndex:
    """Finitely supported map from positive roots (with multiplicity) to N,
    stored sorted by the root order."""

    __slots__ = ("entries",)

    def __init__(self, window, entries):
        items = [(r, m) for r, m in entries if m]
        items.sort(key=lambda rm: window.sort_key(rm[0]))
        self.entries = tuple(items)

    def __eq__(self, other):
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def weight(self, datum):
        out = [0] * (datum.n + 1)
        for root, mult in self.entries:
            w = root.to_weight(datum)
            for i in range(datum.n + 1):
                out[i] += mult * w[i]
        return Weight(out)

    def real_plus_part(self):
        return tuple((r, m) for r, m in self.entries if r.kind == "+")

    def imaginary_part(self):
        return tuple((r, m) for r, m in self.entries if r.kind == "0")

    def real_minus_part(self):
        return tuple((r, m) for r, m in self.entries if r.kind == "-")

    def is_purely_imaginary(self):
        return all(r.kind == "0" for r, _ in self.entries)

    def __repr__(self):
        return "{" + ", ".join("%r:%d" % (r, m) for r, m in self.entries) + "}"


def enumerate_indices(datum, window, wt):
    """All PBW indices of the given weight, in a deterministic order."""
    wt = tuple(wt)
    if any(d < 0 for d in wt):
        return []
    roots = [r for r in window.all_roots_up_to(max(wt[0], 0))
             if all(r.to_weight(datum)[i] <= wt[i] for i in range(datum.n + 1))]
    roots.sort(key=window.sort_key)
    out = []

    def rec(idx, remaining, acc):
        if not any(remaining):
            out.append(PBWIndex(window, list(acc)))
            return
        if idx == len(roots):
            return
        root = roots[idx]
        rv = root.to_weight(datum).d
        rec(idx + 1, remaining, acc)
        cur = list(remaining)
        mult = 0
        while True:
            ok = True
            for i in range(len(cur)):
                cur[i] -= rv[i]
                if cur[i] < 0:
                    ok = False
            if not ok:
                break
            mult += 1
            acc.append((root, mult))
            rec(idx + 1, list(cur), acc)
            acc.pop()

    rec(0, list(wt), [])
    out.sort(key=lambda c: tuple((window.sort_key(r), m) for r, m in c.entries))
    return out


def E_monomial(table, window, c):
    """Ordered product of divided powers of real root vectors and plain
    powers of the P~ generators, in the total root order."""
    datum = table.datum
    acc = FreeElement.one(datum.n)
    for root, mult in c.entries:
        if root.kind == "0":
            factor = table.p_tilde_free(root.k, root.color)
            for _ in range(mult):
                acc = acc * factor
        else:
            i = _root_color(datum, root)
            vec = table.real_root_vector(root.k, root.kind, i)
            acc = acc * divided_power(vec, mult)
    return acc


def E_prime_monomial(table, window, c):
    """Variant with psi~ factors on the imaginary part."""
    datum = table.datum
    acc = FreeElement.one(datum.n)
    for root, mult in c.entries:
        if root.kind == "0":
            factor = table.psi_tilde(root.k, root.color)
            for _ in range(mult):
                acc = acc * factor
        else:
            i = _root_color(datum, root)
            vec = table.real_root_vector(root.k, root.kind, i)
            acc = acc * divided_power(vec, mult)
    return acc


def _root_color(datum, root):
    """For rank-one finite parts, the node carrying the simple root."""
    support = [i for i in range(1, datum.n + 1) if root.alpha[i]]
    if len(support) != 1 or root.alpha[support[0]] != 1:
        raise NotImplementedError(
            "root vectors for non-simple finite parts are not constructed")
    return support[0]


def B_monomial(table, window, c):
    """Crystal monomial: E_{c>} . S_{c0} . E_{c<}."""
    datum = table.datum
    acc = FreeElement.one(datum.n)
    for root, mult in c.real_plus_part():
        i = _root_color(datum, root)
        acc = acc * divided_power(table.e_plus(root.k, i), mult)
    c0 = {(r.k, r.color): m for r, m in c.imaginary_part()}
    if c0:
        acc = acc * S(table, c0).free()
    for root, mult in c.real_minus_part():
        i = _root_color(datum, root)
        acc = acc * divided_power(table.e_minus(root.k, i), mult)
    return acc


def pi0(table, window, x):
    """Projection onto the imaginary subalgebra: expand in the crystal
    monomials of the weight and keep the purely imaginary coordinates."""
    datum = table.datum
    wt = x.weight()
    k = wt[0]
    if any(d != k for d in wt.d):
        raise ValueError("projection needs weight in N*delta")
    indices = enumerate_indices(datum, window, wt.d)
    basis = [B_monomial(table, window, c) for c in indices]
    sol = coords(x, basis, datum)
    out = []
    recon = FreeElement.zero(datum.n)
    for c, a, b in zip(indices, sol, basis):
        if c.is_purely_imaginary() and not a.is_zero():
            out.append((c, a))
            recon = recon + b.scaled(a)
    return out, recon


def orthonormality_table(table, window, weights):
    """For each weight: the matrix of limits of (B_c, B_c'), the identity
    comparison, and lattice membership of the diagonal."""
    datum = table.datum
    report = []
    for wt in weights:
        indices = enumerate_indices(datum, window, wt)
        basis = [B_monomial(table, window, c) for c in indices]
        m = len(indices)
        limits = []
        ok = True
        for a in range(m):
            row = []
            for b in range(m):
                val = inner(basis[a], basis[b], datum)
                if not val.in_A():
                    ok = False
                    row.append(None)
                    continue
                lim = val.limit_at_infinity()
                row.append(lim)
                if lim != (1 if a == b else 0):
                    ok = False
            limits.append(row)
        report.append({
            "weight": tuple(wt),
            "indices": [repr(c) for c in indices],
            "gram_limit_matrix": [[None if v is None else str(v) for v in row]
                                  for row in limits],
            "pass": ok,
        })
    return report


def integrality_check(table, window, c1, c2):
    """Coordinates of E_{c1} E_{c2} in the E-basis lie in Z[q, q^-1]."""
    datum = table.datum
    x = E_monomial(table, window, c1) * E_monomial(table, window, c2)
    wt = x.weight()
    indices = enumerate_indices(datum, window, wt.d)
    basis = [E_monomial(table, window, c) for c in indices]
    sol = coords(x, basis, datum)
    for a in sol:
        if not a.is_laurent():
            return False
        if not a.to_laurent().is_integral():
            return False
    return True
