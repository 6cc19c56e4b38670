"""Finite preorders and posets: construction, products, quotients, monotone maps."""

from __future__ import annotations

import itertools

import numpy as np

from .errors import CapExceeded, InputError, StructureError

MAX_CARRIER = 4096


def _closure(rel):
    """Reflexive-transitive closure by iterated boolean matrix squaring."""
    n = rel.shape[0]
    out = rel | np.eye(n, dtype=bool)
    while True:
        nxt = out | (out @ out)
        if (nxt == out).all():
            return nxt
        out = nxt


class Preorder:
    """A finite preorder: an ordered carrier of labels plus a boolean relation
    matrix, ``rel[i, j]`` meaning ``carrier[i] <= carrier[j]``.

    The matrix is validated to be reflexive and transitive at construction and
    is kept read-only, so values are safe to share.
    """

    def __init__(self, carrier, relation):
        carrier = tuple(carrier)
        if len(set(carrier)) != len(carrier):
            raise InputError("duplicate labels in carrier")
        if len(carrier) > MAX_CARRIER:
            raise CapExceeded(
                f"carrier has {len(carrier)} elements, cap is {MAX_CARRIER}")
        rel = np.asarray(relation, dtype=bool)
        n = len(carrier)
        if rel.shape != (n, n):
            raise InputError(f"relation shape {rel.shape} does not match carrier size {n}")
        rel = rel.copy()
        rel.flags.writeable = False
        if not rel[np.diag_indices(n)].all():
            i = int(np.flatnonzero(~rel[np.diag_indices(n)])[0])
            raise StructureError(f"relation not reflexive at {carrier[i]!r}")
        if ((rel @ rel) & ~rel).any():
            i, j = (int(k[0]) for k in np.nonzero((rel @ rel) & ~rel))
            raise StructureError(
                f"relation not transitive: {carrier[i]!r} reaches {carrier[j]!r} "
                "in two steps but not directly")
        self.carrier = carrier
        self.rel = rel
        self._index = {x: i for i, x in enumerate(carrier)}

    @classmethod
    def from_pairs(cls, labels, pairs):
        """Smallest reflexive-transitive relation on ``labels`` containing ``pairs``."""
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise InputError("duplicate labels")
        if len(labels) > MAX_CARRIER:
            # refuse before the cubic closure, not after
            raise CapExceeded(
                f"carrier has {len(labels)} elements, cap is {MAX_CARRIER}")
        index = {x: i for i, x in enumerate(labels)}
        mat = np.zeros((len(labels), len(labels)), dtype=bool)
        for a, b in pairs:
            if a not in index:
                raise InputError(f"unknown label in pairs: {a!r}")
            if b not in index:
                raise InputError(f"unknown label in pairs: {b!r}")
            mat[index[a], index[b]] = True
        return cls(labels, _closure(mat))

    def __len__(self):
        return len(self.carrier)

    def __eq__(self, other):
        if not isinstance(other, Preorder):
            return NotImplemented
        return self.carrier == other.carrier and bool((self.rel == other.rel).all())

    __hash__ = None

    def __repr__(self):
        kind = type(self).__name__
        return f"{kind}({list(self.carrier)!r}, {int(self.rel.sum())} related pairs)"

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"label {label!r} not in carrier") from None

    def leq(self, a, b):
        return bool(self.rel[self.index(a), self.index(b)])

    def pairs(self):
        """All non-reflexive related pairs, in carrier order."""
        n = len(self.carrier)
        return [
            (self.carrier[i], self.carrier[j])
            for i in range(n)
            for j in range(n)
            if i != j and self.rel[i, j]
        ]

    def is_partial_order(self):
        sym = self.rel & self.rel.T
        return int(sym.sum()) == len(self.carrier)

    def dual(self):
        """The opposite preorder (relation transposed)."""
        return type(self)(self.carrier, self.rel.T)

    def up_indices(self, i):
        """Indices of all elements above carrier[i], including itself."""
        return np.flatnonzero(self.rel[i]).tolist()

    def covering_pairs(self):
        """Transitive reduction (a, b) with b covering a; only meaningful on posets."""
        if not self.is_partial_order():
            raise StructureError("transitive reduction is only defined for posets")
        strict = self.rel & ~np.eye(len(self.carrier), dtype=bool)
        covers = strict & ~(strict @ strict)
        return [
            (self.carrier[i], self.carrier[j])
            for i, j in zip(*np.nonzero(covers))
        ]

    def to_poset(self):
        return Poset(self.carrier, self.rel)


class Poset(Preorder):
    """A preorder that is additionally antisymmetric."""

    def __init__(self, carrier, relation):
        super().__init__(carrier, relation)
        sym = self.rel & self.rel.T
        if int(sym.sum()) != len(self.carrier):
            i, j = next(
                (i, j) for i, j in zip(*np.nonzero(sym)) if i != j)
            raise StructureError(
                f"relation not antisymmetric: {self.carrier[i]!r} and "
                f"{self.carrier[j]!r} are equivalent but distinct")


class MonotoneMap:
    """A total order-preserving assignment between two preorders."""

    def __init__(self, source, target, assignment):
        assignment = dict(assignment)
        for x in source.carrier:
            if x not in assignment:
                raise InputError(f"assignment misses source element {x!r}")
        for x, y in assignment.items():
            source.index(x)
            if y not in target._index:
                raise InputError(f"assignment value {y!r} outside target carrier")
        if not is_monotone(assignment, source, target):
            raise StructureError("assignment is not monotone")
        self.source = source
        self.target = target
        self.assignment = assignment

    def __call__(self, label):
        return self.assignment[label]

    def is_surjective(self):
        return set(self.assignment.values()) == set(self.target.carrier)

    def __repr__(self):
        return f"MonotoneMap({self.assignment!r})"


def preorder_from_pairs(labels, pairs):
    return Preorder.from_pairs(labels, pairs)


def is_partial_order(p):
    return p.is_partial_order()


def is_monotone(assignment, source, target):
    """True iff x <= y in source implies assignment[x] <= assignment[y] in target."""
    n = len(source.carrier)
    images = []
    for x in source.carrier:
        y = assignment[x]
        if y not in target._index:
            raise InputError(f"assignment value {y!r} outside target carrier")
        images.append(target.index(y))
    for i in range(n):
        for j in range(n):
            if source.rel[i, j] and not target.rel[images[i], images[j]]:
                return False
    return True


def product_label(parts):
    """Label of a product element, e.g. ('N', 'P') -> '(N,P)'."""
    return "(" + ",".join(str(p) for p in parts) + ")"


def product(factors):
    """Componentwise product preorder; carrier in row-major factor order."""
    factors = list(factors)
    if not factors:
        raise InputError("empty factor list")
    labels = [product_label(t) for t in itertools.product(*(f.carrier for f in factors))]
    rel = factors[0].rel
    for f in factors[1:]:
        rel = np.kron(rel, f.rel)
    rel = rel.astype(bool)
    if all(isinstance(f, Poset) for f in factors):
        return Poset(labels, rel)
    return Preorder(labels, rel)


def quotient_poset(p):
    """Collapse the equivalence a<=b<=a; returns (poset of classes, projection).

    Class labels are "[m]" with m the lexicographically least member; classes
    are ordered by first occurrence in the source carrier.
    """
    n = len(p.carrier)
    sym = p.rel & p.rel.T
    class_of = [-1] * n
    members = []
    for i in range(n):
        if class_of[i] == -1:
            cls = [j for j in range(n) if sym[i, j]]
            for j in cls:
                class_of[j] = len(members)
            members.append(cls)
    labels = ["[%s]" % min(p.carrier[j] for j in cls) for cls in members]
    m = len(members)
    qrel = np.zeros((m, m), dtype=bool)
    for a in range(m):
        for b in range(m):
            qrel[a, b] = p.rel[members[a][0], members[b][0]]
    poset = Poset(labels, qrel)
    projection = MonotoneMap(
        p, poset, {p.carrier[i]: labels[class_of[i]] for i in range(n)})
    return poset, projection


def _signatures(p):
    """Per-element isomorphism-invariant signatures, one refinement round."""
    n = len(p.carrier)
    down = [int(p.rel[:, i].sum()) for i in range(n)]
    up = [int(p.rel[i, :].sum()) for i in range(n)]
    base = [(down[i], up[i]) for i in range(n)]
    refined = []
    for i in range(n):
        below = sorted(base[j] for j in range(n) if p.rel[j, i] and j != i)
        above = sorted(base[j] for j in range(n) if p.rel[i, j] and j != i)
        refined.append((base[i], tuple(below), tuple(above)))
    return refined


def order_isomorphism(p, q):
    """An order isomorphism p -> q as a label dict, or None."""
    n = len(p.carrier)
    if n != len(q.carrier):
        return None
    sp, sq = _signatures(p), _signatures(q)
    if sorted(sp) != sorted(sq):
        return None
    candidates = [[j for j in range(n) if sq[j] == sp[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: len(candidates[i]))
    assign = [-1] * n
    used = [False] * n

    def consistent(i, j, upto):
        for k in range(upto):
            ik = order[k]
            jk = assign[ik]
            if p.rel[i, ik] != q.rel[j, jk] or p.rel[ik, i] != q.rel[jk, j]:
                return False
        return True

    def backtrack(pos):
        if pos == n:
            return True
        i = order[pos]
        for j in candidates[i]:
            if not used[j] and consistent(i, j, pos):
                assign[i] = j
                used[j] = True
                if backtrack(pos + 1):
                    return True
                used[j] = False
                assign[i] = -1
        return False

    if not backtrack(0):
        return None
    return {p.carrier[i]: q.carrier[assign[i]] for i in range(n)}


def is_order_isomorphism(assignment, p, q):
    """Check a bijection preserves and reflects the order."""
    if sorted(assignment) != sorted(p.carrier):
        return False
    if sorted(assignment.values()) != sorted(q.carrier):
        return False
    for a in p.carrier:
        for b in p.carrier:
            if p.leq(a, b) != q.leq(assignment[a], assignment[b]):
                return False
    return True
