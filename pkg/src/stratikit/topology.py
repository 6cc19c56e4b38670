"""Finite topological spaces and the two functors linking them with preorders.

Subsets are bitmasks over the carrier ordering; the family of open sets is
kept in a canonical order (cardinality, then index-lexicographic) so that two
topologies are equal exactly when their serialized forms are.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import CapExceeded, InputError, StructureError
from .order import Poset, Preorder, product_label

MAX_POINTS = 20


def _bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _sort_key(mask):
    idx = _bits(mask)
    return (len(idx), tuple(idx))


class FiniteTopology:
    """An explicit family of open subsets of a finite carrier."""

    def __init__(self, carrier, opens, _validate=True):
        carrier = tuple(carrier)
        if len(set(carrier)) != len(carrier):
            raise InputError("duplicate labels in carrier")
        if len(carrier) > MAX_POINTS:
            raise CapExceeded(
                f"explicit topologies are capped at {MAX_POINTS} points; "
                "stay with the preorder representation for larger carriers")
        opens = sorted(set(int(m) for m in opens), key=_sort_key)
        self.carrier = carrier
        self.opens = tuple(opens)
        self._index = {x: i for i, x in enumerate(carrier)}
        self._full = (1 << len(carrier)) - 1
        self._open_set = frozenset(opens)
        if _validate:
            self._check_axioms()

    def _check_axioms(self):
        if 0 not in self._open_set:
            raise StructureError("empty set missing from the open family")
        if self._full not in self._open_set:
            raise StructureError("carrier missing from the open family")
        for a, b in itertools.combinations(self.opens, 2):
            if (a | b) not in self._open_set:
                raise StructureError(
                    f"union escape: {self.labels(a)} | {self.labels(b)} not open")
            if (a & b) not in self._open_set:
                raise StructureError(
                    f"intersection escape: {self.labels(a)} & {self.labels(b)} not open")

    @classmethod
    def from_open_sets(cls, carrier, families):
        """Validate an explicit family of label lists as a topology."""
        carrier = tuple(carrier)
        masks = []
        seen = set()
        index = {x: i for i, x in enumerate(carrier)}
        for fam in families:
            mask = 0
            for x in fam:
                if x not in index:
                    raise InputError(f"open set member {x!r} not in carrier")
                mask |= 1 << index[x]
            if mask in seen:
                raise StructureError(f"duplicate open set {sorted(map(str, fam))}")
            seen.add(mask)
            masks.append(mask)
        return cls(carrier, masks)

    @classmethod
    def from_preorder(cls, p):
        """Opens are all up-sets of the preorder (unions of the minimal up-sets)."""
        n = len(p.carrier)
        if n > MAX_POINTS:
            raise CapExceeded(
                f"refusing to enumerate up to 2^{n} open sets; carrier cap is {MAX_POINTS}")
        basis = []
        for i in range(n):
            mask = 0
            for j in p.up_indices(i):
                mask |= 1 << j
            basis.append(mask)
        opens = {0}
        for b in basis:
            opens |= {o | b for o in opens}
        return cls(p.carrier, opens, _validate=False)

    # -- subset plumbing -----------------------------------------------------

    def mask(self, labels):
        m = 0
        for x in labels:
            if x not in self._index:
                raise InputError(f"subset member {x!r} not in carrier")
            m |= 1 << self._index[x]
        return m

    def labels(self, mask):
        return tuple(self.carrier[i] for i in _bits(mask))

    @property
    def full_mask(self):
        return self._full

    def is_open(self, mask):
        return mask in self._open_set

    def is_closed(self, mask):
        return (self._full & ~mask) in self._open_set

    def closed_sets(self):
        return tuple(sorted((self._full & ~o for o in self.opens), key=_sort_key))

    # -- closure operators ---------------------------------------------------

    def closure_mask(self, mask):
        """Smallest closed superset: drop every open set disjoint from the subset."""
        gone = 0
        for o in self.opens:
            if o & mask == 0:
                gone |= o
        return self._full & ~gone

    def closure(self, labels):
        return self.labels(self.closure_mask(self.mask(labels)))

    def interior_mask(self, mask):
        inside = 0
        for o in self.opens:
            if o & ~mask == 0:
                inside |= o
        return inside

    def is_locally_closed_mask(self, mask):
        """True iff the subset is open inside its own closure."""
        c = self.closure_mask(mask)
        u = 0
        for o in self.opens:
            if o & c & ~mask == 0:
                u |= o
        return (c & u) == mask

    def is_locally_closed(self, labels):
        return self.is_locally_closed_mask(self.mask(labels))

    # -- the specialization functor -------------------------------------------

    def minimal_open_mask(self, i):
        m = self._full
        for o in self.opens:
            if o & (1 << i):
                m &= o
        return m

    def specialization_preorder(self):
        """x <= y iff x lies in the closure of {y}; cross-checked against the
        minimal-open characterization (every open containing x contains y)."""
        n = len(self.carrier)
        rel = np.zeros((n, n), dtype=bool)
        minimal = [self.minimal_open_mask(i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                rel[i, j] = bool(minimal[i] & (1 << j))
        for j in range(n):
            around = self.closure_mask(1 << j)
            for i in range(n):
                if bool(around & (1 << i)) != bool(rel[i, j]):
                    raise StructureError(
                        "specialization characterizations disagree at "
                        f"({self.carrier[i]!r}, {self.carrier[j]!r})")
        return Preorder(self.carrier, rel)

    def __eq__(self, other):
        if not isinstance(other, FiniteTopology):
            return NotImplemented
        return self.carrier == other.carrier and self.opens == other.opens

    __hash__ = None

    def __repr__(self):
        return f"FiniteTopology({list(self.carrier)!r}, {len(self.opens)} opens)"

    def opens_as_labels(self):
        return [list(self.labels(o)) for o in self.opens]


def validate_topology(carrier, families):
    return FiniteTopology.from_open_sets(carrier, families)


def alexandroff_from_preorder(p):
    return FiniteTopology.from_preorder(p)


def specialization_preorder(t):
    return t.specialization_preorder()


def product_topology(factors):
    """Product space: all unions of open boxes; checked against the Alexandroff
    topology of the product of specialization preorders."""
    factors = list(factors)
    if not factors:
        raise InputError("empty factor list")
    sizes = [len(t.carrier) for t in factors]
    total = 1
    for s in sizes:
        total *= s
    if total > MAX_POINTS:
        raise CapExceeded(f"product carrier would have {total} points, cap is {MAX_POINTS}")
    carrier = [product_label(t) for t in itertools.product(*(f.carrier for f in factors))]

    strides = [1] * len(factors)
    for d in range(len(factors) - 2, -1, -1):
        strides[d] = strides[d + 1] * sizes[d + 1]

    def box(open_combo):
        mask = 0
        for idx in itertools.product(*(_bits(o) for o in open_combo)):
            flat = sum(i * s for i, s in zip(idx, strides))
            mask |= 1 << flat
        return mask

    opens = {0}
    for combo in itertools.product(*(f.opens for f in factors)):
        b = box(combo)
        opens |= {o | b for o in opens}
    out = FiniteTopology(carrier, opens, _validate=False)

    from .order import product as order_product  # local import avoids a cycle at module load

    via_preorder = FiniteTopology.from_preorder(
        order_product([f.specialization_preorder() for f in factors]))
    if out != via_preorder:
        raise StructureError("box-generated product disagrees with the Alexandroff product")
    return out


class PosetStratifiedSpace:
    """A space together with a continuous map to a poset carrying its
    Alexandroff topology."""

    def __init__(self, space, strata_poset, strat_map):
        if not isinstance(strata_poset, Poset):
            raise InputError("strata must form a poset")
        strat_map = dict(strat_map)
        for x in space.carrier:
            if x not in strat_map:
                raise InputError(f"stratification map misses point {x!r}")
            strata_poset.index(strat_map[x])
        strata_space = FiniteTopology.from_preorder(strata_poset)
        for u in strata_space.opens:
            pre = 0
            for i, x in enumerate(space.carrier):
                if u & (1 << strata_space._index[strat_map[x]]):
                    pre |= 1 << i
            if not space.is_open(pre):
                raise StructureError(
                    f"stratification map not continuous: preimage of "
                    f"{strata_space.labels(u)} is not open")
        self.space = space
        self.strata_poset = strata_poset
        self.strat_map = strat_map
        self.strata_space = strata_space

    def fiber_mask(self, stratum):
        self.strata_poset.index(stratum)
        m = 0
        for i, x in enumerate(self.space.carrier):
            if self.strat_map[x] == stratum:
                m |= 1 << i
        return m

    def __repr__(self):
        return (f"PosetStratifiedSpace({len(self.space.carrier)} points over "
                f"{len(self.strata_poset.carrier)} strata)")
