"""Finite categories with explicit composition tables: hom-set preorders by
pre/post-composition witnesses, their stratified structures, the induced
functors into stratified spaces, and Yoneda machinery."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import CapExceeded, InputError, StructureError
from .order import Preorder, is_monotone, quotient_poset
from .topology import PosetStratifiedSpace, alexandroff_from_preorder

MAX_MORPHISMS = 64

SIDES = ("R", "L", "LR")


class FiniteCategory:
    """Objects, finite hom-sets, identities, and a total composition table.

    Morphism labels are globally unique.  Identity laws, associativity, and
    the typing of every composite are checked exhaustively at construction.
    """

    def __init__(self, objects, homs, identities, compose):
        objects = tuple(str(x) for x in objects)
        if len(set(objects)) != len(objects):
            raise InputError("duplicate object labels")
        self.objects = objects
        obj_set = set(objects)

        for x, y in homs:
            if x not in obj_set:
                raise InputError(f"unknown object {x!r} in hom key")
            if y not in obj_set:
                raise InputError(f"unknown object {y!r} in hom key")
        # global morphism order follows object-pair order, not hom-key order
        self.hom_table = {}
        self.dom = {}
        self.cod = {}
        order = []
        for x in objects:
            for y in objects:
                ms = tuple(str(m) for m in homs.get((x, y), ()))
                self.hom_table[(x, y)] = ms
                for m in ms:
                    if m in self.dom:
                        raise InputError(f"morphism label {m!r} used twice")
                    self.dom[m] = x
                    self.cod[m] = y
                    order.append(m)
        self.morphisms = tuple(order)
        if len(self.morphisms) > MAX_MORPHISMS:
            raise CapExceeded(
                f"category has {len(self.morphisms)} morphisms, cap is {MAX_MORPHISMS}")

        self.identity = {}
        for x in objects:
            if x not in identities:
                raise InputError(f"missing identity for object {x!r}")
            i = identities[x]
            if i not in self.hom_table[(x, x)]:
                raise StructureError(f"identity {i!r} is not an endomorphism of {x!r}")
            self.identity[x] = i

        self._compose = {}
        for g, f, h in compose:
            for m in (g, f, h):
                if m not in self.dom:
                    raise InputError(f"unknown morphism {m!r} in composition table")
            if self.cod[f] != self.dom[g]:
                raise StructureError(f"pair ({g!r}, {f!r}) is not composable")
            if (g, f) in self._compose:
                raise InputError(f"duplicate composition entry for ({g!r}, {f!r})")
            if self.dom[h] != self.dom[f] or self.cod[h] != self.cod[g]:
                raise StructureError(
                    f"composite {h!r} of ({g!r}, {f!r}) lands in the wrong hom-set")
            self._compose[(g, f)] = h
        self._check_laws()

    def _check_laws(self):
        for f in self.morphisms:
            x, y = self.dom[f], self.cod[f]
            if self.compose(self.identity[y], f) != f:
                raise StructureError(f"left identity law fails at {f!r}")
            if self.compose(f, self.identity[x]) != f:
                raise StructureError(f"right identity law fails at {f!r}")
        for f in self.morphisms:
            for g in self.morphisms:
                if self.dom[g] != self.cod[f]:
                    continue
                for h in self.morphisms:
                    if self.dom[h] != self.cod[g]:
                        continue
                    if self.compose(h, self.compose(g, f)) != self.compose(
                            self.compose(h, g), f):
                        raise StructureError(
                            f"associativity fails at ({h!r}, {g!r}, {f!r})")

    def hom(self, x, y):
        if x not in self.identity:
            raise InputError(f"unknown object {x!r}")
        if y not in self.identity:
            raise InputError(f"unknown object {y!r}")
        return self.hom_table[(x, y)]

    def compose(self, g, f):
        """g after f."""
        try:
            return self._compose[(g, f)]
        except KeyError:
            raise StructureError(
                f"composition table misses composable pair ({g!r}, {f!r})") from None

    def composable_pairs(self):
        return [
            (g, f)
            for g in self.morphisms
            for f in self.morphisms
            if self.dom[g] == self.cod[f]
        ]

    def __repr__(self):
        return (f"FiniteCategory({len(self.objects)} objects, "
                f"{len(self.morphisms)} morphisms)")


def hom_preorder_details(cat, x, y, side):
    """The hom-set preorder for one side, plus the witnesses found.

    side R:  g <= f  iff  f = g . s  for some endomorphism s of the source;
    side L:  g <= f  iff  f = t . g  for some endomorphism t of the target;
    side LR: g <= f  iff  f = t . g . s.
    """
    if side not in SIDES:
        raise InputError(f"side must be one of {SIDES}, got {side!r}")
    morphs = cat.hom(x, y)
    end_x = cat.hom(x, x)
    end_y = cat.hom(y, y)
    n = len(morphs)
    rel = np.zeros((n, n), dtype=bool)
    witnesses = {}
    for i, g in enumerate(morphs):
        for j, f in enumerate(morphs):
            found = None
            if side == "R":
                found = next(
                    ({"s": s} for s in end_x if cat.compose(g, s) == f), None)
            elif side == "L":
                found = next(
                    ({"t": t} for t in end_y if cat.compose(t, g) == f), None)
            else:
                found = next(
                    ({"s": s, "t": t}
                     for s in end_x for t in end_y
                     if cat.compose(t, cat.compose(g, s)) == f),
                    None)
            if found is not None:
                rel[i, j] = True
                witnesses[(g, f)] = found
    pre = Preorder(morphs, rel)  # reflexivity/transitivity asserted here
    return pre, witnesses


def hom_preorder(cat, x, y, side):
    return hom_preorder_details(cat, x, y, side)[0]


@dataclass
class HomStructureReport:
    side: str
    source: str
    target: str
    preorder: Preorder
    witnesses: dict
    projection_open: bool
    fibers_locally_closed: dict
    order_matches_closure: bool

    def all_hold(self):
        return (self.projection_open
                and all(self.fibers_locally_closed.values())
                and self.order_matches_closure)


def hom_stratified(cat, x, y, side):
    """The poset-stratified structure on hom(x, y) with its structure report:
    the projection is open, fibers are locally closed, and the quotient order
    coincides with closure inclusion of fibers."""
    pre, witnesses = hom_preorder_details(cat, x, y, side)
    if not pre.carrier:
        raise InputError(f"hom({x!r}, {y!r}) is empty; nothing to stratify")
    space = alexandroff_from_preorder(pre)
    strata, projection = quotient_poset(pre)
    pss = PosetStratifiedSpace(space, strata, projection.assignment)

    strata_space = pss.strata_space
    projection_open = True
    for u in space.opens:
        image = 0
        for i, m in enumerate(space.carrier):
            if u & (1 << i):
                image |= 1 << strata_space._index[projection(m)]
        if not strata_space.is_open(image):
            projection_open = False

    fibers = {c: pss.fiber_mask(c) for c in strata.carrier}
    fibers_locally_closed = {
        c: space.is_locally_closed_mask(m) for c, m in fibers.items()
    }
    order_matches_closure = True
    for a in strata.carrier:
        for b in strata.carrier:
            closure_holds = (fibers[a] & ~space.closure_mask(fibers[b])) == 0
            if strata.leq(a, b) != closure_holds:
                order_matches_closure = False
    report = HomStructureReport(
        side=side, source=x, target=y, preorder=pre, witnesses=witnesses,
        projection_open=projection_open,
        fibers_locally_closed=fibers_locally_closed,
        order_matches_closure=order_matches_closure)
    return pss, report


@dataclass
class SquareCheck:
    morphism: str
    monotone: bool
    descends: bool
    quotient_monotone: bool
    square_commutes: bool

    def ok(self):
        return (self.monotone and self.descends and self.quotient_monotone
                and self.square_commutes)


@dataclass
class FunctorCheckReport:
    anchor: str
    side: str
    squares: list = field(default_factory=list)
    identity_law: bool = True
    composition_law: bool = True

    def ok(self):
        return (self.identity_law and self.composition_law
                and all(s.ok() for s in self.squares))


def _translation(cat, anchor, side, f):
    """The hom-set map induced by a morphism f under one of the two functors."""
    if side == "R-covariant":
        # hom(anchor, dom f) -> hom(anchor, cod f), post-composition with f
        src = cat.hom(anchor, cat.dom[f])
        return {g: cat.compose(f, g) for g in src}
    # hom(cod f, anchor) -> hom(dom f, anchor), pre-composition with f
    src = cat.hom(cat.cod[f], anchor)
    return {g: cat.compose(g, f) for g in src}


def st_functor_check(cat, anchor, side):
    """Verify the stratified-space functor induced by an anchor object.

    For every morphism: the translation map is monotone, descends to the
    quotient posets, and the projection square commutes elementwise.  Functor
    laws (identities and composition, reversed for the contravariant side)
    are checked on the underlying hom-set maps.
    """
    if side not in ("R-covariant", "L-contravariant"):
        raise InputError("side must be 'R-covariant' or 'L-contravariant'")
    cat.hom(anchor, anchor)
    pre_side = "R" if side == "R-covariant" else "L"

    data = {}
    for obj in cat.objects:
        pair = (anchor, obj) if pre_side == "R" else (obj, anchor)
        pre = hom_preorder(cat, *pair, pre_side)
        strata, projection = quotient_poset(pre)
        data[obj] = (pre, strata, projection)

    report = FunctorCheckReport(anchor=anchor, side=side)
    for f in cat.morphisms:
        if pre_side == "R":
            src_obj, tgt_obj = cat.dom[f], cat.cod[f]
        else:
            src_obj, tgt_obj = cat.cod[f], cat.dom[f]
        pre_s, strata_s, proj_s = data[src_obj]
        pre_t, strata_t, proj_t = data[tgt_obj]
        phi = _translation(cat, anchor, side, f)

        monotone = is_monotone(phi, pre_s, pre_t) if pre_s.carrier else True
        descends = True
        induced = {}
        for g in pre_s.carrier:
            cls = proj_s(g)
            img = proj_t(phi[g])
            if cls in induced and induced[cls] != img:
                descends = False
            induced[cls] = img
        quotient_monotone = (
            descends and (not strata_s.carrier or
                          is_monotone({c: induced[c] for c in strata_s.carrier},
                                      strata_s, strata_t)))
        square = all(proj_t(phi[g]) == induced[proj_s(g)] for g in pre_s.carrier)
        report.squares.append(SquareCheck(
            morphism=f, monotone=monotone, descends=descends,
            quotient_monotone=quotient_monotone, square_commutes=square))

    for x in cat.objects:
        ident = _translation(cat, anchor, side, cat.identity[x])
        if any(ident[g] != g for g in ident):
            report.identity_law = False
    for g, f in cat.composable_pairs():
        gf = cat.compose(g, f)
        whole = _translation(cat, anchor, side, gf)
        if side == "R-covariant":
            first, second = _translation(cat, anchor, side, f), _translation(
                cat, anchor, side, g)
        else:
            first, second = _translation(cat, anchor, side, g), _translation(
                cat, anchor, side, f)
        for m in whole:
            if second[first[m]] != whole[m]:
                report.composition_law = False
    return report


class SetFunctor:
    """A functor into finite sets given by explicit value tables."""

    def __init__(self, cat, variance, on_objects, on_morphisms):
        if variance not in ("covariant", "contravariant"):
            raise InputError("variance must be 'covariant' or 'contravariant'")
        self.cat = cat
        self.variance = variance
        self.on_objects = {
            x: tuple(str(v) for v in vs) for x, vs in on_objects.items()
        }
        for x in cat.objects:
            if x not in self.on_objects:
                raise InputError(f"functor misses object {x!r}")
            vals = self.on_objects[x]
            if len(set(vals)) != len(vals):
                raise InputError(f"duplicate elements in value set of {x!r}")
        self.on_morphisms = {m: dict(fn) for m, fn in on_morphisms.items()}
        self._check()

    def source_object(self, m):
        return self.cat.dom[m] if self.variance == "covariant" else self.cat.cod[m]

    def target_object(self, m):
        return self.cat.cod[m] if self.variance == "covariant" else self.cat.dom[m]

    def _check(self):
        cat = self.cat
        for m in cat.morphisms:
            if m not in self.on_morphisms:
                raise InputError(f"functor misses morphism {m!r}")
            fn = self.on_morphisms[m]
            src = set(self.on_objects[self.source_object(m)])
            tgt = set(self.on_objects[self.target_object(m)])
            if set(fn) != src:
                raise StructureError(f"value map of {m!r} is not total on its source set")
            if not set(fn.values()) <= tgt:
                raise StructureError(f"value map of {m!r} escapes its target set")
        for x in cat.objects:
            fn = self.on_morphisms[cat.identity[x]]
            if any(fn[v] != v for v in fn):
                raise StructureError(f"functor does not preserve the identity of {x!r}")
        for g, f in cat.composable_pairs():
            gf = self.on_morphisms[cat.compose(g, f)]
            fg, fF = self.on_morphisms[g], self.on_morphisms[f]
            if self.variance == "covariant":
                composed = {v: fg[fF[v]] for v in fF}
            else:
                composed = {v: fF[fg[v]] for v in fg}
            if composed != gf:
                raise StructureError(
                    f"functor does not respect composition at ({g!r}, {f!r})")

    def apply(self, m, value):
        return self.on_morphisms[m][value]

    def __repr__(self):
        sizes = {x: len(v) for x, v in self.on_objects.items()}
        return f"SetFunctor({self.variance}, sizes={sizes})"


@dataclass
class YonedaReport:
    object_count: int
    transformation_count: int
    target_size: int
    bijection_holds: bool
    inverse_holds: bool

    def ok(self):
        return (self.transformation_count == self.target_size
                and self.bijection_holds and self.inverse_holds)


def yoneda_natural_transformations(cat, functor, anchor, cap=200000):
    """Exhaustively enumerate the natural transformations hom(-, anchor) -> F
    and verify the evaluation-at-identity bijection onto F(anchor).

    Each transformation is a dict object -> (dict morphism -> element).
    """
    if functor.variance != "contravariant":
        raise InputError("the representable side here is contravariant; pass a contravariant functor")
    cat.hom(anchor, anchor)

    total = 1
    for x in cat.objects:
        h = cat.hom(x, anchor)
        fx = functor.on_objects[x]
        if h and not fx:
            total = 0
            break
        total *= max(1, len(fx)) ** len(h)
        if total > cap:
            raise CapExceeded(
                f"natural transformation search space exceeds cap {cap}")

    objs = list(cat.objects)

    def components(x):
        h = cat.hom(x, anchor)
        fx = functor.on_objects[x]
        if not h:
            yield {}
            return
        if not fx:
            return
        for combo in itertools.product(fx, repeat=len(h)):
            yield dict(zip(h, combo))

    def natural_between(tau, w, z):
        # contravariant naturality over g: w -> z, pulled back along g
        for g in cat.hom(w, z):
            for h in cat.hom(z, anchor):
                if tau[w][cat.compose(h, g)] != functor.apply(g, tau[z][h]):
                    return False
        return True

    results = []

    def extend(pos, tau):
        if pos == len(objs):
            results.append({x: dict(c) for x, c in tau.items()})
            return
        x = objs[pos]
        for comp in components(x):
            tau[x] = comp
            ok = True
            for y in objs[: pos + 1]:
                if not natural_between(tau, x, y) or not natural_between(tau, y, x):
                    ok = False
                    break
            if ok:
                extend(pos + 1, tau)
            del tau[x]

    extend(0, {})

    target = functor.on_objects[anchor]
    ident = cat.identity[anchor]
    evaluations = [tau[anchor][ident] for tau in results] if results else []
    bijection = (sorted(evaluations) == sorted(set(evaluations))
                 and set(evaluations) == set(target))
    if not results:
        bijection = not target

    inverse_ok = True
    for alpha in target:
        built = {
            x: {f: functor.apply(f, alpha) for f in cat.hom(x, anchor)}
            for x in cat.objects
        }
        if built not in results:
            inverse_ok = False
        elif built[anchor][ident] != alpha:
            inverse_ok = False

    report = YonedaReport(
        object_count=len(objs),
        transformation_count=len(results),
        target_size=len(target),
        bijection_holds=bijection,
        inverse_holds=inverse_ok)
    return results, report


IMAGE_ORDER_NOTE = (
    "order direction: computed from the witness definition, g <=_L f (f = t.g) "
    "forces image(f) to be a subset of image(g); the commonly stated direction "
    "with the roles of f and g exchanged does not follow from that definition "
    "and is reported here as a discrepancy rather than asserted")


def yoneda_image(cat, functor, anchor, x):
    """image map on hom(x, anchor): f maps to { F(f)(a) : a in F(anchor) }."""
    if functor.variance != "contravariant":
        raise InputError("yoneda_image expects a contravariant functor")
    target = functor.on_objects[anchor]
    return {
        f: frozenset(functor.apply(f, a) for a in target)
        for f in cat.hom(x, anchor)
    }


@dataclass
class ImageReport:
    images: dict
    naturality_holds: bool
    monotone_inclusion_holds: bool
    note: str = IMAGE_ORDER_NOTE

    def ok(self):
        return self.naturality_holds and self.monotone_inclusion_holds


def yoneda_image_report(cat, functor, anchor):
    """Whole-category image report: the image family is natural, and the
    left preorder makes it inclusion-reversing (see the note)."""
    images = {x: yoneda_image(cat, functor, anchor, x) for x in cat.objects}
    natural = True
    for g in cat.morphisms:
        x, y = cat.dom[g], cat.cod[g]
        for f in cat.hom(y, anchor):
            pulled = frozenset(functor.apply(g, v) for v in images[y][f])
            if images[x][cat.compose(f, g)] != pulled:
                natural = False
    monotone = True
    for x in cat.objects:
        if not cat.hom(x, anchor):
            continue
        pre = hom_preorder(cat, x, anchor, "L")
        for g in pre.carrier:
            for f in pre.carrier:
                if pre.leq(g, f) and not images[x][f] <= images[x][g]:
                    monotone = False
    return ImageReport(
        images=images, naturality_holds=natural,
        monotone_inclusion_holds=monotone)
