"""Combinatorial atlas of a normal crossing compactification.

The atlas records the closed strata of an arrangement of smooth divisor
components inside a smooth projective ambient space: one PureHodgeRing per
stratum, restriction maps along codimension-one inclusions, the matching
Gysin maps, and the divisor classes.  Everything downstream (weight rows,
cup products, duality reports) is computed from this data alone.

Strata are keyed by (sorted tuple of component indices, label); the label
separates the connected components of one deep intersection and is empty
whenever intersections are connected.  The ambient space is the unique
stratum with the empty index tuple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadParams,
    DimensionMismatch,
    LatticeError,
    MissingStratum,
    UnknownStratum,
)
from .linalg import RationalMatrix, Vector, vector, zero_vector
from .rings import Bidegree, PureHodgeRing, truncated_polynomial_ring

StratumKey = tuple[tuple[int, ...], str]
BlockMap = dict[tuple[int, Bidegree], RationalMatrix]


def key_to_string(key: StratumKey) -> str:
    """Printable form of a stratum key: comma-joined indices, then |label.

    The ambient stratum prints as the empty string.
    """
    indices, label = key
    text = ",".join(str(a) for a in indices)
    return f"{text}|{label}" if label else text


def key_from_string(text: str) -> StratumKey:
    head, sep, label = text.partition("|")
    head = head.strip()
    try:
        indices = tuple(int(piece) for piece in head.split(",")) if head else ()
    except ValueError as exc:
        raise BadParams(f"bad stratum key {text!r}: {exc}") from None
    if list(indices) != sorted(set(indices)):
        raise BadParams(f"bad stratum key {text!r}: indices must be sorted and unique")
    return (indices, label if sep else "")


@dataclass(frozen=True)
class Stratum:
    indices: tuple[int, ...]
    label: str
    ring: PureHodgeRing

    @property
    def key(self) -> StratumKey:
        return (self.indices, self.label)

    @property
    def dim(self) -> int:
        return self.ring.dim


def identity_blockmap(ring: PureHodgeRing) -> BlockMap:
    return {
        (j, ab): RationalMatrix.identity(d)
        for j in ring.degrees()
        for ab, d in ring.slices(j)
    }


def compose_blockmaps(second: BlockMap, first: BlockMap) -> BlockMap:
    """Blocks of `second after first`; absent keys act as zero."""
    out: BlockMap = {}
    for key, mat in first.items():
        follow = second.get(key)
        if follow is not None:
            out[key] = follow @ mat
    return out


def blockmap_apply(bm: BlockMap, j: int, ab: Bidegree, v: Vector, target_dim: int) -> Vector:
    mat = bm.get((j, ab))
    if mat is None:
        return zero_vector(target_dim)
    return mat.apply(v)


class StrataAtlas:
    """Strata, restrictions, Gysin maps and divisor classes of one model."""

    def __init__(
        self,
        components: tuple[str, ...] | list[str],
        strata: list[Stratum] | tuple[Stratum, ...],
        restrictions: dict[tuple[StratumKey, StratumKey], BlockMap],
        gysin: dict[tuple[StratumKey, StratumKey], BlockMap],
        divisor_classes: dict[tuple[int, StratumKey], Vector],
    ):
        self.components = tuple(components)
        self.strata: dict[StratumKey, Stratum] = {}
        for stratum in strata:
            if stratum.key in self.strata:
                raise LatticeError(f"duplicate stratum key {stratum.key}")
            self.strata[stratum.key] = stratum
        self.restrictions = dict(restrictions)
        self.gysin = dict(gysin)
        self.divisor_classes = dict(divisor_classes)
        self._rho_cache: dict[tuple[StratumKey, StratumKey], BlockMap] = {}
        self._finalize()

    # -- structural bookkeeping -------------------------------------------

    def _finalize(self) -> None:
        ambient = [s for s in self.strata.values() if s.indices == ()]
        if len(ambient) != 1:
            raise LatticeError("need exactly one ambient stratum (empty index set)")
        self.x_key: StratumKey = ambient[0].key
        self.dim = ambient[0].dim

        valid = range(len(self.components))
        by_index: dict[tuple[int, ...], list[StratumKey]] = {}
        for stratum in self.strata.values():
            idx = stratum.indices
            if list(idx) != sorted(set(idx)) or any(a not in valid for a in idx):
                raise LatticeError(f"bad index tuple on stratum {stratum.key}")
            if stratum.dim != self.dim - len(idx):
                raise DimensionMismatch(
                    f"stratum {stratum.key}: dim {stratum.dim}, expected "
                    f"{self.dim - len(idx)}"
                )
            by_index.setdefault(idx, []).append(stratum.key)
        self.by_index = {idx: tuple(sorted(keys)) for idx, keys in by_index.items()}

        self.parent: dict[tuple[StratumKey, int], StratumKey] = {}
        children: dict[tuple[StratumKey, int], list[StratumKey]] = {}
        for (skey, tkey) in self.restrictions:
            self._check_key(skey)
            self._check_key(tkey)
            si, ti = set(skey[0]), set(tkey[0])
            extra = ti - si
            if not (si < ti and len(extra) == 1):
                raise LatticeError(f"restriction {skey} -> {tkey} is not a cover")
            a = extra.pop()
            if (tkey, a) in self.parent:
                raise LatticeError(f"ambiguous parent of {tkey} along {a}")
            self.parent[(tkey, a)] = skey
            children.setdefault((skey, a), []).append(tkey)
        self.children = {key: tuple(sorted(v)) for key, v in children.items()}

        for stratum in self.strata.values():
            for a in stratum.indices:
                if (stratum.key, a) not in self.parent:
                    raise LatticeError(
                        f"stratum {stratum.key} has no parent along component {a}"
                    )

        for pair in self.gysin:
            skey, tkey = pair[1], pair[0]
            if (skey, tkey) not in self.restrictions:
                raise LatticeError(f"gysin map {pair} without matching restriction")
        for (skey, tkey) in self.restrictions:
            if (tkey, skey) not in self.gysin:
                raise LatticeError(f"restriction {skey} -> {tkey} without gysin map")

        self._check_blockmap_shapes()
        self._descendants: dict[StratumKey, frozenset[StratumKey]] = {}
        for key in sorted(self.strata, key=lambda k: -len(k[0])):
            descend = {key}
            for a in range(len(self.components)):
                for child in self.children.get((key, a), ()):
                    descend |= self._descendants[child]
            self._descendants[key] = frozenset(descend)

        for (a, skey), cls in self.divisor_classes.items():
            if a not in valid:
                raise LatticeError(f"divisor class for unknown component {a}")
            self._check_key(skey)
            expect = self.ring(skey).slice_dim(2, (1, 1))
            if len(cls) != expect:
                raise DimensionMismatch(
                    f"divisor class ({a}, {skey}): length {len(cls)}, expected {expect}"
                )

    def _check_key(self, key: StratumKey) -> None:
        if key not in self.strata:
            raise UnknownStratum(f"no stratum {key} in atlas")

    def _check_blockmap_shapes(self) -> None:
        for (skey, tkey), bm in self.restrictions.items():
            src, tgt = self.ring(skey), self.ring(tkey)
            for (j, ab), mat in bm.items():
                want = (tgt.slice_dim(j, ab), src.slice_dim(j, ab))
                if mat.shape != want:
                    raise DimensionMismatch(
                        f"restriction {skey}->{tkey} block {(j, ab)}: "
                        f"shape {mat.shape}, expected {want}"
                    )
        for (tkey, skey), bm in self.gysin.items():
            src, tgt = self.ring(tkey), self.ring(skey)
            for (j, ab), mat in bm.items():
                want = (
                    tgt.slice_dim(j + 2, (ab[0] + 1, ab[1] + 1)),
                    src.slice_dim(j, ab),
                )
                if mat.shape != want:
                    raise DimensionMismatch(
                        f"gysin {tkey}->{skey} block {(j, ab)}: "
                        f"shape {mat.shape}, expected {want}"
                    )

    # -- queries ------------------------------------------------------------

    def stratum(self, key: StratumKey) -> Stratum:
        self._check_key(key)
        return self.strata[key]

    def ring(self, key: StratumKey) -> PureHodgeRing:
        return self.stratum(key).ring

    def keys_sorted(self) -> tuple[StratumKey, ...]:
        return tuple(sorted(self.strata, key=lambda k: (len(k[0]), k)))

    def components_of(self, indices) -> tuple[StratumKey, ...]:
        return self.by_index.get(tuple(sorted(set(indices))), ())

    def leq(self, below: StratumKey, above: StratumKey) -> bool:
        """True iff `below` is contained in the closure of `above`."""
        return below in self._descendants[above]

    def intersection_components(self, indices, under) -> tuple[StratumKey, ...]:
        """Components with the given index set lying inside all of `under`."""
        return tuple(
            key
            for key in self.components_of(indices)
            if all(self.leq(key, up) for up in under)
        )

    def divisor_class(self, a: int, key: StratumKey) -> Vector:
        cls = self.divisor_classes.get((a, key))
        if cls is None:
            return zero_vector(self.ring(key).slice_dim(2, (1, 1)))
        return cls

    def divisor_connected_components(self) -> int:
        """Connected components of the whole divisor: depth-one pieces glued
        along the pairwise intersections that contain a common stratum."""
        pieces = [key for key in self.strata if len(key[0]) == 1]
        root = {key: key for key in pieces}

        def find(key):
            while root[key] != key:
                root[key] = root[root[key]]
                key = root[key]
            return key

        for key in self.strata:
            if len(key[0]) != 2:
                continue
            a, b = key[0]
            pa = find(self.parent[(key, b)])
            pb = find(self.parent[(key, a)])
            if pa != pb:
                root[pa] = pb
        return len({find(key) for key in pieces})

    def gysin_map(self, tkey: StratumKey, skey: StratumKey) -> BlockMap:
        try:
            return self.gysin[(tkey, skey)]
        except KeyError:
            raise LatticeError(f"no gysin map {tkey} -> {skey}") from None

    def rho(self, skey: StratumKey, tkey: StratumKey) -> BlockMap:
        """Restriction from `skey` to any stratum `tkey` below it, composed
        along covers in ascending component order."""
        cached = self._rho_cache.get((skey, tkey))
        if cached is None:
            cached = self._rho_walk(skey, tkey, ascending=True)
            self._rho_cache[(skey, tkey)] = cached
        return cached

    def _rho_walk(self, skey: StratumKey, tkey: StratumKey, ascending: bool) -> BlockMap:
        if not self.leq(tkey, skey):
            raise MissingStratum(f"{tkey} does not lie inside {skey}")
        current = skey
        bm = identity_blockmap(self.ring(skey))
        steps = sorted(set(tkey[0]) - set(skey[0]), reverse=not ascending)
        for a in steps:
            options = [
                child
                for child in self.children.get((current, a), ())
                if self.leq(tkey, child)
            ]
            if len(options) != 1:
                raise LatticeError(
                    f"no unique step from {current} along {a} toward {tkey}"
                )
            bm = compose_blockmaps(self.restrictions[(current, options[0])], bm)
            current = options[0]
        return bm


# -- axiom validation --------------------------------------------------------


@dataclass(frozen=True)
class AtlasReport:
    ok: bool
    violations: tuple[str, ...]

    def __str__(self) -> str:
        if self.ok:
            return "atlas valid"
        return "atlas invalid:\n" + "\n".join(f"  - {v}" for v in self.violations)


def _basis(dim: int, index: int) -> Vector:
    return tuple(Fraction(1 if i == index else 0) for i in range(dim))


def _ring_violations(key: StratumKey, ring: PureHodgeRing) -> list[str]:
    out = []
    basis = list(ring.basis_elements())
    for j, ab, u in basis:
        x = _basis(ring.slice_dim(j, ab), u)
        left = ring.mult_apply(0, (0, 0), ring.unit, j, ab, x)
        right = ring.mult_apply(j, ab, x, 0, (0, 0), ring.unit)
        if left != x:
            out.append(f"{key}: unit fails on the left at {(j, ab, u)}")
        if right != x:
            out.append(f"{key}: unit fails on the right at {(j, ab, u)}")
    for j1, ab1, u in basis:
        for j2, ab2, v in basis:
            x = _basis(ring.slice_dim(j1, ab1), u)
            y = _basis(ring.slice_dim(j2, ab2), v)
            xy = ring.mult_apply(j1, ab1, x, j2, ab2, y)
            yx = ring.mult_apply(j2, ab2, y, j1, ab1, x)
            sign = -1 if (j1 % 2 and j2 % 2) else 1
            if xy != tuple(sign * t for t in yx):
                out.append(
                    f"{key}: graded commutativity fails at {(j1, ab1, u)}x{(j2, ab2, v)}"
                )
    return out


def validate_atlas(atlas: StrataAtlas) -> AtlasReport:
    """Check the multiplicative and functorial axioms the builders rely on.

    Pure: no state is mutated, the report lists every violated identity.
    Beyond ring sanity, restriction functoriality, restrictions being ring
    maps, the projection formula and gysin-after-restriction, this also
    certifies restriction-after-gysin, naturality of divisor classes and
    base change across transversal squares; the row builders need all of
    them for their differentials to square to zero.
    """
    violations: list[str] = []
    for key, stratum in sorted(atlas.strata.items()):
        violations.extend(_ring_violations(key, stratum.ring))

    ncomp = len(atlas.components)
    covers = sorted(atlas.restrictions)

    # restriction functoriality: both cover orders into a double intersection
    for skey in atlas.keys_sorted():
        extra = [a for a in range(ncomp) if a not in skey[0]]
        for a, b in itertools.combinations(extra, 2):
            deep = set(skey[0]) | {a, b}
            for tkey in atlas.intersection_components(deep, [skey]):
                up = atlas._rho_walk(skey, tkey, ascending=True)
                down = atlas._rho_walk(skey, tkey, ascending=False)
                if up != down:
                    violations.append(
                        f"restriction to {tkey} from {skey} depends on the path"
                    )

    for skey, tkey in covers:
        ring_s, ring_t = atlas.ring(skey), atlas.ring(tkey)
        rest = atlas.restrictions[(skey, tkey)]
        gys = atlas.gysin[(tkey, skey)]
        a = (set(tkey[0]) - set(skey[0])).pop()
        c_s = atlas.divisor_class(a, skey)
        c_t = atlas.divisor_class(a, tkey)

        # restriction is a ring map
        unit_image = blockmap_apply(rest, 0, (0, 0), ring_s.unit, ring_t.slice_dim(0, (0, 0)))
        if unit_image != ring_t.unit:
            violations.append(f"{skey}->{tkey}: restriction does not fix the unit")
        for j1, ab1, u in ring_s.basis_elements():
            x = _basis(ring_s.slice_dim(j1, ab1), u)
            rx = blockmap_apply(rest, j1, ab1, x, ring_t.slice_dim(j1, ab1))
            for j2, ab2, v in ring_s.basis_elements():
                y = _basis(ring_s.slice_dim(j2, ab2), v)
                jt = j1 + j2
                abt = (ab1[0] + ab2[0], ab1[1] + ab2[1])
                lhs = blockmap_apply(
                    rest, jt, abt, ring_s.mult_apply(j1, ab1, x, j2, ab2, y),
                    ring_t.slice_dim(jt, abt),
                )
                ry = blockmap_apply(rest, j2, ab2, y, ring_t.slice_dim(j2, ab2))
                rhs = ring_t.mult_apply(j1, ab1, rx, j2, ab2, ry)
                if lhs != rhs:
                    violations.append(
                        f"{skey}->{tkey}: restriction not multiplicative at "
                        f"{(j1, ab1, u)}x{(j2, ab2, v)}"
                    )

        # projection formula: gysin(x . rho(y)) = gysin(x) . y
        for j1, ab1, u in ring_t.basis_elements():
            x = _basis(ring_t.slice_dim(j1, ab1), u)
            gx = blockmap_apply(
                gys, j1, ab1, x, ring_s.slice_dim(j1 + 2, (ab1[0] + 1, ab1[1] + 1))
            )
            for j2, ab2, v in ring_s.basis_elements():
                y = _basis(ring_s.slice_dim(j2, ab2), v)
                ry = blockmap_apply(rest, j2, ab2, y, ring_t.slice_dim(j2, ab2))
                prod_t = ring_t.mult_apply(j1, ab1, x, j2, ab2, ry)
                jt = j1 + j2
                abt = (ab1[0] + ab2[0], ab1[1] + ab2[1])
                lhs = blockmap_apply(
                    gys, jt, abt, prod_t,
                    ring_s.slice_dim(jt + 2, (abt[0] + 1, abt[1] + 1)),
                )
                rhs = ring_s.mult_apply(
                    j1 + 2, (ab1[0] + 1, ab1[1] + 1), gx, j2, ab2, y
                )
                if lhs != rhs:
                    violations.append(
                        f"{tkey}->{skey}: projection formula fails at "
                        f"{(j1, ab1, u)}x{(j2, ab2, v)}"
                    )

        # gysin after restriction = multiplication by the divisor class upstairs
        for j, ab, u in ring_s.basis_elements():
            y = _basis(ring_s.slice_dim(j, ab), u)
            ry = blockmap_apply(rest, j, ab, y, ring_t.slice_dim(j, ab))
            lhs = blockmap_apply(
                gys, j, ab, ry, ring_s.slice_dim(j + 2, (ab[0] + 1, ab[1] + 1))
            )
            rhs = ring_s.mult_apply(2, (1, 1), c_s, j, ab, y)
            if lhs != rhs:
                violations.append(
                    f"{skey}->{tkey}: gysin-after-restriction fails at {(j, ab, u)}"
                )

        # restriction after gysin = multiplication by the divisor class downstairs
        for j, ab, u in ring_t.basis_elements():
            x = _basis(ring_t.slice_dim(j, ab), u)
            gx = blockmap_apply(
                gys, j, ab, x, ring_s.slice_dim(j + 2, (ab[0] + 1, ab[1] + 1))
            )
            lhs = blockmap_apply(
                rest, j + 2, (ab[0] + 1, ab[1] + 1), gx,
                ring_t.slice_dim(j + 2, (ab[0] + 1, ab[1] + 1)),
            )
            rhs = ring_t.mult_apply(2, (1, 1), c_t, j, ab, x)
            if lhs != rhs:
                violations.append(
                    f"{tkey}->{skey}: restriction-after-gysin fails at {(j, ab, u)}"
                )

        # divisor classes restrict to divisor classes
        for other in range(ncomp):
            c_up = atlas.divisor_class(other, skey)
            down = blockmap_apply(rest, 2, (1, 1), c_up, ring_t.slice_dim(2, (1, 1)))
            if down != atlas.divisor_class(other, tkey):
                violations.append(
                    f"{skey}->{tkey}: divisor class of component {other} "
                    "does not restrict correctly"
                )

    # base change across transversal squares
    for skey in atlas.keys_sorted():
        ring_s = atlas.ring(skey)
        extra = [a for a in range(ncomp) if a not in skey[0]]
        for a, b in itertools.permutations(extra, 2):
            for tkey in atlas.children.get((skey, a), ()):
                ring_t = atlas.ring(tkey)
                for wkey in atlas.children.get((skey, b), ()):
                    ring_w = atlas.ring(wkey)
                    vs = [
                        v
                        for v in atlas.children.get((tkey, b), ())
                        if atlas.leq(v, wkey)
                    ]
                    for j, ab, u in ring_t.basis_elements():
                        x = _basis(ring_t.slice_dim(j, ab), u)
                        jt, abt = j + 2, (ab[0] + 1, ab[1] + 1)
                        gx = blockmap_apply(
                            atlas.gysin[(tkey, skey)], j, ab, x,
                            ring_s.slice_dim(jt, abt),
                        )
                        lhs = blockmap_apply(
                            atlas.restrictions[(skey, wkey)], jt, abt, gx,
                            ring_w.slice_dim(jt, abt),
                        )
                        rhs = zero_vector(ring_w.slice_dim(jt, abt))
                        for vkey in vs:
                            rx = blockmap_apply(
                                atlas.restrictions[(tkey, vkey)], j, ab, x,
                                atlas.ring(vkey).slice_dim(j, ab),
                            )
                            piece = blockmap_apply(
                                atlas.gysin[(vkey, wkey)], j, ab, rx,
                                ring_w.slice_dim(jt, abt),
                            )
                            rhs = tuple(p + q for p, q in zip(rhs, piece))
                        if lhs != rhs:
                            violations.append(
                                f"base change fails on square {skey}/{tkey}/{wkey} "
                                f"at {(j, ab, u)}"
                            )

    return AtlasReport(ok=not violations, violations=tuple(violations))


# -- generators ---------------------------------------------------------------


def generic_arrangement(n: int, m: int) -> StrataAtlas:
    """Projective n-space with m hyperplanes in general position.

    Every k-fold intersection (k <= n) is a single linear subspace of
    dimension n-k with the truncated polynomial ring on the hyperplane
    class; all restrictions send h to h and every divisor class is h.
    """
    if not (isinstance(n, int) and isinstance(m, int)) or n < 1 or m < 0:
        raise BadParams(f"generic arrangement needs int n >= 1, m >= 0, got {(n, m)}")
    components = tuple(f"H{i}" for i in range(m))
    strata = []
    for k in range(min(n, m) + 1):
        for combo in itertools.combinations(range(m), k):
            strata.append(
                Stratum(indices=combo, label="", ring=truncated_polynomial_ring(n - k))
            )
    restrictions: dict[tuple[StratumKey, StratumKey], BlockMap] = {}
    gysin: dict[tuple[StratumKey, StratumKey], BlockMap] = {}
    for stratum in strata:
        k = len(stratum.indices)
        if k == min(n, m):
            continue
        skey = (stratum.indices, "")
        for a in range(m):
            if a in stratum.indices:
                continue
            tkey = (tuple(sorted(stratum.indices + (a,))), "")
            dim_t = n - k - 1
            restrictions[(skey, tkey)] = {
                (2 * c, (c, c)): RationalMatrix([[1]]) for c in range(dim_t + 1)
            }
            gysin[(tkey, skey)] = {
                (2 * c, (c, c)): RationalMatrix([[1]]) for c in range(dim_t + 1)
            }
    divisor_classes: dict[tuple[int, StratumKey], Vector] = {}
    for stratum in strata:
        if stratum.dim >= 1:
            for a in range(m):
                divisor_classes[(a, (stratum.indices, ""))] = vector([1])
    return StrataAtlas(components, strata, restrictions, gysin, divisor_classes)
