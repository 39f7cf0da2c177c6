"""Weight rows of the split complexes attached to a strata atlas.

Every cohomology theory handled here (the ambient space, the divisor, the
open complement, the pairs and local variants, punctured neighborhoods) is
represented by a family of cochain complexes indexed by an intrinsic weight
q: each term is a pure piece H^j(S)(-k) placed in total degree m = j + k + p,
where k counts residue twists and p the simplicial level.  A twist shifts
Hodge types by (k, k), so a term of weight q = j + 2k contributes its
(a + k, b + k)-slices.  All differentials preserve q and every twisted type
slice, so each (q, a, b) block is an honest complex of finite dimensional
rational spaces and the whole mixed structure is read off blockwise.

Sign conventions: removing the r-th element (1-based, ascending order) of a
residue set carries (-1)^(r-1), and the same rule drives the Cech direction;
the residue direction of the semisimplicial family carries an extra Koszul
factor (-1)^p.  Cones are shifted: degree m of Cone(f) is source degree m
plus target degree m-1, with d(x, y) = (dx, f(x) - dy).
"""

from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .atlas import BlockMap, StrataAtlas, StratumKey
from .errors import (
    BadParams,
    DimensionMismatch,
    EmptyDivisor,
    LatticeError,
    NotChainMap,
    UnknownStratum,
)
from .linalg import RationalMatrix, Vector, zero_vector
from .rings import Bidegree

TermBlock = dict[Bidegree, RationalMatrix]  # keyed by twisted (a, b)
Element = dict[tuple["PureTerm", Bidegree], Vector]


@dataclass(frozen=True)
class PureTerm:
    """One pure piece H^j(stratum)(-k) sitting in a weight row.

    res is the residue index set the piece remembers, simp the stratum whose
    neighborhood a semisimplicial piece belongs to (with simplicial level p),
    side/shift mark membership in a mapping cone.  Total degree is
    j + k + p + shift; the intrinsic weight j + 2k never includes the shift.
    """

    stratum: StratumKey
    j: int
    k: int
    p: int
    res: tuple[int, ...] = ()
    simp: StratumKey | None = None
    side: str = ""
    shift: int = 0

    @property
    def m(self) -> int:
        return self.j + self.k + self.p + self.shift

    @property
    def q(self) -> int:
        return self.j + 2 * self.k

    def sort_key(self):
        return (
            self.side,
            self.k,
            self.p,
            self.res,
            self.simp if self.simp is not None else ((), ""),
            self.stratum,
            self.j,
            self.shift,
        )

    def describe(self) -> str:
        from .atlas import key_to_string

        bits = [f"H^{self.j}({key_to_string(self.stratum) or 'X'})"]
        if self.k:
            bits.append(f"(-{self.k})")
        if self.simp is not None:
            bits.append(f"@{key_to_string(self.simp) or 'X'}[p={self.p}]")
        if self.side:
            bits.append(f"[{self.side}]")
        return "".join(bits)


def term_slices(atlas: StrataAtlas, term: PureTerm) -> tuple[tuple[Bidegree, int], ...]:
    ring = atlas.ring(term.stratum)
    return tuple(
        ((a + term.k, b + term.k), d) for (a, b), d in ring.slices(term.j)
    )


def scale_block(block: TermBlock, sign: int) -> TermBlock:
    if sign == 1:
        return dict(block)
    return {ab: mat.scale(sign) for ab, mat in block.items()}


def identity_term_block(atlas: StrataAtlas, term: PureTerm) -> TermBlock:
    return {ab: RationalMatrix.identity(d) for ab, d in term_slices(atlas, term)}


def _map_term_block(raw: BlockMap, j: int, twist: int) -> TermBlock:
    """Select the degree-j blocks of an atlas map and re-key them by the
    twisted type both endpoint terms share."""
    out: TermBlock = {}
    for (jj, (a, b)), mat in raw.items():
        if jj == j and mat.nrows > 0 and mat.ncols > 0:
            out[(a + twist, b + twist)] = mat
    return out


def _restrict_block(atlas, skey, tkey, j, twist) -> TermBlock:
    return _map_term_block(atlas.rho(skey, tkey), j, twist)


def _gysin_block(atlas, tkey, skey, j, twist) -> TermBlock:
    return _map_term_block(atlas.gysin_map(tkey, skey), j, twist)


def _chern_block(atlas, a: int, tkey, j, twist) -> TermBlock:
    ring = atlas.ring(tkey)
    cls = atlas.divisor_class(a, tkey)
    out: TermBlock = {}
    for (ab, d) in ring.slices(j):
        target = ring.slice_dim(j + 2, (ab[0] + 1, ab[1] + 1))
        if target == 0:
            continue
        out[(ab[0] + twist, ab[1] + twist)] = ring.mult_operator(2, (1, 1), cls, j, ab)
    return out


class WeightRow:
    """One cochain complex of pure weight-q pieces, split by twisted type."""

    def __init__(self, q: int):
        self.q = q
        self.terms_at: dict[int, tuple[PureTerm, ...]] = {}
        self.layout: dict[tuple[int, Bidegree], tuple[tuple[PureTerm, int, int], ...]] = {}
        self.dims: dict[tuple[int, Bidegree], int] = {}
        self.diff: dict[tuple[int, Bidegree], RationalMatrix] = {}

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.terms_at))

    def types_at(self, m: int) -> tuple[Bidegree, ...]:
        return tuple(sorted(ab for (mm, ab) in self.dims if mm == m))

    def dim(self, m: int, ab: Bidegree) -> int:
        return self.dims.get((m, ab), 0)

    def d(self, m: int, ab: Bidegree) -> RationalMatrix:
        mat = self.diff.get((m, ab))
        if mat is None:
            return RationalMatrix.zeros(self.dim(m + 1, ab), self.dim(m, ab))
        return mat

    def offset(self, m: int, term: PureTerm, ab: Bidegree) -> tuple[int, int]:
        for t, off, d in self.layout.get((m, ab), ()):
            if t == term:
                return off, d
        raise DimensionMismatch(f"term {term} has no ({m}, {ab}) slice")


class RowFamily:
    """A finite family of weight rows plus its term-level block data."""

    def __init__(
        self,
        atlas: StrataAtlas,
        label: str,
        terms: tuple[PureTerm, ...],
        blocks: dict[tuple[PureTerm, PureTerm], TermBlock],
    ):
        self.atlas = atlas
        self.label = label
        self.terms = terms
        self.blocks = blocks
        self.rows: dict[int, WeightRow] = {}
        self._build()

    def _build(self) -> None:
        for term in self.terms:
            row = self.rows.setdefault(term.q, WeightRow(term.q))
            row.terms_at.setdefault(term.m, [])
        grouped: dict[int, dict[int, list[PureTerm]]] = {}
        for term in self.terms:
            grouped.setdefault(term.q, {}).setdefault(term.m, []).append(term)
        for q, per_degree in grouped.items():
            row = self.rows[q]
            for m, terms in per_degree.items():
                ordered = tuple(sorted(terms, key=PureTerm.sort_key))
                row.terms_at[m] = ordered
                per_ab: dict[Bidegree, list[tuple[PureTerm, int]]] = {}
                for t in ordered:
                    for ab, d in term_slices(self.atlas, t):
                        per_ab.setdefault(ab, []).append((t, d))
                for ab, pieces in per_ab.items():
                    offset = 0
                    lay = []
                    for t, d in pieces:
                        lay.append((t, offset, d))
                        offset += d
                    row.layout[(m, ab)] = tuple(lay)
                    row.dims[(m, ab)] = offset
        scratch: dict[tuple[int, int, Bidegree], list[list[Fraction]]] = {}
        for (t1, t2), block in self.blocks.items():
            if t1.q != t2.q:
                raise DimensionMismatch("differential block changes the weight")
            if t2.m != t1.m + 1:
                raise DimensionMismatch("differential block is not of degree +1")
            row = self.rows[t1.q]
            for ab, mat in block.items():
                off1, d1 = row.offset(t1.m, t1, ab)
                off2, d2 = row.offset(t1.m + 1, t2, ab)
                if mat.shape != (d2, d1):
                    raise DimensionMismatch(
                        f"block {t1.describe()} -> {t2.describe()} at {ab}: "
                        f"shape {mat.shape}, expected {(d2, d1)}"
                    )
                key = (t1.q, t1.m, ab)
                work = scratch.get(key)
                if work is None:
                    work = [
                        [Fraction(0)] * row.dims[(t1.m, ab)]
                        for _ in range(row.dims[(t1.m + 1, ab)])
                    ]
                    scratch[key] = work
                for i in range(d2):
                    for jj in range(d1):
                        work[off2 + i][off1 + jj] += mat.rows[i][jj]
        for (q, m, ab), work in scratch.items():
            self.rows[q].diff[(m, ab)] = RationalMatrix(work)

    # -- element plumbing ---------------------------------------------------

    def weights(self) -> tuple[int, ...]:
        return tuple(sorted(self.rows))

    def row(self, q: int) -> WeightRow:
        if q not in self.rows:
            self.rows[q] = WeightRow(q)
        return self.rows[q]

    def degrees(self) -> tuple[int, ...]:
        out = set()
        for row in self.rows.values():
            out.update(row.degrees())
        return tuple(sorted(out))

    def flatten(self, q: int, m: int, ab: Bidegree, elem: Element) -> Vector:
        row = self.row(q)
        out = [Fraction(0)] * row.dim(m, ab)
        for t, off, d in row.layout.get((m, ab), ()):
            vec = elem.get((t, ab))
            if vec is not None:
                if len(vec) != d:
                    raise DimensionMismatch("element slice has wrong length")
                for i, x in enumerate(vec):
                    out[off + i] += x
        return tuple(out)

    def unflatten(self, q: int, m: int, ab: Bidegree, vec: Vector) -> Element:
        row = self.row(q)
        out: Element = {}
        for t, off, d in row.layout.get((m, ab), ()):
            piece = tuple(vec[off + i] for i in range(d))
            if any(x != 0 for x in piece):
                out[(t, ab)] = piece
        return out

    def apply_d(self, q: int, m: int, elem: Element) -> Element:
        row = self.row(q)
        out: Element = {}
        for ab in row.types_at(m):
            image = row.d(m, ab).apply(self.flatten(q, m, ab, elem))
            out.update(self.unflatten(q, m + 1, ab, image))
        return out

    def iter_basis(self):
        """Yield (q, m, ab, elem) for every basis vector of every slot."""
        for q in self.weights():
            row = self.rows[q]
            for m in row.degrees():
                for ab in row.types_at(m):
                    for t, off, d in row.layout[(m, ab)]:
                        for i in range(d):
                            vec = tuple(
                                Fraction(1 if idx == i else 0) for idx in range(d)
                            )
                            yield q, m, ab, {(t, ab): vec}

    def differentials_square_to_zero(self) -> bool:
        for q in self.weights():
            row = self.rows[q]
            for m in row.degrees():
                for ab in row.types_at(m):
                    d_here = row.d(m, ab)
                    d_next = row.d(m + 1, ab)
                    if d_here.nrows and d_here.ncols and d_next.nrows:
                        if not (d_next @ d_here).is_zero():
                            return False
        return True


# -- morphisms and cones ------------------------------------------------------


@dataclass
class RowMorphism:
    """Degree- and weight-preserving map between two row families."""

    source: RowFamily
    target: RowFamily
    blocks: dict[tuple[PureTerm, PureTerm], TermBlock]
    label: str = ""

    def __post_init__(self):
        for (t1, t2), block in self.blocks.items():
            if t1.q != t2.q or t1.m != t2.m:
                raise DimensionMismatch(f"morphism block {t1} -> {t2} shifts degrees")

    def matrix(self, q: int, m: int, ab: Bidegree) -> RationalMatrix:
        src_row = self.source.row(q)
        dst_row = self.target.row(q)
        rows = dst_row.dim(m, ab)
        cols = src_row.dim(m, ab)
        work = [[Fraction(0)] * cols for _ in range(rows)]
        for (t1, t2), block in self.blocks.items():
            if t1.q != q or t1.m != m:
                continue
            mat = block.get(ab)
            if mat is None:
                continue
            off1, d1 = src_row.offset(m, t1, ab)
            off2, d2 = dst_row.offset(m, t2, ab)
            if mat.shape != (d2, d1):
                raise DimensionMismatch(f"morphism block {t1} -> {t2} shape")
            for i in range(d2):
                for jj in range(d1):
                    work[off2 + i][off1 + jj] += mat.rows[i][jj]
        return RationalMatrix(work, ncols=cols)

    def apply(self, q: int, m: int, elem: Element) -> Element:
        out: Element = {}
        src_row = self.source.row(q)
        for ab in src_row.types_at(m):
            image = self.matrix(q, m, ab).apply(self.source.flatten(q, m, ab, elem))
            out.update(self.target.unflatten(q, m, ab, image))
        return out

    def is_chain_map(self) -> bool:
        weights = set(self.source.weights()) | set(self.target.weights())
        for q in weights:
            src_row = self.source.row(q)
            dst_row = self.target.row(q)
            degrees = set(src_row.degrees()) | set(dst_row.degrees())
            for m in degrees:
                abs_here = set(src_row.types_at(m)) | set(dst_row.types_at(m))
                abs_next = set(src_row.types_at(m + 1)) | set(dst_row.types_at(m + 1))
                for ab in abs_here | abs_next:
                    left = dst_row.d(m, ab) @ self.matrix(q, m, ab)
                    right = self.matrix(q, m + 1, ab) @ src_row.d(m, ab)
                    if left != right:
                        return False
        return True

    def blockwise_injective(self) -> bool:
        from .linalg import reduce as _reduce

        for q in self.source.weights():
            src_row = self.source.row(q)
            for m in src_row.degrees():
                for ab in src_row.types_at(m):
                    mat = self.matrix(q, m, ab)
                    if _reduce(mat).rank < mat.ncols:
                        return False
        return True


def cone_rows(morphism: RowMorphism, shift: bool = True) -> RowFamily:
    """Mapping cone of a row morphism.

    With shift=True (the convention every builder uses) degree m consists of
    the source in degree m and the target in degree m-1, so the cone fits
    before the source in the long exact sequence; shift=False gives the
    unshifted cone sitting after the target.
    """
    if not morphism.is_chain_map():
        raise NotChainMap(f"cone of {morphism.label or 'morphism'}: not a chain map")
    src_delta = 0 if shift else -1
    tgt_delta = 1 if shift else 0
    src_sign = 1 if shift else -1
    tgt_sign = -1 if shift else 1

    def as_src(t: PureTerm) -> PureTerm:
        return dataclasses.replace(t, side="s", shift=t.shift + src_delta)

    def as_tgt(t: PureTerm) -> PureTerm:
        return dataclasses.replace(t, side="t", shift=t.shift + tgt_delta)

    terms = tuple(as_src(t) for t in morphism.source.terms) + tuple(
        as_tgt(t) for t in morphism.target.terms
    )
    blocks: dict[tuple[PureTerm, PureTerm], TermBlock] = {}
    for (t1, t2), block in morphism.source.blocks.items():
        blocks[(as_src(t1), as_src(t2))] = scale_block(block, src_sign)
    for (t1, t2), block in morphism.target.blocks.items():
        blocks[(as_tgt(t1), as_tgt(t2))] = scale_block(block, tgt_sign)
    for (t1, t2), block in morphism.blocks.items():
        blocks[(as_src(t1), as_tgt(t2))] = dict(block)
    label = f"cone({morphism.label})" if morphism.label else "cone"
    return RowFamily(morphism.source.atlas, label, terms, blocks)


# -- the seven builders -------------------------------------------------------


def rows_constant(atlas: StrataAtlas) -> RowFamily:
    """Cohomology of the ambient space: one column of pure terms."""
    ring = atlas.ring(atlas.x_key)
    terms = tuple(PureTerm(atlas.x_key, j, 0, 0) for j in ring.degrees())
    return RowFamily(atlas, "X", terms, {})


def rows_sum_strata(atlas: StrataAtlas) -> RowFamily:
    """Cech complex of the closed divisor: level p holds (p+1)-fold meets."""
    if not atlas.components:
        raise EmptyDivisor("the divisor has no components")
    terms = []
    for key in atlas.keys_sorted():
        depth = len(key[0])
        if depth == 0:
            continue
        for j in atlas.ring(key).degrees():
            terms.append(PureTerm(key, j, 0, depth - 1))
    blocks: dict[tuple[PureTerm, PureTerm], TermBlock] = {}
    for t in terms:
        present = set(t.stratum[0])
        for a in range(len(atlas.components)):
            if a in present:
                continue
            pos = sum(1 for i in present if i < a)
            sign = -1 if pos % 2 else 1
            for child in atlas.children.get((t.stratum, a), ()):
                block = _restrict_block(atlas, t.stratum, child, t.j, 0)
                if block:
                    t2 = PureTerm(child, t.j, 0, t.p + 1)
                    blocks[(t, t2)] = scale_block(block, sign)
    return RowFamily(atlas, "D", tuple(terms), blocks)


def rows_log(atlas: StrataAtlas) -> RowFamily:
    """Weight rows of the open complement: residues along deeper strata."""
    terms = []
    for key in atlas.keys_sorted():
        for j in atlas.ring(key).degrees():
            terms.append(PureTerm(key, j, len(key[0]), 0, res=key[0]))
    blocks: dict[tuple[PureTerm, PureTerm], TermBlock] = {}
    for t in terms:
        if t.k == 0:
            continue
        for r, a in enumerate(t.res):
            parent = atlas.parent[(t.stratum, a)]
            sign = -1 if r % 2 else 1
            block = _gysin_block(atlas, t.stratum, parent, t.j, t.k)
            if block:
                rest = tuple(x for x in t.res if x != a)
                t2 = PureTerm(parent, t.j + 2, t.k - 1, 0, res=rest)
                blocks[(t, t2)] = scale_block(block, sign)
    return RowFamily(atlas, "log", tuple(terms), blocks)


def _stratum_log_data(atlas: StrataAtlas, ckey: StratumKey, p: int, koszul: bool):
    """Terms and residue-direction blocks of the log family along one stratum."""
    carried = set(ckey[0])
    ncomp = len(atlas.components)
    terms = []
    for size in range(ncomp + 1):
        for J in itertools.combinations(range(ncomp), size):
            for tkey in atlas.intersection_components(carried | set(J), [ckey]):
                for j in atlas.ring(tkey).degrees():
                    terms.append(PureTerm(tkey, j, size, p, res=J, simp=ckey))
    blocks: dict[tuple[PureTerm, PureTerm], TermBlock] = {}
    koszul_sign = (-1 if p % 2 else 1) if koszul else 1
    for t in terms:
        if t.k == 0:
            continue
        for r, a in enumerate(t.res):
            rest = tuple(x for x in t.res if x != a)
            sign = (-1 if r % 2 else 1) * koszul_sign
            if a in carried:
                block = _chern_block(atlas, a, t.stratum, t.j, t.k)
                t2 = PureTerm(t.stratum, t.j + 2, t.k - 1, p, res=rest, simp=ckey)
            else:
                parent = atlas.parent[(t.stratum, a)]
                if not atlas.leq(parent, ckey):
                    raise LatticeError(
                        f"stratum {parent} escapes {ckey} while removing {a}"
                    )
                block = _gysin_block(atlas, t.stratum, parent, t.j, t.k)
                t2 = PureTerm(parent, t.j + 2, t.k - 1, p, res=rest, simp=ckey)
            if block:
                blocks[(t, t2)] = scale_block(block, sign)
    return terms, blocks


def rows_stratum_log(atlas: StrataAtlas, ckey: StratumKey) -> RowFamily:
    """Weight rows of a punctured neighborhood of one closed stratum."""
    if ckey not in atlas.strata:
        raise UnknownStratum(f"no stratum {ckey} in atlas")
    terms, blocks = _stratum_log_data(atlas, ckey, p=0, koszul=False)
    from .atlas import key_to_string

    return RowFamily(atlas, f"nbhd:{key_to_string(ckey)}", tuple(terms), blocks)


def rows_semisimplicial_log(atlas: StrataAtlas) -> RowFamily:
    """Log rows over the semisimplicial divisor: Cech levels of the
    components, each carrying its own stratum-log family."""
    if not atlas.components:
        raise EmptyDivisor("the divisor has no components")
    all_terms: list[PureTerm] = []
    blocks: dict[tuple[PureTerm, PureTerm], TermBlock] = {}
    for ckey in atlas.keys_sorted():
        depth = len(ckey[0])
        if depth == 0:
            continue
        terms, residue_blocks = _stratum_log_data(atlas, ckey, depth - 1, koszul=True)
        all_terms.extend(terms)
        blocks.update(residue_blocks)
    for t in all_terms:
        ckey = t.simp
        carried = set(ckey[0])
        for b in range(len(atlas.components)):
            if b in carried:
                continue
            pos = sum(1 for i in carried if i < b)
            sign = -1 if pos % 2 else 1
            for c2 in atlas.children.get((ckey, b), ()):
                for wkey in atlas.intersection_components(
                    set(t.stratum[0]) | {b}, [c2, t.stratum]
                ):
                    block = _map_term_block(atlas.rho(t.stratum, wkey), t.j, t.k)
                    if block:
                        t2 = PureTerm(wkey, t.j, t.k, t.p + 1, res=t.res, simp=c2)
                        blocks[(t, t2)] = scale_block(block, sign)
    return RowFamily(atlas, "sslog", tuple(all_terms), blocks)


def _zero_family(atlas: StrataAtlas, label: str) -> RowFamily:
    return RowFamily(atlas, label, (), {})


def _truncate_positive_twist(family: RowFamily, label: str) -> RowFamily:
    """Quotient by the twist-free subcomplex: keep only the k >= 1 terms."""
    terms = tuple(t for t in family.terms if t.k >= 1)
    blocks = {
        pair: block
        for pair, block in family.blocks.items()
        if pair[0].k >= 1 and pair[1].k >= 1
    }
    return RowFamily(family.atlas, label, terms, blocks)


def coker_u_rows(atlas: StrataAtlas) -> RowFamily:
    """rows_log modulo the image of the constant rows; H^{m-1} of this
    family is the local cohomology H^m_D of the ambient space."""
    return _truncate_positive_twist(rows_log(atlas), "coker(u)")


def coker_v_rows(atlas: StrataAtlas) -> RowFamily:
    """rows_semisimplicial_log modulo the image of the divisor rows."""
    if not atlas.components:
        return _zero_family(atlas, "coker(v)")
    return _truncate_positive_twist(rows_semisimplicial_log(atlas), "coker(v)")


# -- connecting morphisms -----------------------------------------------------


def morphism_i_star(atlas: StrataAtlas, fx: RowFamily, fd: RowFamily) -> RowMorphism:
    """Restriction from the ambient space to the divisor components."""
    blocks: dict[tuple[PureTerm, PureTerm], TermBlock] = {}
    for t in fx.terms:
        for a in range(len(atlas.components)):
            for child in atlas.children.get((atlas.x_key, a), ()):
                block = _restrict_block(atlas, atlas.x_key, child, t.j, 0)
                if block:
                    blocks[(t, PureTerm(child, t.j, 0, 0))] = block
    return RowMorphism(fx, fd, blocks, label="i*")


def morphism_u(atlas: StrataAtlas, fx: RowFamily, flog: RowFamily) -> RowMorphism:
    """The constant rows sit inside the log rows as the twist-zero column."""
    blocks = {
        (t, t): identity_term_block(atlas, t) for t in fx.terms
    }
    return RowMorphism(fx, flog, blocks, label="u")


def morphism_v(atlas: StrataAtlas, fd: RowFamily, fss: RowFamily) -> RowMorphism:
    """The divisor rows sit inside the semisimplicial log rows at twist zero."""
    blocks: dict[tuple[PureTerm, PureTerm], TermBlock] = {}
    for t in fd.terms:
        t2 = PureTerm(t.stratum, t.j, 0, t.p, res=(), simp=t.stratum)
        blocks[(t, t2)] = identity_term_block(atlas, t)
    return RowMorphism(fd, fss, blocks, label="v")


def morphism_log_restriction(
    atlas: StrataAtlas, flog: RowFamily, fss: RowFamily
) -> RowMorphism:
    """Restrict log rows to the level-zero semisimplicial pieces."""
    blocks: dict[tuple[PureTerm, PureTerm], TermBlock] = {}
    for t in flog.terms:
        for a in range(len(atlas.components)):
            for ckey in atlas.components_of((a,)):
                for wkey in atlas.intersection_components(
                    set(t.res) | {a}, [ckey, t.stratum]
                ):
                    block = _map_term_block(atlas.rho(t.stratum, wkey), t.j, t.k)
                    if block:
                        t2 = PureTerm(wkey, t.j, t.k, 0, res=t.res, simp=ckey)
                        blocks[(t, t2)] = block
    return RowMorphism(flog, fss, blocks, label="restriction")


# -- selector front door ------------------------------------------------------

SELECTORS = ("X", "D", "log", "XD", "XD-tilde", "locD", "locD-tilde")


def build(atlas: StrataAtlas, selector: str) -> RowFamily:
    """Build the weight rows of one of the named complexes.

    Selectors (case-insensitive): X, D, log, XD, XD-tilde, locD, locD-tilde,
    and nbhd:<stratum-key> for punctured neighborhoods.
    """
    text = selector.strip()
    low = text.lower()
    if low.startswith("nbhd:"):
        from .atlas import key_from_string

        return rows_stratum_log(atlas, key_from_string(text[len("nbhd:"):]))
    if low == "x":
        return rows_constant(atlas)
    if low == "d":
        return rows_sum_strata(atlas)
    if low == "log":
        return rows_log(atlas)
    if low == "sslog":
        return rows_semisimplicial_log(atlas)
    empty = not atlas.components
    if low == "xd":
        fx = rows_constant(atlas)
        fd = _zero_family(atlas, "D") if empty else rows_sum_strata(atlas)
        morphism = (
            RowMorphism(fx, fd, {}, label="i*")
            if empty
            else morphism_i_star(atlas, fx, fd)
        )
        out = cone_rows(morphism)
        out.label = "XD"
        return out
    if low == "xd-tilde":
        flog = rows_log(atlas)
        fss = _zero_family(atlas, "sslog") if empty else rows_semisimplicial_log(atlas)
        morphism = (
            RowMorphism(flog, fss, {}, label="restriction")
            if empty
            else morphism_log_restriction(atlas, flog, fss)
        )
        out = cone_rows(morphism)
        out.label = "XD-tilde"
        return out
    if low == "locd":
        fx = rows_constant(atlas)
        flog = rows_log(atlas)
        out = cone_rows(morphism_u(atlas, fx, flog))
        out.label = "locD"
        return out
    if low == "locd-tilde":
        fd = _zero_family(atlas, "D") if empty else rows_sum_strata(atlas)
        fss = _zero_family(atlas, "sslog") if empty else rows_semisimplicial_log(atlas)
        morphism = (
            RowMorphism(fd, fss, {}, label="v")
            if empty
            else morphism_v(atlas, fd, fss)
        )
        out = cone_rows(morphism)
        out.label = "locD-tilde"
        return out
    raise BadParams(
        f"unknown complex selector {selector!r}; expected one of "
        f"{', '.join(SELECTORS)} or nbhd:<stratum-key>"
    )
