"""Cup products on weight rows, duality reports and exactness checks.

Products are computed term by term: restrict both factors to each component
of the intersection stratum, multiply in its ring, and place the result in
the target term, with a combinatorial sign.  The sign has three factors: the
shuffle sign of the two residue index sets, a Koszul factor (-1)^(j1*k2) for
moving the internal degree of the left factor past the residue symbols of
the right one, and (-1)^((j1+k1)*p) for moving it past a level-p piece (on
mapping cone targets the p+1 exponent absorbs the cone's own sign rule
a.(x, y) = (a.x, (-1)^deg(a) a.y)).  None of this is taken on faith:
chain_map_check verifies the Leibniz identity on every basis vector.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .atlas import StrataAtlas, blockmap_apply
from .complexes import (
    Element,
    PureTerm,
    RowFamily,
    RowMorphism,
    build,
    coker_u_rows,
    coker_v_rows,
    cone_rows,
    morphism_i_star,
    morphism_u,
    rows_constant,
    rows_log,
    rows_sum_strata,
)
from .errors import DimensionMismatch, EmptyDivisor
from .linalg import (
    CohomologySpace,
    RationalMatrix,
    Vector,
    pairing_perfect,
    rank,
    solve,
)
from .reports import CheckLine, CheckReport
from .rings import Bidegree
from .tables import MixedHodgeTable, compute_table


# -- element helpers ----------------------------------------------------------


def add_elements(left: Element, right: Element) -> Element:
    out = dict(left)
    for key, vec in right.items():
        have = out.get(key)
        if have is None:
            out[key] = vec
        else:
            out[key] = tuple(a + b for a, b in zip(have, vec))
    return {k: v for k, v in out.items() if any(x != 0 for x in v)}


def scale_element(elem: Element, sign: int) -> Element:
    if sign == 1:
        return elem
    return {k: tuple(sign * x for x in v) for k, v in elem.items()}


def elements_equal(left: Element, right: Element) -> bool:
    keys = set(left) | set(right)
    for key in keys:
        lv = left.get(key)
        rv = right.get(key)
        if lv is None:
            lv = (Fraction(0),) * len(rv)
        if rv is None:
            rv = (Fraction(0),) * len(lv)
        if lv != rv:
            return False
    return True


def sign_shuffle(left: tuple[int, ...], right: tuple[int, ...]) -> int:
    """Sign of merging two disjoint ascending index tuples."""
    inversions = sum(1 for i in left for j in right if i > j)
    return -1 if inversions % 2 else 1


# -- graded pairings ----------------------------------------------------------


class GradedPairing:
    """A bilinear, weight- and type-additive product between row families."""

    def __init__(self, atlas: StrataAtlas, left: RowFamily, right: RowFamily,
                 target: RowFamily, resolver, label: str):
        self.atlas = atlas
        self.left = left
        self.right = right
        self.target = target
        self.label = label
        self._resolver = resolver
        self._resolved: dict[tuple[PureTerm, PureTerm], tuple] = {}
        self._target_terms = set(target.terms)

    def _targets(self, t1: PureTerm, t2: PureTerm):
        key = (t1, t2)
        cached = self._resolved.get(key)
        if cached is None:
            cached = tuple(
                (t3, sign)
                for t3, sign in self._resolver(t1, t2)
                if t3 in self._target_terms
            )
            self._resolved[key] = cached
        return cached

    def evaluate(self, left_elem: Element, right_elem: Element) -> Element:
        out: Element = {}
        for (t1, ab1), x in left_elem.items():
            raw1 = (ab1[0] - t1.k, ab1[1] - t1.k)
            for (t2, ab2), y in right_elem.items():
                raw2 = (ab2[0] - t2.k, ab2[1] - t2.k)
                for t3, sign in self._targets(t1, t2):
                    tkey = t3.stratum
                    ring = self.atlas.ring(tkey)
                    x2 = blockmap_apply(
                        self.atlas.rho(t1.stratum, tkey), t1.j, raw1, x,
                        ring.slice_dim(t1.j, raw1),
                    )
                    if all(c == 0 for c in x2):
                        continue
                    y2 = blockmap_apply(
                        self.atlas.rho(t2.stratum, tkey), t2.j, raw2, y,
                        ring.slice_dim(t2.j, raw2),
                    )
                    z = ring.mult_apply(t1.j, raw1, x2, t2.j, raw2, y2)
                    if all(c == 0 for c in z):
                        continue
                    if sign != 1:
                        z = tuple(sign * c for c in z)
                    key = (t3, (ab1[0] + ab2[0], ab1[1] + ab2[1]))
                    have = out.get(key)
                    out[key] = (
                        z if have is None else tuple(a + b for a, b in zip(have, z))
                    )
        return {k: v for k, v in out.items() if any(x != 0 for x in v)}


def cup_log_XD(atlas: StrataAtlas) -> GradedPairing:
    """Product of open-complement classes with relative classes.

    Left: rows_log.  Right and target: the cone defining the relative rows
    (XD-tilde); the source side of the cone multiplies as log rows, the
    semisimplicial side picks up the cone sign.
    """
    flog = rows_log(atlas)
    fxdt = build(atlas, "XD-tilde")

    def resolver(t1: PureTerm, t2: PureTerm):
        left_set = set(t1.res)
        if left_set & set(t2.res):
            return []
        merged = tuple(sorted(left_set | set(t2.res)))
        base_sign = sign_shuffle(t1.res, t2.res) * (
            -1 if (t1.j * t2.k) % 2 else 1
        )
        out = []
        if t2.side == "s":
            for tkey in atlas.intersection_components(
                merged, [t1.stratum, t2.stratum]
            ):
                t3 = PureTerm(
                    tkey, t1.j + t2.j, t1.k + t2.k, 0, res=merged, side="s"
                )
                out.append((t3, base_sign))
        elif t2.side == "t":
            cone_sign = base_sign * (
                -1 if ((t1.j + t1.k) * (t2.p + 1)) % 2 else 1
            )
            for tkey in atlas.intersection_components(
                set(t2.stratum[0]) | left_set, [t1.stratum, t2.stratum]
            ):
                t3 = PureTerm(
                    tkey, t1.j + t2.j, t1.k + t2.k, t2.p,
                    res=merged, simp=t2.simp, side="t", shift=1,
                )
                out.append((t3, cone_sign))
        return out

    return GradedPairing(atlas, flog, fxdt, fxdt, resolver, "log x XD -> XD")


def cup_extraordinary(atlas: StrataAtlas) -> GradedPairing:
    """Product of local (divisor-supported) classes with divisor classes.

    Left: the positive-twist quotient of rows_log, whose degree m-1
    cohomology is H^m of the ambient space with supports on the divisor.
    Right: the divisor rows.  Target: the positive-twist quotient of the
    semisimplicial log rows.  The Leibniz identity descends to the
    quotients because the discarded twist-zero terms form subcomplexes on
    both sides of the product.
    """
    if not atlas.components:
        raise EmptyDivisor("the divisor has no components")
    fcu = coker_u_rows(atlas)
    fd = rows_sum_strata(atlas)
    fcv = coker_v_rows(atlas)

    def resolver(t1: PureTerm, t2: PureTerm):
        sign = -1 if ((t1.j + t1.k) * t2.p) % 2 else 1
        merged = set(t1.res) | set(t2.stratum[0])
        out = []
        for tkey in atlas.intersection_components(merged, [t1.stratum, t2.stratum]):
            t3 = PureTerm(
                tkey, t1.j + t2.j, t1.k, t2.p, res=t1.res, simp=t2.stratum
            )
            out.append((t3, sign))
        return out

    return GradedPairing(atlas, fcu, fd, fcv, resolver, "locD x D -> locD")


def chain_map_check(pairing: GradedPairing) -> bool:
    """Leibniz identity d(xy) = dx.y + (-1)^deg(x) x.dy on every basis pair."""
    left_basis = list(pairing.left.iter_basis())
    right_basis = [
        (q2, m2, ab2, e2, pairing.right.apply_d(q2, m2, e2))
        for q2, m2, ab2, e2 in pairing.right.iter_basis()
    ]
    for q1, m1, ab1, e1 in left_basis:
        de1 = pairing.left.apply_d(q1, m1, e1)
        sign = -1 if m1 % 2 else 1
        for q2, m2, ab2, e2, de2 in right_basis:
            product = pairing.evaluate(e1, e2)
            lhs = pairing.target.apply_d(q1 + q2, m1 + m2, product)
            rhs = add_elements(
                pairing.evaluate(de1, e2),
                scale_element(pairing.evaluate(e1, de2), sign),
            )
            if not elements_equal(lhs, rhs):
                return False
    return True


# -- expressing products in cohomology ---------------------------------------


def express_in_space(space: CohomologySpace | None, vec: Vector) -> Vector | None:
    """Coordinates of a cycle's class in the representative basis."""
    if space is None:
        return () if all(x == 0 for x in vec) else None
    columns = list(space.representatives) + list(space.boundaries)
    if not columns:
        return () if all(x == 0 for x in vec) else None
    matrix = RationalMatrix.from_columns(columns, len(vec))
    sol = solve(matrix, vec)
    if sol is None:
        return None
    return sol[: len(space.representatives)]


def _perfect_into_top(
    pairing: GradedPairing,
    left_table: MixedHodgeTable,
    right_table: MixedHodgeTable,
    target_table: MixedHodgeTable,
    left_block: tuple[int, int, Bidegree],
    right_block: tuple[int, int, Bidegree],
) -> tuple[bool, str]:
    """Perfectness of one block pairing valued in the top block.

    A line-valued pairing is perfect iff its Gram matrix is; when the top
    block has several dimensions (a divisor with several connected
    components) the pairing is perfect iff both induced maps into the
    top-valued dual are injective.
    """
    block = _block_matrix(
        pairing, left_table, right_table, target_table, left_block, right_block
    )
    mi, q1, ab1 = left_block
    mj, q2, ab2 = right_block
    dl = left_table.dim(mi, q1, ab1)
    dr = right_table.dim(mj, q2, ab2)
    top = block.ncols
    if top == 1:
        gram = RationalMatrix(
            [[block.rows[i * dr + j][0] for j in range(dr)] for i in range(dl)],
            ncols=dr,
        )
        return pairing_perfect(gram), f"rank {rank(gram)} of {dl}"
    left_flat = RationalMatrix(
        [
            [block.rows[i * dr + j][s] for j in range(dr) for s in range(top)]
            for i in range(dl)
        ],
        ncols=dr * top,
    )
    right_flat = RationalMatrix(
        [
            [block.rows[i * dr + j][s] for i in range(dl) for s in range(top)]
            for j in range(dr)
        ],
        ncols=dl * top,
    )
    ok = rank(left_flat) == dl and rank(right_flat) == dr
    return ok, f"two-sided injectivity into a {top} dimensional top block"


def _block_matrix(
    pairing: GradedPairing,
    left_table: MixedHodgeTable,
    right_table: MixedHodgeTable,
    target_table: MixedHodgeTable,
    left_block: tuple[int, int, Bidegree],
    right_block: tuple[int, int, Bidegree],
) -> RationalMatrix:
    """Matrix of one (left block) x (right block) -> (target block) pairing,
    rows indexed by pairs of classes, columns by the target classes."""
    mi, q1, ab1 = left_block
    mj, q2, ab2 = right_block
    mt, qt, abt = mi + mj, q1 + q2, (ab1[0] + ab2[0], ab1[1] + ab2[1])
    space = target_table.space(mt, qt, abt)
    left_reps = left_table.representatives(mi, q1, ab1)
    right_reps = right_table.representatives(mj, q2, ab2)
    target_dim = 0 if space is None else space.dim
    rows = []
    for lrep in left_reps:
        le = pairing.left.unflatten(q1, mi, ab1, lrep)
        for rrep in right_reps:
            re = pairing.right.unflatten(q2, mj, ab2, rrep)
            product = pairing.evaluate(le, re)
            vec = pairing.target.flatten(qt, mt, abt, product)
            coords = express_in_space(space, vec)
            if coords is None:
                raise DimensionMismatch(
                    f"{pairing.label}: product of classes is not a cycle class"
                )
            rows.append(coords)
    return RationalMatrix(rows, ncols=target_dim)


def induced_pairing(
    pairing: GradedPairing,
    left_table: MixedHodgeTable,
    right_table: MixedHodgeTable,
    i: int,
    j: int,
    target_table: MixedHodgeTable | None = None,
) -> RationalMatrix:
    """Matrix of the induced pairing H^i x H^j -> H^{i+j} on cohomology.

    Rows run over pairs of classes (left block by block, then right), in
    the deterministic table order; columns over the target classes in
    degree i + j.
    """
    if target_table is None:
        target_table = compute_table(pairing.target)
    target_order: list[tuple[int, Bidegree, int]] = []
    for q, ab, d in target_table.entries(i + j):
        for idx in range(d):
            target_order.append((q, ab, idx))
    rows: list[list[Fraction]] = []
    for q1, ab1, d1 in left_table.entries(i):
        for q2, ab2, d2 in right_table.entries(j):
            block = _block_matrix(
                pairing, left_table, right_table, target_table,
                (i, q1, ab1), (j, q2, ab2),
            )
            qt, abt = q1 + q2, (ab1[0] + ab2[0], ab1[1] + ab2[1])
            base = 0
            spread = {}
            for q, ab, idx in target_order:
                if (q, ab) == (qt, abt):
                    spread[idx] = base
                base += 1
            for row in block.rows:
                expanded = [Fraction(0)] * len(target_order)
                for idx, value in enumerate(row):
                    expanded[spread[idx]] = value
                rows.append(expanded)
    return RationalMatrix(rows, ncols=len(target_order))


# -- reports ------------------------------------------------------------------


def _mirror(n: int, q: int, ab: Bidegree) -> tuple[int, Bidegree]:
    return 2 * n - q, (n - ab[0], n - ab[1])


def _duality_side(
    lines: list[CheckLine],
    pairing: GradedPairing,
    left_table: MixedHodgeTable,
    right_table: MixedHodgeTable,
    target_table: MixedHodgeTable,
    n: int,
    left_name: str,
    right_name: str,
    degree_pairs,
) -> None:
    """Dimension symmetry and perfectness for one side of the duality."""
    for i, mi, mj in degree_pairs:
        blocks = {(q, ab) for q, ab, _ in left_table.entries(mi)}
        blocks |= {
            (2 * n - q, (n - ab[0], n - ab[1]))
            for q, ab, _ in right_table.entries(mj)
        }
        for q, ab in sorted(blocks):
            qm, abm = _mirror(n, q, ab)
            dl = left_table.dim(mi, q, ab)
            dr = right_table.dim(mj, qm, abm)
            name = (
                f"{left_name}^{i}[w={q},({ab[0]},{ab[1]})] vs "
                f"{right_name}^{2 * n - i}[w={qm},({abm[0]},{abm[1]})]"
            )
            lines.append(
                CheckLine(f"dim symmetry {name}", dl == dr, f"{dl} vs {dr}")
            )
            if dl != dr or dl == 0:
                continue
            if target_table.dim(mi + mj, 2 * n, (n, n)) == 0:
                lines.append(
                    CheckLine(f"perfect pairing {name}", False, "no orientation class")
                )
                continue
            ok, detail = _perfect_into_top(
                pairing, left_table, right_table, target_table,
                (mi, q, ab), (mj, qm, abm),
            )
            lines.append(CheckLine(f"perfect pairing {name}", ok, detail))


def fujiki_duality_report(atlas: StrataAtlas) -> CheckReport:
    """Blockwise duality between the open complement and the relative rows,
    and between local cohomology and the divisor rows."""
    if not atlas.components:
        raise EmptyDivisor("duality needs a nonempty divisor")
    n = atlas.dim
    lines: list[CheckLine] = []

    cup = cup_log_XD(atlas)
    table_u = compute_table(cup.left)
    table_xd = compute_table(cup.target)
    top = table_xd.dim(2 * n, 2 * n, (n, n))
    lines.append(
        CheckLine(
            "global orientation class",
            top == 1 and table_xd.betti(2 * n) == 1,
            f"H^{2 * n}(XD) has dim {table_xd.betti(2 * n)} with {top} in the top block",
        )
    )
    _duality_side(
        lines, cup, table_u, table_xd, table_xd, n, "H(U)", "H(XD)",
        [(i, i, 2 * n - i) for i in range(0, 2 * n + 1)],
    )

    ext = cup_extraordinary(atlas)
    table_cu = compute_table(ext.left)
    table_d = compute_table(ext.right)
    table_cv = compute_table(ext.target)
    top_local = table_cv.dim(2 * n - 1, 2 * n, (n, n))
    pieces = atlas.divisor_connected_components()
    lines.append(
        CheckLine(
            "local orientation classes",
            top_local == pieces and table_cv.betti(2 * n - 1) == pieces,
            f"H^{2 * n}_D has dim {table_cv.betti(2 * n - 1)} "
            f"with {top_local} in the top block; divisor has {pieces} pieces",
        )
    )
    # degree i of local cohomology is degree i-1 of the quotient rows
    _duality_side(
        lines, ext, table_cu, table_d, table_cv, n, "H_D", "H(D)",
        [(i, i - 1, 2 * n - i) for i in range(0, 2 * n + 1)],
    )
    return CheckReport("fujiki duality", tuple(lines))


# -- long exact sequences ------------------------------------------------------


def _strip_cone_source(elem: Element) -> Element:
    out: Element = {}
    for (t, ab), vec in elem.items():
        if t.side == "s":
            out[(dataclasses.replace(t, side=""), ab)] = vec
    return out


def _inject_cone_target(elem: Element) -> Element:
    return {
        (dataclasses.replace(t, side="t", shift=t.shift + 1), ab): vec
        for (t, ab), vec in elem.items()
    }


def _connecting_matrix(
    base_table: MixedHodgeTable,
    base_family: RowFamily,
    cone_family: RowFamily,
    cone_table: MixedHodgeTable,
    m: int,
    q: int,
    ab: Bidegree,
) -> RationalMatrix:
    """Class map H^m(target) -> H^{m+1}(cone), y |-> class of (0, y)."""
    space = cone_table.space(m + 1, q, ab)
    target_dim = 0 if space is None else space.dim
    cols = []
    for rep in base_table.representatives(m, q, ab):
        elem = base_family.unflatten(q, m, ab, rep)
        vec = cone_family.flatten(q, m + 1, ab, _inject_cone_target(elem))
        coords = express_in_space(space, vec)
        if coords is None:
            raise DimensionMismatch("connecting image is not a cycle class")
        cols.append(coords)
    return RationalMatrix.from_columns(cols, target_dim)


def _projection_matrix(
    cone_table: MixedHodgeTable,
    cone_family: RowFamily,
    base_family: RowFamily,
    base_table: MixedHodgeTable,
    m: int,
    q: int,
    ab: Bidegree,
) -> RationalMatrix:
    """Class map H^m(cone) -> H^m(source), (x, y) |-> x."""
    space = base_table.space(m, q, ab)
    target_dim = 0 if space is None else space.dim
    cols = []
    for rep in cone_table.representatives(m, q, ab):
        elem = cone_family.unflatten(q, m, ab, rep)
        vec = base_family.flatten(q, m, ab, _strip_cone_source(elem))
        coords = express_in_space(space, vec)
        if coords is None:
            raise DimensionMismatch("cone projection image is not a cycle class")
        cols.append(coords)
    return RationalMatrix.from_columns(cols, target_dim)


def _morphism_matrix(
    morphism: RowMorphism,
    src_table: MixedHodgeTable,
    dst_table: MixedHodgeTable,
    m: int,
    q: int,
    ab: Bidegree,
) -> RationalMatrix:
    space = dst_table.space(m, q, ab)
    target_dim = 0 if space is None else space.dim
    cols = []
    for rep in src_table.representatives(m, q, ab):
        elem = morphism.source.unflatten(q, m, ab, rep)
        vec = morphism.target.flatten(q, m, ab, morphism.apply(q, m, elem))
        coords = express_in_space(space, vec)
        if coords is None:
            raise DimensionMismatch("morphism image is not a cycle class")
        cols.append(coords)
    return RationalMatrix.from_columns(cols, target_dim)


def _exact_at(
    lines: list[CheckLine],
    node_name: str,
    incoming: RationalMatrix,
    outgoing: RationalMatrix,
    dim_here: int,
) -> None:
    comp_zero = (
        (outgoing @ incoming).is_zero() if incoming.ncols and outgoing.nrows else True
    )
    r_in = rank(incoming)
    r_out = rank(outgoing)
    ok = comp_zero and (r_in + r_out == dim_here)
    lines.append(
        CheckLine(
            f"exact at {node_name}",
            ok,
            f"rank in {r_in} + rank out {r_out} vs dim {dim_here}"
            + ("" if comp_zero else "; composition nonzero"),
        )
    )


def _sequence_checks(
    lines: list[CheckLine],
    tag: str,
    cone_family: RowFamily,
    cone_table: MixedHodgeTable,
    morphism: RowMorphism,
    src_table: MixedHodgeTable,
    dst_table: MixedHodgeTable,
    names: tuple[str, str, str],
) -> None:
    """Exactness of ... -> H^i(cone) -> H^i(src) -> H^i(dst) -> H^{i+1}(cone) -> ..."""
    cone_name, src_name, dst_name = names
    degrees = sorted(
        set(cone_table.degrees()) | set(src_table.degrees()) | set(dst_table.degrees())
    )
    if not degrees:
        return
    for i in range(min(degrees), max(degrees) + 2):
        blocks = {
            (q, ab)
            for table, m in (
                (cone_table, i),
                (src_table, i),
                (dst_table, i),
                (dst_table, i - 1),
            )
            for q, ab, _ in table.entries(m)
        }
        for q, ab in sorted(blocks):
            where = f"[w={q},({ab[0]},{ab[1]})] ({tag})"
            delta_in = _connecting_matrix(
                dst_table, morphism.target, cone_family, cone_table, i - 1, q, ab
            )
            proj_here = _projection_matrix(
                cone_table, cone_family, morphism.source, src_table, i, q, ab
            )
            _exact_at(
                lines, f"{cone_name}^{i}{where}", delta_in, proj_here,
                cone_table.dim(i, q, ab),
            )
            f_here = _morphism_matrix(morphism, src_table, dst_table, i, q, ab)
            _exact_at(
                lines, f"{src_name}^{i}{where}", proj_here, f_here,
                src_table.dim(i, q, ab),
            )
            delta_out = _connecting_matrix(
                dst_table, morphism.target, cone_family, cone_table, i, q, ab
            )
            _exact_at(
                lines, f"{dst_name}^{i}{where}", f_here, delta_out,
                dst_table.dim(i, q, ab),
            )


def les_check(atlas: StrataAtlas) -> CheckReport:
    """Exactness of the two long sequences linking the six theories, plus
    the duality pattern matching their blocks degree by degree."""
    if not atlas.components:
        raise EmptyDivisor("the sequences need a nonempty divisor")
    n = atlas.dim
    lines: list[CheckLine] = []

    fx = rows_constant(atlas)
    fd = rows_sum_strata(atlas)
    istar = morphism_i_star(atlas, fx, fd)
    fxd = cone_rows(istar)
    table_x = compute_table(fx)
    table_d = compute_table(fd)
    table_xd = compute_table(fxd)
    _sequence_checks(
        lines, "pair", fxd, table_xd, istar, table_x, table_d,
        ("H(X,D)", "H(X)", "H(D)"),
    )

    flog = rows_log(atlas)
    umap = morphism_u(atlas, fx, flog)
    flocd = cone_rows(umap)
    table_u = compute_table(flog)
    table_locd = compute_table(flocd)
    _sequence_checks(
        lines, "local", flocd, table_locd, umap, table_x, table_u,
        ("H_D", "H(X)", "H(U)"),
    )

    # the two sequences are blockwise dual to each other
    pattern = [
        (table_xd, table_u, "H(X,D)", "H(U)"),
        (table_x, table_x, "H(X)", "H(X)"),
        (table_d, table_locd, "H(D)", "H_D"),
    ]
    for left_table, right_table, lname, rname in pattern:
        degrees = set(left_table.degrees()) | {
            2 * n - m for m in right_table.degrees()
        }
        for i in sorted(degrees):
            blocks = {(q, ab) for q, ab, _ in left_table.entries(i)}
            blocks |= {
                _mirror(n, q, ab) for q, ab, _ in right_table.entries(2 * n - i)
            }
            for q, ab in sorted(blocks):
                qm, abm = _mirror(n, q, ab)
                dl = left_table.dim(i, q, ab)
                dr = right_table.dim(2 * n - i, qm, abm)
                lines.append(
                    CheckLine(
                        f"duality pattern {lname}^{i}[w={q},({ab[0]},{ab[1]})] vs "
                        f"{rname}^{2 * n - i}[w={qm},({abm[0]},{abm[1]})]",
                        dl == dr,
                        f"{dl} vs {dr}",
                    )
                )
    return CheckReport("long exact sequences", tuple(lines))
