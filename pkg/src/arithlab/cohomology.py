"""First cohomology of finite groups acting on integer lattices.

Groups are explicit multiplication tables (order <= 48); a lattice is a
rank-d free module with one integral action matrix per group element.
H^1 is computed from the definition: the group of 1-cocycles is the
integer kernel of the stacked linear conditions f(gh) = f(g) + g.f(h)
over all pairs (g, h), coboundaries are the image of a |-> (g.a - a),
and the quotient's invariants come out of Smith normal form.  No
generators or relators are ever chosen.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bounds import gamma
from .core import (
    IntegerMatrix,
    determinant,
    factor,
    integer_kernel,
    smith_normal_form,
)

__all__ = [
    "FiniteGroup",
    "GLattice",
    "AbelianGroupInvariants",
    "H1BoundReport",
    "MinkowskiReport",
    "h1",
    "h1_bound_check",
    "induced_lattice",
    "norm_one_lattice",
    "faithful_quotient",
    "minkowski_check",
]

MAX_GROUP_ORDER = 48


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group as an explicit multiplication table on 0..s-1.

    The constructor checks the full group axioms over the table, so a
    FiniteGroup value is always a genuine group.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    def __init__(self, table: Sequence[Sequence[int]]):
        s = len(table)
        if not 1 <= s <= MAX_GROUP_ORDER:
            raise ValueError(f"group order must be in 1..{MAX_GROUP_ORDER}, got {s}")
        t = tuple(tuple(int(x) for x in row) for row in table)
        for row in t:
            if len(row) != s or any(not 0 <= x < s for x in row):
                raise ValueError("multiplication table is not s x s over 0..s-1")
        identity = None
        for e in range(s):
            if all(t[e][g] == g and t[g][e] == g for g in range(s)):
                identity = e
                break
        if identity is None:
            raise ValueError("table has no identity element")
        inverse = [None] * s
        for g in range(s):
            for h in range(s):
                if t[g][h] == identity and t[h][g] == identity:
                    inverse[g] = h
                    break
            if inverse[g] is None:
                raise ValueError(f"element {g} has no inverse")
        for a in range(s):
            for b in range(s):
                for c in range(s):
                    if t[t[a][b]][c] != t[a][t[b][c]]:
                        raise ValueError("table is not associative")
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "identity", identity)
        object.__setattr__(self, "inverse", tuple(inverse))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
        return k

    def is_cyclic(self) -> bool:
        return any(self.element_order(g) == self.order for g in self.elements())

    def is_subgroup(self, subset: Iterable[int]) -> bool:
        sub = set(subset)
        if not sub or not sub <= set(self.elements()):
            return False
        return all(self.table[a][b] in sub for a in sub for b in sub)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls([[(i + j) % n for j in range(n)] for i in range(n)])

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        """Symmetric group on n letters via permutation composition."""
        import itertools

        perms = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        table = [
            [index[tuple(p[q[k]] for k in range(n))] for q in perms] for p in perms
        ]
        return cls(table)

    @classmethod
    def direct_product(cls, g1: "FiniteGroup", g2: "FiniteGroup") -> "FiniteGroup":
        s1, s2 = g1.order, g2.order
        table = [
            [
                (g1.table[a1][b1]) * s2 + g2.table[a2][b2]
                for b1 in range(s1)
                for b2 in range(s2)
            ]
            for a1 in range(s1)
            for a2 in range(s2)
        ]
        return cls(table)


@dataclass(frozen=True)
class GLattice:
    """A rank-d lattice with a verified integral group action.

    Invariants checked at construction: the identity acts as I, the
    action respects the table (action(gh) = action(g) action(h)), and
    every action matrix has determinant +-1.
    """

    group: FiniteGroup
    rank: int
    action: tuple[IntegerMatrix, ...]

    def __init__(self, group: FiniteGroup, rank: int, action: Sequence[IntegerMatrix]):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        mats = tuple(action)
        if len(mats) != group.order:
            raise ValueError("need one action matrix per group element")
        for m in mats:
            if m.rows != rank or m.cols != rank:
                raise ValueError("action matrices must be rank x rank")
            if abs(determinant(m)) != 1:
                raise ValueError("action matrices must be unimodular")
        if not mats[group.identity].is_identity():
            raise ValueError("identity element must act as the identity matrix")
        for g in group.elements():
            for h in group.elements():
                if mats[group.mul(g, h)] != mats[g].mul(mats[h]):
                    raise ValueError("action does not respect the group table")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "action", mats)

    def conjugate(self, u: IntegerMatrix, u_inv: IntegerMatrix) -> "GLattice":
        """Base change by a unimodular u (u_inv its integral inverse)."""
        if not u.mul(u_inv).is_identity():
            raise ValueError("u_inv is not the inverse of u")
        return GLattice(
            self.group, self.rank, tuple(u.mul(m).mul(u_inv) for m in self.action)
        )

    def direct_sum(self, other: "GLattice") -> "GLattice":
        if self.group != other.group:
            raise ValueError("direct sum needs a common group")
        d1, d2 = self.rank, other.rank
        mats = []
        for g in self.group.elements():
            a, b = self.action[g], other.action[g]
            rows = [
                [a[i, j] for j in range(d1)] + [0] * d2 for i in range(d1)
            ] + [
                [0] * d1 + [b[i, j] for j in range(d2)] for i in range(d2)
            ]
            mats.append(
                IntegerMatrix.from_rows(rows)
                if rows
                else IntegerMatrix.zero(0, 0)
            )
        return GLattice(self.group, d1 + d2, tuple(mats))

    @classmethod
    def trivial(cls, group: FiniteGroup, rank: int) -> "GLattice":
        return cls(group, rank, tuple(IntegerMatrix.identity(rank) for _ in group.elements()))


@dataclass(frozen=True)
class AbelianGroupInvariants:
    """Elementary divisors d_1 | d_2 | ... (each > 1) plus free rank."""

    divisors: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        prev = None
        for d in self.divisors:
            if d <= 1:
                raise ValueError("divisors must exceed 1")
            if prev is not None and d % prev:
                raise ValueError("divisors must form a chain")
            prev = d

    @property
    def order(self) -> int:
        if self.free_rank:
            raise ValueError("infinite group has no order")
        out = 1
        for d in self.divisors:
            out *= d
        return out

    @property
    def is_trivial(self) -> bool:
        return not self.divisors and not self.free_rank


def _cocycle_relation_matrix(lattice: GLattice) -> IntegerMatrix:
    """Stacked conditions f(gh) - f(g) - g.f(h) = 0 over pairs g, h != 1.

    Unknowns are the values f(g) for g != 1 (f(1) = 0 is forced), laid
    out in blocks of d coordinates.  Blocks may coincide (e.g. the pair
    (g, g)), so coefficients accumulate.
    """
    grp, d = lattice.group, lattice.rank
    e = grp.identity
    others = [g for g in grp.elements() if g != e]
    col_of = {g: i for i, g in enumerate(others)}
    ncols = len(others) * d
    rows: list[list[int]] = []
    for g in others:
        act = lattice.action[g]
        for h in others:
            gh = grp.mul(g, h)
            block = [[0] * ncols for _ in range(d)]
            if gh != e:
                base = col_of[gh] * d
                for i in range(d):
                    block[i][base + i] += 1
            base = col_of[g] * d
            for i in range(d):
                block[i][base + i] -= 1
            base = col_of[h] * d
            for i in range(d):
                for j in range(d):
                    block[i][base + j] -= act[i, j]
            rows.extend(block)
    if not rows:
        return IntegerMatrix.zero(0, ncols)
    return IntegerMatrix.from_rows(rows)


def _coboundary_matrix(lattice: GLattice) -> IntegerMatrix:
    """The map a |-> (g.a - a for g != 1), one d-row block per g."""
    grp, d = lattice.group, lattice.rank
    e = grp.identity
    rows: list[list[int]] = []
    for g in grp.elements():
        if g == e:
            continue
        act = lattice.action[g]
        for i in range(d):
            rows.append([act[i, j] - (1 if i == j else 0) for j in range(d)])
    if not rows:
        return IntegerMatrix.zero(0, d)
    return IntegerMatrix.from_rows(rows)


def _quotient_invariants(basis: IntegerMatrix, gens: IntegerMatrix) -> AbelianGroupInvariants:
    """Invariants of (lattice with given basis columns) / (column span of gens).

    The basis must be saturated in the ambient space: its SNF diagonal
    is then all ones, which lets the generator columns be rewritten in
    basis coordinates by exact unimodular bookkeeping.
    """
    z = basis.cols
    if z == 0:
        return AbelianGroupInvariants((), 0)
    snf = smith_normal_form(basis)
    if any(d != 1 for d in snf.diagonal):
        raise RuntimeError("basis is not saturated")
    c = snf.left_transform.mul(gens)
    for i in range(z, c.rows):
        for j in range(c.cols):
            if c[i, j] != 0:
                raise RuntimeError("generators are not inside the basis span")
    top = IntegerMatrix.from_rows([[c[i, j] for j in range(c.cols)] for i in range(z)])
    x = snf.right_transform.mul(top)
    diag = smith_normal_form(x).diagonal
    nonzero = [d for d in diag if d != 0]
    return AbelianGroupInvariants(
        tuple(d for d in nonzero if d > 1), z - len(nonzero)
    )


def h1(lattice: GLattice) -> AbelianGroupInvariants:
    """Invariants of H^1(G, A) = Z^1 / B^1 for the given lattice.

    Finiteness of the result (free rank 0) is a theorem; the computed
    free rank is returned so that tests can confirm it.
    """
    relations = _cocycle_relation_matrix(lattice)
    cocycle_basis = integer_kernel(relations)
    coboundaries = _coboundary_matrix(lattice)
    return _quotient_invariants(cocycle_basis, coboundaries)


@dataclass(frozen=True)
class H1BoundReport:
    """Divisibility facts for |H^1|: the s^(r(s-1)) bound and s-torsion."""

    invariants: AbelianGroupInvariants
    group_order: int
    rank: int
    bound: int
    order_divides_bound: bool
    annihilated_by_group_order: bool

    @property
    def passed(self) -> bool:
        return self.order_divides_bound and self.annihilated_by_group_order


def h1_bound_check(lattice: GLattice) -> H1BoundReport:
    """Check |H^1| divides s^(r(s-1)) and that s kills H^1."""
    inv = h1(lattice)
    s, r = lattice.group.order, lattice.rank
    bound = s ** (r * (s - 1)) if s > 1 else 1
    order = inv.order
    return H1BoundReport(
        invariants=inv,
        group_order=s,
        rank=r,
        bound=bound,
        order_divides_bound=(bound % order == 0),
        annihilated_by_group_order=all(s % d == 0 for d in inv.divisors),
    )


def induced_lattice(group: FiniteGroup, subgroup: Iterable[int]) -> GLattice:
    """Permutation lattice on the cosets G/H with G acting by left translation."""
    sub = sorted(set(subgroup))
    if not group.is_subgroup(sub):
        raise ValueError("subset is not closed under multiplication")
    cosets: list[frozenset[int]] = []
    seen: set[int] = set()
    for g in group.elements():
        if g in seen:
            continue
        coset = frozenset(group.mul(g, h) for h in sub)
        seen |= coset
        cosets.append(coset)
    index = {c: i for i, c in enumerate(cosets)}
    rep = [min(c) for c in cosets]
    n = len(cosets)
    mats = []
    for g in group.elements():
        m = [[0] * n for _ in range(n)]
        for j in range(n):
            target = frozenset(group.mul(group.mul(g, rep[j]), h) for h in sub)
            m[index[target]][j] = 1
        mats.append(IntegerMatrix.from_rows(m))
    return GLattice(group, n, tuple(mats))


def norm_one_lattice(group: FiniteGroup) -> GLattice:
    """Character lattice of the norm-one torus of a cyclic group.

    Realized as Z[G] modulo the span of the norm element, with basis the
    images of 1, g, ..., g^(s-2) for a fixed generator g.  Any other
    unimodular basis gives an isomorphic lattice, so the h1 invariants
    do not depend on this choice.
    """
    if not group.is_cyclic():
        raise ValueError("norm-one lattice requires a cyclic group")
    s = group.order
    d = s - 1
    if d == 0:
        return GLattice(group, 0, (IntegerMatrix.zero(0, 0),))
    gen = next(g for g in group.elements() if group.element_order(g) == s)
    # Position of each element as a power of the generator.
    power_of = {}
    x, k = group.identity, 0
    while k < s:
        power_of[x] = k
        x = group.mul(x, gen)
        k += 1
    # Action of g^t on the basis b_i = image of gen^i: shifts i by t,
    # with gen^(s-1) rewritten as -(b_0 + ... + b_(s-2)).
    mats = []
    for g in group.elements():
        t = power_of[g]
        m = [[0] * d for _ in range(d)]
        for i in range(d):
            j = (i + t) % s
            if j < d:
                m[j][i] = 1
            else:
                for k2 in range(d):
                    m[k2][i] = -1
        mats.append(IntegerMatrix.from_rows(m))
    return GLattice(group, d, tuple(mats))


def faithful_quotient(lattice: GLattice) -> tuple[FiniteGroup, GLattice]:
    """Quotient of G by the kernel of the action, with the induced lattice.

    The induced action is faithful and has the same h1 invariants (the
    inflation map along the quotient is an isomorphism here because the
    kernel acts trivially on a torsion-free module).
    """
    grp = lattice.group
    kernel = frozenset(
        g for g in grp.elements() if lattice.action[g].is_identity()
    )
    cosets: list[frozenset[int]] = []
    seen: set[int] = set()
    for g in grp.elements():
        if g in seen:
            continue
        coset = frozenset(grp.mul(g, k) for k in kernel)
        seen |= coset
        cosets.append(coset)
    index: dict[int, int] = {}
    for i, c in enumerate(cosets):
        for g in c:
            index[g] = i
    rep = [min(c) for c in cosets]
    n = len(cosets)
    table = [[index[grp.mul(rep[i], rep[j])] for j in range(n)] for i in range(n)]
    quotient = FiniteGroup(table)
    mats = tuple(lattice.action[rep[i]] for i in range(n))
    return quotient, GLattice(quotient, lattice.rank, mats)


@dataclass(frozen=True)
class MinkowskiReport:
    """Order data for a finite-order integer matrix against gamma(d)."""

    dimension: int
    order: int
    gamma_bound: int
    order_divides_gamma: bool
    nontrivial_mod_3: bool

    @property
    def passed(self) -> bool:
        return self.order_divides_gamma and (self.order == 1 or self.nontrivial_mod_3)


def _mat_pow(m: IntegerMatrix, e: int) -> IntegerMatrix:
    result = IntegerMatrix.identity(m.rows)
    base = m
    while e:
        if e & 1:
            result = result.mul(base)
        base = base.mul(base)
        e >>= 1
    return result


def minkowski_check(m: IntegerMatrix, d: int) -> MinkowskiReport:
    """Verify the finite-order constraints on a d x d integer matrix.

    The order of any finite-order element of GL_d(Z) divides gamma(d),
    and reduction mod 3 is injective on finite subgroups, so a
    nonidentity finite-order matrix cannot reduce to the identity mod 3.
    """
    if m.rows != d or m.cols != d:
        raise ValueError(f"expected a {d} x {d} matrix")
    g = gamma(d)
    if not _mat_pow(m, g).is_identity():
        raise ValueError(f"matrix has no finite order dividing gamma({d}) = {g}")
    # Exact multiplicative order by divisor descent through gamma(d).
    order = g
    for p, e in factor(g).factors:
        for _ in range(e):
            if _mat_pow(m, order // p).is_identity():
                order //= p
            else:
                break
    mod3_identity = all(
        m[i, j] % 3 == (1 if i == j else 0) % 3
        for i in range(d)
        for j in range(d)
    )
    return MinkowskiReport(
        dimension=d,
        order=order,
        gamma_bound=g,
        order_divides_gamma=(g % order == 0),
        nontrivial_mod_3=not mod3_identity,
    )
