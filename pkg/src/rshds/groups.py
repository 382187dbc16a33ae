"""Finite-group engines with canonical coset-aligned element indexing.

Three backends share one index-based interface: generic Cayley tables, the
two-parameter 2-group family behind the ``gnk:`` spec strings, and powers of
the cyclic group of order 4.  Elements are always the integers
``0..order-1`` with the identity at index 0; for the specialized backends the
index order is (coset of the distinguished subgroup, then lexicographic
normal form inside the coset), so matrices written in this order are block
aligned with that subgroup.

All groups are immutable after construction and all functions here are pure.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import f2

IDENTITY = 0

FULL_ASSOCIATIVITY_LIMIT = 512
ASSOCIATIVITY_SAMPLES = 1_000_000
SUBGROUP_ENUM_CAP = 256


class GroupError(ValueError):
    """Invalid group-theoretic input (non-subgroup, non-normal, cap exceeded...)."""


class GroupTableError(GroupError):
    """A multiplication table failed validation; carries a witness."""

    def __init__(self, message: str, witness: Optional[dict] = None):
        super().__init__(message)
        self.witness = witness or {}


@dataclass(frozen=True)
class ParameterSet:
    """Difference-set parameters tied to an even subgroup order h.

    v = h^2, k = h(h-1)/2, lam = h(h-2)/4; m counts the H-cosets inside
    D intersect D^-1 (None for self-inverse candidates where the notion does
    not apply).  h = 2 is legal but degenerate (lam = 0).
    """

    h: int
    v: int
    k: int
    lam: int
    m: Optional[int] = 0

    def __post_init__(self) -> None:
        if self.h < 2 or self.h % 2:
            raise GroupError(f"subgroup order h={self.h} must be even and >= 2")
        if self.v != self.h * self.h:
            raise GroupError(f"v={self.v} != h^2={self.h * self.h}")
        if self.k != self.h * (self.h - 1) // 2:
            raise GroupError(f"k={self.k} != h(h-1)/2")
        if self.lam != self.h * (self.h - 2) // 4:
            raise GroupError(f"lambda={self.lam} != h(h-2)/4")
        if self.m is not None and not (0 <= self.m <= (self.h - 1) // 4):
            raise GroupError(f"m={self.m} outside 0..(h-1)/4")

    @classmethod
    def from_subgroup_order(cls, h: int, m: Optional[int] = 0) -> "ParameterSet":
        h = int(h)
        if h < 2 or h % 2:
            raise GroupError(f"subgroup order h={h} must be even and >= 2")
        return cls(h, h * h, h * (h - 1) // 2, h * (h - 2) // 4, m)

    def as_dict(self) -> dict:
        return {"h": self.h, "v": self.v, "k": self.k, "lambda": self.lam, "m": self.m}


# ---------------------------------------------------------------------------
# group backends
# ---------------------------------------------------------------------------


class FiniteGroup:
    """Base class: a finite group on indices 0..order-1, identity at 0."""

    backend = "abstract"
    order: int

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        inv = self._inverses()
        return inv[a]

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def elements(self) -> range:
        return range(self.order)

    def element_name(self, a: int) -> str:
        return str(a)

    @property
    def table(self) -> List[List[int]]:
        """Dense multiplication table, built once on first use."""
        cached = getattr(self, "_table", None)
        if cached is None:
            n = self.order
            cached = [[self.mul(a, b) for b in range(n)] for a in range(n)]
            self._table = cached
        return cached

    def _inverses(self) -> List[int]:
        cached = getattr(self, "_inv", None)
        if cached is None:
            cached = [0] * self.order
            for a in range(self.order):
                for b in range(self.order):
                    if self.mul(a, b) == IDENTITY:
                        cached[a] = b
                        break
            self._inv = cached
        return cached

    def element_order(self, a: int) -> int:
        k = 1
        x = a
        while x != IDENTITY:
            x = self.mul(x, a)
            k += 1
        return k

    def is_abelian(self) -> bool:
        cached = getattr(self, "_abelian", None)
        if cached is None:
            cached = all(
                self.mul(a, b) == self.mul(b, a)
                for a in range(self.order)
                for b in range(a + 1, self.order)
            )
            self._abelian = cached
        return cached

    def order_spectrum(self) -> Tuple[int, ...]:
        return tuple(sorted(self.element_order(a) for a in range(self.order)))

    def fingerprint(self) -> Tuple[int, bool, Tuple[int, ...]]:
        """Cheap isomorphism fingerprint: (order, abelian?, element-order multiset)."""
        return (self.order, self.is_abelian(), self.order_spectrum())

    def distinguished_subgroup(self) -> Optional["Subgroup"]:
        return None


class CayleyTableGroup(FiniteGroup):
    """Group given by an explicit multiplication table."""

    backend = "cayley-table"

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        *,
        names: Optional[Sequence[str]] = None,
        validate: bool = False,
    ):
        if validate:
            validate_group_table(table)
        self.order = len(table)
        self._table = [list(row) for row in table]
        self.names = list(names) if names is not None else None
        if self.names is not None and len(self.names) != self.order:
            raise GroupError("names length does not match group order")

    def mul(self, a: int, b: int) -> int:
        return self._table[a][b]

    def element_name(self, a: int) -> str:
        if self.names is not None:
            return self.names[a]
        return str(a)


class GnkGroup(FiniteGroup):
    """The two-parameter family of 2-groups of order 2^(2n).

    Elements are normal-form words (e, f) of GF(2) n-vectors: e gives the
    exponents of the order-4 generators a_1..a_n, f gives the exponents of
    the central involutions b_1..b_n.  The relations folded into the product
    are a_i^2 = b_{i+k} (indices wrapped into 1..n) and, for
    2 <= j <= k+1, the twist a_j a_1 = a_1 a_j b_{j-1}; all other generator
    pairs commute.  Requires 0 <= k < n-1: at k = n-1 the word squares are no
    longer pairwise distinct and the difference-set construction breaks down.
    """

    backend = "gnk"

    def __init__(self, n: int, k: int):
        if n < 2:
            raise GroupError(f"gnk group needs n >= 2, got n={n}")
        if k < 0 or k >= n - 1:
            raise GroupError(f"gnk group needs 0 <= k < n-1, got k={k} with n={n}")
        self.n = n
        self.k = k
        self.order = 1 << (2 * n)
        vectors = list(f2.all_vectors(n))
        self.words: List[Tuple[f2.Vector, f2.Vector]] = [
            (e, f) for e in vectors for f in vectors
        ]
        self.word_index: Dict[Tuple[f2.Vector, f2.Vector], int] = {
            w: i for i, w in enumerate(self.words)
        }

    def word_mul(
        self, w1: Tuple[f2.Vector, f2.Vector], w2: Tuple[f2.Vector, f2.Vector]
    ) -> Tuple[f2.Vector, f2.Vector]:
        n, k = self.n, self.k
        (e1, f1), (e2, f2v) = w1, w2
        c = [x ^ y for x, y in zip(f1, f2v)]
        if e2[0]:
            for j in range(1, k + 1):
                if e1[j]:
                    c[j - 1] ^= 1
        for i in range(n):
            if e1[i] and e2[i]:
                c[(i + k) % n] ^= 1
        return (f2.xor(e1, e2), tuple(c))

    def mul(self, a: int, b: int) -> int:
        return self.word_index[self.word_mul(self.words[a], self.words[b])]

    def inv(self, a: int) -> int:
        e, f = self.words[a]
        _, s = self.word_mul((e, f2.zero(self.n)), (e, f2.zero(self.n)))
        return self.word_index[(e, f2.xor(f, s))]

    def square_vector(self, e: f2.Vector) -> f2.Vector:
        """f-part of the square of the transversal word with a-exponents e."""
        _, s = self.word_mul((e, f2.zero(self.n)), (e, f2.zero(self.n)))
        return s

    def element_name(self, a: int) -> str:
        e, f = self.words[a]
        parts = [f"a{i + 1}" for i, bit in enumerate(e) if bit]
        parts += [f"b{i + 1}" for i, bit in enumerate(f) if bit]
        return "*".join(parts) if parts else "1"

    def distinguished_subgroup(self) -> "Subgroup":
        return Subgroup(self, range(1 << self.n), validate=False)

    def h_vector(self, a: int) -> f2.Vector:
        """GF(2) coordinates of a member of the distinguished subgroup."""
        e, f = self.words[a]
        if any(e):
            raise GroupError("element is not in the distinguished subgroup")
        return f


class C4PowerGroup(FiniteGroup):
    """Direct power of the cyclic group of order 4, written additively."""

    backend = "c4n"

    def __init__(self, n: int):
        if n < 1:
            raise GroupError(f"c4n group needs n >= 1, got n={n}")
        self.n = n
        self.order = 4**n
        self.words: List[Tuple[int, ...]] = sorted(
            itertools.product(range(4), repeat=n),
            key=lambda x: (tuple(v % 2 for v in x), x),
        )
        self.word_index: Dict[Tuple[int, ...], int] = {
            w: i for i, w in enumerate(self.words)
        }

    def mul(self, a: int, b: int) -> int:
        wa, wb = self.words[a], self.words[b]
        return self.word_index[tuple((x + y) % 4 for x, y in zip(wa, wb))]

    def inv(self, a: int) -> int:
        return self.word_index[tuple((-x) % 4 for x in self.words[a])]

    def element_name(self, a: int) -> str:
        return "(" + ",".join(str(x) for x in self.words[a]) + ")"

    def distinguished_subgroup(self) -> "Subgroup":
        return Subgroup(self, range(1 << self.n), validate=False)

    def h_vector(self, a: int) -> f2.Vector:
        w = self.words[a]
        if any(x % 2 for x in w):
            raise GroupError("element is not in the distinguished subgroup")
        return tuple(x // 2 for x in w)


# ---------------------------------------------------------------------------
# table validation
# ---------------------------------------------------------------------------


def validate_group_table(table: Sequence[Sequence[int]]) -> None:
    """Check a multiplication table is a group with identity at index 0.

    Latin-square and identity checks are exact; associativity is exhaustive
    up to order 512 and a fixed-seed random sample of 10^6 triples above
    that.  Raises GroupTableError with a witness on the first violation.
    """
    n = len(table)
    if n == 0:
        raise GroupTableError("empty table")
    arr = np.asarray(table, dtype=np.int64)
    if arr.shape != (n, n):
        raise GroupTableError(f"table is not {n}x{n}", {"shape": list(arr.shape)})
    if arr.min() < 0 or arr.max() >= n:
        bad = np.argwhere((arr < 0) | (arr >= n))[0]
        raise GroupTableError(
            "table entry out of range",
            {"row": int(bad[0]), "col": int(bad[1]), "value": int(arr[bad[0], bad[1]])},
        )
    ident = np.arange(n)
    if not np.array_equal(arr[0], ident):
        col = int(np.nonzero(arr[0] != ident)[0][0])
        raise GroupTableError("identity is not at index 0 (row)", {"col": col})
    if not np.array_equal(arr[:, 0], ident):
        row = int(np.nonzero(arr[:, 0] != ident)[0][0])
        raise GroupTableError("identity is not at index 0 (column)", {"row": row})
    for i in range(n):
        if len(set(arr[i].tolist())) != n:
            raise GroupTableError("row is not a permutation", {"row": i})
        if len(set(arr[:, i].tolist())) != n:
            raise GroupTableError("column is not a permutation", {"col": i})
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        for a in range(n):
            left = arr[arr[a], :]
            right = arr[a][arr]
            if not np.array_equal(left, right):
                b, c = (int(x) for x in np.argwhere(left != right)[0])
                raise GroupTableError(
                    "associativity violated", {"triple": [a, b, c]}
                )
    else:
        rng = np.random.default_rng(0)
        triples = rng.integers(0, n, size=(ASSOCIATIVITY_SAMPLES, 3))
        a, b, c = triples[:, 0], triples[:, 1], triples[:, 2]
        left = arr[arr[a, b], c]
        right = arr[a, arr[b, c]]
        bad = np.nonzero(left != right)[0]
        if bad.size:
            i = int(bad[0])
            raise GroupTableError(
                "associativity violated (sampled)",
                {"triple": [int(a[i]), int(b[i]), int(c[i])]},
            )


# ---------------------------------------------------------------------------
# subgroups, cosets, quotients
# ---------------------------------------------------------------------------


class Subgroup:
    """Subgroup as a sorted member-index set with constant-time membership."""

    def __init__(self, parent: FiniteGroup, members: Iterable[int], *, validate: bool = True):
        self.parent = parent
        self.members: Tuple[int, ...] = tuple(sorted(set(int(m) for m in members)))
        self.member_set = frozenset(self.members)
        self.order = len(self.members)
        if validate:
            self._validate()

    def _validate(self) -> None:
        if IDENTITY not in self.member_set:
            raise GroupError("subgroup must contain the identity")
        for m in self.members:
            if not (0 <= m < self.parent.order):
                raise GroupError(f"member index {m} out of range")
        for a in self.members:
            if self.parent.inv(a) not in self.member_set:
                raise GroupError(f"subgroup not closed under inverse at {a}")
            for b in self.members:
                if self.parent.mul(a, b) not in self.member_set:
                    raise GroupError(f"subgroup not closed under product at ({a},{b})")
        if self.parent.order % self.order:
            raise GroupError("subgroup order does not divide group order")

    def __contains__(self, a: int) -> bool:
        return a in self.member_set

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, members={list(self.members)})"

    def is_elementary_abelian_2(self) -> bool:
        return all(
            self.parent.mul(a, a) == IDENTITY for a in self.members
        ) and _is_power_of_two(self.order)


def _is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def trivial_subgroup(group: FiniteGroup) -> Subgroup:
    return Subgroup(group, (IDENTITY,), validate=False)


def closure(group: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing the generators (breadth-first closure)."""
    gens = sorted(set(int(g) for g in generators))
    for g in gens:
        if not (0 <= g < group.order):
            raise GroupError(f"generator index {g} out of range")
    members = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = group.mul(x, g)
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(group, members, validate=False)


def closure_members(group: FiniteGroup, generators: Iterable[int]) -> frozenset:
    """Member set of the generated subgroup, without building a Subgroup."""
    members = {IDENTITY}
    frontier = [IDENTITY]
    gens = list(set(generators))
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = group.mul(x, g)
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(members)


def is_normal(group: FiniteGroup, sub: Subgroup) -> bool:
    """Full conjugation scan; intended for desk-scale orders (<= 4096)."""
    if sub.parent is not group:
        raise GroupError("subgroup belongs to a different group")
    for g in range(group.order):
        gi = group.inv(g)
        for s in sub.members:
            if group.mul(group.mul(g, s), gi) not in sub.member_set:
                return False
    return True


@dataclass(frozen=True)
class CosetDecomposition:
    """Right cosets Hg with lexicographically least representatives, H first."""

    subgroup: Subgroup
    transversal: Tuple[int, ...]
    coset_of: Tuple[int, ...]

    @property
    def num_cosets(self) -> int:
        return len(self.transversal)

    def coset_members(self, i: int) -> List[int]:
        return [g for g in range(len(self.coset_of)) if self.coset_of[g] == i]


def cosets(group: FiniteGroup, sub: Subgroup) -> CosetDecomposition:
    coset_of = [-1] * group.order
    transversal: List[int] = []
    for g in range(group.order):
        if coset_of[g] >= 0:
            continue
        idx = len(transversal)
        transversal.append(g)
        for s in sub.members:
            coset_of[group.mul(s, g)] = idx
    return CosetDecomposition(sub, tuple(transversal), tuple(coset_of))


def quotient(
    group: FiniteGroup, normal_sub: Subgroup
) -> Tuple[CayleyTableGroup, List[int]]:
    """Quotient group and the projection map; rejects non-normal subgroups.

    The projection is re-verified as a homomorphism on all pairs for groups
    of order up to 1024.
    """
    if not is_normal(group, normal_sub):
        raise GroupError("quotient requires a normal subgroup")
    dec = cosets(group, normal_sub)
    reps = dec.transversal
    u = len(reps)
    proj = list(dec.coset_of)
    qtable = [[proj[group.mul(reps[i], reps[j])] for j in range(u)] for i in range(u)]
    q = CayleyTableGroup(qtable)
    if group.order <= 1024:
        t = np.asarray(group.table, dtype=np.int64)
        p = np.asarray(proj, dtype=np.int64)
        qt = np.asarray(qtable, dtype=np.int64)
        if not np.array_equal(p[t], qt[p[:, None], p[None, :]]):
            raise GroupError("projection is not a homomorphism")
    return q, proj


def involutions(group: FiniteGroup) -> List[int]:
    return [g for g in range(1, group.order) if group.mul(g, g) == IDENTITY]


def subgroups_of_order(
    group: FiniteGroup, m: int, *, cap: int = SUBGROUP_ENUM_CAP
) -> List[Subgroup]:
    """All subgroups of order m, by layered closure of growing generating sets.

    Deterministic output, sorted lexicographically by member tuple.  Any
    subgroup of order m is reached through a chain of subgroups whose orders
    divide m, so intermediate closures with non-dividing order are pruned.
    """
    if group.order > cap:
        raise GroupError(f"group order {group.order} exceeds enumeration cap {cap}")
    if m <= 0 or group.order % m:
        raise GroupError(f"order {m} does not divide group order {group.order}")
    triv = frozenset({IDENTITY})
    seen = {triv}
    frontier = [triv]
    while frontier:
        nxt = []
        for sub in frontier:
            if len(sub) == m:
                continue
            for g in range(1, group.order):
                if g in sub:
                    continue
                c = closure_members(group, sub | {g})
                if len(c) > m or m % len(c) or c in seen:
                    continue
                seen.add(c)
                nxt.append(c)
        frontier = nxt
    found = sorted(tuple(sorted(s)) for s in seen if len(s) == m)
    return [Subgroup(group, s, validate=False) for s in found]


def derived_subgroup(group: FiniteGroup) -> Subgroup:
    comms = set()
    for a in range(group.order):
        ai = group.inv(a)
        for b in range(group.order):
            comms.add(group.mul(group.mul(ai, group.inv(b)), group.mul(a, b)))
    return Subgroup(group, closure_members(group, comms), validate=False)


def _prime_factors(n: int) -> List[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def coordinatize_elementary_abelian(
    group: FiniteGroup, p: int
) -> Dict[int, Tuple[int, ...]]:
    """Coordinates of an elementary abelian p-group over F_p.

    Deterministic: basis elements are picked in increasing index order.
    """
    coords: Dict[int, Tuple[int, ...]] = {IDENTITY: ()}
    for g in range(1, group.order):
        if g in coords:
            continue
        if group.element_order(g) != p:
            raise GroupError(f"element {g} has order != {p}; group not elementary abelian")
        coords = {x: c + (0,) for x, c in coords.items()}
        items = list(coords.items())
        power = IDENTITY
        for j in range(1, p):
            power = group.mul(power, g)
            for x, cx in items:
                coords[group.mul(x, power)] = cx[:-1] + (j,)
    if len(coords) != group.order:
        raise GroupError("coordinatization failed; group not elementary abelian")
    return coords


def normal_subgroups_of_prime_index(group: FiniteGroup) -> List[Tuple[Subgroup, int]]:
    """All kernels of surjections onto a cyclic group of prime order.

    Computed through the abelianization: for each prime p dividing its order,
    the index-p subgroups correspond to hyperplanes of the elementary abelian
    quotient by p-th powers, and are pulled back to the original group.
    Sorted by (p, member tuple).
    """
    der = derived_subgroup(group)
    ab, proj = quotient(group, der)
    out: List[Tuple[Subgroup, int]] = []
    for p in _prime_factors(ab.order):
        powers = [0] * ab.order
        for a in range(ab.order):
            x = IDENTITY
            for _ in range(p):
                x = ab.mul(x, a)
            powers[a] = x
        psub = Subgroup(ab, closure_members(ab, powers), validate=False)
        w, wproj = quotient(ab, psub)
        if w.order == 1:
            continue
        coords = coordinatize_elementary_abelian(w, p)
        rank = len(coords[IDENTITY])
        for phi in itertools.product(range(p), repeat=rank):
            if not any(phi):
                continue
            first = next(x for x in phi if x)
            if first != 1:
                continue
            members = [
                g
                for g in range(group.order)
                if sum(a * b for a, b in zip(phi, coords[wproj[proj[g]]])) % p == 0
            ]
            out.append((Subgroup(group, members, validate=False), p))
    out.sort(key=lambda t: (t[1], t[0].members))
    return out


# ---------------------------------------------------------------------------
# small standard groups (fingerprint references, fixtures, tests)
# ---------------------------------------------------------------------------


def cyclic_group(n: int) -> CayleyTableGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = [f"t{i}" if i else "1" for i in range(n)]
    return CayleyTableGroup(table, names=names)


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> CayleyTableGroup:
    n1, n2 = g1.order, g2.order
    table = [[0] * (n1 * n2) for _ in range(n1 * n2)]
    for a1 in range(n1):
        for a2 in range(n2):
            for b1 in range(n1):
                for b2 in range(n2):
                    table[a1 * n2 + a2][b1 * n2 + b2] = (
                        g1.mul(a1, b1) * n2 + g2.mul(a2, b2)
                    )
    names = [
        f"({g1.element_name(a1)},{g2.element_name(a2)})"
        for a1 in range(n1)
        for a2 in range(n2)
    ]
    return CayleyTableGroup(table, names=names)


def dihedral_group(n: int) -> CayleyTableGroup:
    """Dihedral group of order 2n: rotations r^i and reflections r^i s."""
    order = 2 * n

    def enc(i: int, j: int) -> int:
        return i + n * j

    table = [[0] * order for _ in range(order)]
    for i in range(n):
        for j in range(2):
            for i2 in range(n):
                for j2 in range(2):
                    # (r^i s^j)(r^i2 s^j2) = r^(i + (-1)^j i2) s^(j+j2)
                    ii = (i + (i2 if j == 0 else -i2)) % n
                    table[enc(i, j)][enc(i2, j2)] = enc(ii, (j + j2) % 2)
    return CayleyTableGroup(table)


def elementary_abelian_2_group(r: int) -> CayleyTableGroup:
    table = [[i ^ j for j in range(1 << r)] for i in range(1 << r)]
    return CayleyTableGroup(table)
