"""Difference-set constructions and the exhaustive coset-paired search.

Three producers of :class:`DifferenceSetCandidate`:

* ``gnk_difference_set`` -- the two-parameter family construction.  Each
  nontrivial coset of the distinguished subgroup H contributes the half-coset
  ``rep * M`` where M is the index-2 subgroup of H avoiding the square of the
  coset representative.  Pairing reps to subgroups through the square keeps
  the map one-to-one and makes D, D^-1 and H a partition of the group.
* ``assignment_difference_set`` -- the transversal/maximal-subgroup matching
  (CLI subcommand ``thm81``): a backtracking search assigns a distinct
  hyperplane H_i of H to every nontrivial coset so that conjugation by the
  representative maps partner cosets' subgroups onto each other and
  ``t_i t_j(i)`` lands in H_i; the resulting D is self-inverse.
* ``exhaustive_search`` -- complete enumeration of all difference sets D with
  G = D + D^-1 + H (disjointly), used for nonexistence certificates.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import f2
from .groups import (
    IDENTITY,
    C4PowerGroup,
    CosetDecomposition,
    FiniteGroup,
    GnkGroup,
    GroupError,
    ParameterSet,
    Subgroup,
    coordinatize_elementary_abelian,
    cosets,
    is_normal,
)


class ConstructionError(ValueError):
    pass


class PairingInvariantError(ConstructionError):
    """A coset representative's square landed inside its assigned subgroup."""


class AssignmentPreconditionError(ConstructionError):
    """The matching construction's hypotheses on H are not met."""


class BudgetExceededError(RuntimeError):
    """Search ran out of node budget; carries progress statistics."""

    def __init__(self, message: str, *, nodes: int, leaves: int, found: int):
        super().__init__(message)
        self.nodes = nodes
        self.leaves = leaves
        self.found = found


@dataclass(frozen=True)
class DifferenceSetCandidate:
    """A subset of G \\ H proposed as a difference set, with its provenance."""

    group: FiniteGroup
    subgroup: Subgroup
    elements: Tuple[int, ...]
    params: ParameterSet
    provenance: str
    self_inverse_expected: bool = False

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", elems)
        if len(elems) != self.params.k:
            raise ConstructionError(
                f"candidate has {len(elems)} elements, expected k={self.params.k}"
            )
        for g in elems:
            if not (0 <= g < self.group.order):
                raise ConstructionError(f"element index {g} out of range")
            if g in self.subgroup:
                raise ConstructionError(
                    f"element {g} lies in the excluded subgroup"
                )


# ---------------------------------------------------------------------------
# the two-parameter family
# ---------------------------------------------------------------------------


def gnk_difference_set(n: int, k: int) -> DifferenceSetCandidate:
    """Build the canonical difference set in the order-2^(2n) family group.

    For every nonzero a-exponent vector e, the coset word with exponents e is
    paired with the hyperplane of H whose normal is the nonorthogonal mate of
    the word's square; the square therefore avoids the hyperplane, which is
    asserted during construction together with distinctness of the assigned
    hyperplanes.  Either assertion firing indicates an implementation bug.
    """
    group = GnkGroup(n, k)
    sub = group.distinguished_subgroup()
    zero = f2.zero(n)
    used: Dict[f2.Vector, f2.Vector] = {}
    elements: List[int] = []
    for e in f2.nonzero_vectors(n):
        sq = group.square_vector(e)
        if not any(sq):
            raise PairingInvariantError(
                f"transversal word {e} has trivial square; cannot avoid any hyperplane"
            )
        normal = f2.nonorthogonal_mate(sq)
        if f2.dot(sq, normal) != 1:
            raise PairingInvariantError(
                f"square {sq} of word {e} lies in its assigned hyperplane {normal}"
            )
        if normal in used:
            raise PairingInvariantError(
                f"hyperplane {normal} assigned to both {used[normal]} and {e}"
            )
        used[normal] = e
        rep = group.word_index[(e, zero)]
        for m in f2.hyperplane_members(normal):
            elements.append(group.mul(rep, group.word_index[(zero, m)]))
    params = ParameterSet.from_subgroup_order(1 << n, m=0)
    return DifferenceSetCandidate(
        group, sub, tuple(elements), params, "gnk-construction"
    )


# ---------------------------------------------------------------------------
# transversal / maximal-subgroup matching
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HyperplaneAssignment:
    """A matching of hyperplanes of H to the nontrivial cosets of H.

    ``pairing[i]`` is the coset index j with t_i^-1 in H t_j, and
    ``normals[i]`` is the hyperplane normal assigned to coset i (in the GF(2)
    coordinates of ``h_coords``); both are indexed by coset index 1..h-1.
    """

    group: FiniteGroup
    subgroup: Subgroup
    decomposition: CosetDecomposition
    pairing: Tuple[int, ...]
    normals: Tuple[Optional[f2.Vector], ...]
    h_coords: Dict[int, f2.Vector] = field(compare=False)

    def hyperplane_members(self, coset_index: int) -> FrozenSet[int]:
        normal = self.normals[coset_index]
        vec_to_member = {v: m for m, v in self.h_coords.items()}
        return frozenset(
            vec_to_member[v] for v in f2.hyperplane_members(normal)
        )


def _subgroup_f2_coordinates(group: FiniteGroup, sub: Subgroup) -> Dict[int, f2.Vector]:
    """GF(2) coordinates on an elementary abelian 2-subgroup."""
    if isinstance(group, (GnkGroup, C4PowerGroup)) and sub == group.distinguished_subgroup():
        return {m: group.h_vector(m) for m in sub.members}
    # generic: coordinatize via a sub-table group on the member list
    index_of = {m: i for i, m in enumerate(sub.members)}
    table = [
        [index_of[group.mul(a, b)] for b in sub.members] for a in sub.members
    ]
    from .groups import CayleyTableGroup

    local = CayleyTableGroup(table)
    coords = coordinatize_elementary_abelian(local, 2)
    return {m: coords[index_of[m]] for m in sub.members}


def _check_assignment_preconditions(group: FiniteGroup, sub: Subgroup) -> None:
    h = sub.order
    if group.order != h * h:
        raise AssignmentPreconditionError(
            f"subgroup has index {group.order // h}, expected {h} (|G| must be |H|^2)"
        )
    if not sub.is_elementary_abelian_2():
        raise AssignmentPreconditionError("subgroup is not elementary abelian of 2-power order")
    if h < 2:
        raise AssignmentPreconditionError("subgroup must be nontrivial")
    if not is_normal(group, sub):
        raise AssignmentPreconditionError("subgroup is not normal")


def _coset_pairing(group: FiniteGroup, dec: CosetDecomposition) -> Tuple[int, ...]:
    pairing = [0] * dec.num_cosets
    for i, rep in enumerate(dec.transversal):
        pairing[i] = dec.coset_of[group.inv(rep)]
    return tuple(pairing)


class _AssignmentContext:
    def __init__(self, group: FiniteGroup, sub: Subgroup):
        _check_assignment_preconditions(group, sub)
        self.group = group
        self.sub = sub
        self.dec = cosets(group, sub)
        self.pairing = _coset_pairing(group, self.dec)
        self.h_coords = _subgroup_f2_coordinates(group, sub)
        self.vec_to_member = {v: m for m, v in self.h_coords.items()}
        n = len(next(iter(self.h_coords.values())))
        self.dim = n
        self.all_normals = list(f2.nonzero_vectors(n))
        self.members_of: Dict[f2.Vector, FrozenSet[int]] = {
            w: frozenset(self.vec_to_member[v] for v in f2.hyperplane_members(w))
            for w in self.all_normals
        }
        self.normal_of_set = {s: w for w, s in self.members_of.items()}

    def conj_normal(self, w: f2.Vector, by: int) -> Optional[f2.Vector]:
        """Normal of {g m g^-1 : m in hyperplane w}, or None if not a hyperplane."""
        g = by
        gi = self.group.inv(g)
        conj = frozenset(
            self.group.mul(self.group.mul(g, m), gi) for m in self.members_of[w]
        )
        return self.normal_of_set.get(conj)


def find_hyperplane_assignment(
    group: FiniteGroup,
    sub: Subgroup,
    *,
    all_solutions: bool = False,
):
    """Search for a valid hyperplane-to-coset matching by backtracking.

    Cosets are coupled in inverse pairs: assigning H_i to coset i forces
    ``H_j = t_i^-1 H_i t_i`` on its partner j, and ``t_i t_j in H_i`` prunes
    candidates.  Normals are tried in increasing lexicographic order and
    blocks in increasing coset order, so the first solution found is the
    lexicographically least; with ``all_solutions=True`` every valid matching
    is returned instead.

    Returns a :class:`HyperplaneAssignment`, or None when no matching exists
    (a list in the ``all_solutions`` case).  Precondition violations raise
    :class:`AssignmentPreconditionError` distinctly.
    """
    ctx = _AssignmentContext(group, sub)
    h = sub.order
    reps = ctx.dec.transversal
    blocks: List[Tuple[int, int]] = []
    for i in range(1, h):
        j = ctx.pairing[i]
        if i <= j:
            blocks.append((i, j))
    assigned: Dict[int, f2.Vector] = {}
    used: set = set()
    solutions: List[HyperplaneAssignment] = []

    def snapshot() -> HyperplaneAssignment:
        normals: List[Optional[f2.Vector]] = [None] * h
        for idx, w in assigned.items():
            normals[idx] = w
        return HyperplaneAssignment(
            group, sub, ctx.dec, ctx.pairing, tuple(normals), ctx.h_coords
        )

    def extend(depth: int) -> bool:
        if depth == len(blocks):
            solutions.append(snapshot())
            return not all_solutions
        i, j = blocks[depth]
        ti, tj = reps[i], reps[j]
        anchor = group.mul(ti, tj)
        for w in ctx.all_normals:
            if w in used:
                continue
            if anchor not in ctx.members_of[w]:
                continue
            if i == j:
                if ctx.conj_normal(w, by=ti) != w:
                    continue
                assigned[i] = w
                used.add(w)
                if extend(depth + 1):
                    return True
                del assigned[i]
                used.discard(w)
            else:
                partner = ctx.conj_normal(w, by=group.inv(ti))
                if partner is None or partner == w or partner in used:
                    continue
                assigned[i] = w
                assigned[j] = partner
                used.add(w)
                used.add(partner)
                if extend(depth + 1):
                    return True
                del assigned[i]
                del assigned[j]
                used.discard(w)
                used.discard(partner)
        return False

    extend(0)
    if all_solutions:
        return solutions
    return solutions[0] if solutions else None


def verify_hyperplane_assignment(assignment: HyperplaneAssignment) -> Tuple[bool, List[str]]:
    """Re-check every condition of a matching; returns (ok, problems).

    Self-contained: works from the assignment's own coordinates, and also
    re-verifies that those coordinates are a GF(2) isomorphism on H.
    """
    group = assignment.group
    sub = assignment.subgroup
    dec = assignment.decomposition
    h = sub.order
    problems: List[str] = []
    _check_assignment_preconditions(group, sub)
    if tuple(assignment.pairing) != _coset_pairing(group, dec):
        problems.append("pairing does not match the transversal's inverse cosets")
    coords = assignment.h_coords
    if sorted(coords) != list(sub.members):
        problems.append("coordinates do not cover the subgroup")
        return False, problems
    for a in sub.members:
        for b in sub.members:
            if coords[group.mul(a, b)] != f2.xor(coords[a], coords[b]):
                problems.append("coordinates are not a GF(2) homomorphism")
                return False, problems
    vec_to_member = {v: m for m, v in coords.items()}
    if len(vec_to_member) != h:
        problems.append("coordinates are not a bijection")
        return False, problems
    members_of = {
        w: frozenset(vec_to_member[v] for v in f2.hyperplane_members(w))
        for w in f2.nonzero_vectors(len(coords[IDENTITY]))
    }
    normals = [assignment.normals[i] for i in range(1, h)]
    if any(w is None for w in normals):
        problems.append("assignment is incomplete")
        return False, problems
    if len(set(normals)) != h - 1:
        problems.append("assigned hyperplanes are not pairwise distinct")
    for i in range(1, h):
        w = assignment.normals[i]
        j = assignment.pairing[i]
        ti, tj = dec.transversal[i], dec.transversal[j]
        if group.mul(ti, tj) not in members_of[w]:
            problems.append(f"t_{i} t_{j} not in assigned subgroup of coset {i}")
        wj = assignment.normals[j]
        gi = group.inv(ti)
        conj = frozenset(
            group.mul(group.mul(ti, m), gi) for m in members_of[wj]
        )
        if conj != members_of[w]:
            problems.append(
                f"conjugate by t_{i} of coset {j}'s subgroup is not coset {i}'s subgroup"
            )
    return not problems, problems


def assignment_difference_set(assignment: HyperplaneAssignment) -> DifferenceSetCandidate:
    """D = union over nontrivial cosets i of H_i * t_i; self-inverse by design."""
    group = assignment.group
    sub = assignment.subgroup
    dec = assignment.decomposition
    h = sub.order
    elements: List[int] = []
    for i in range(1, h):
        ti = dec.transversal[i]
        for m in assignment.hyperplane_members(i):
            elements.append(group.mul(m, ti))
    params = ParameterSet.from_subgroup_order(h, m=None)
    return DifferenceSetCandidate(
        group,
        sub,
        tuple(elements),
        params,
        "thm81",
        self_inverse_expected=True,
    )


def c4n_standard_assignment(group: C4PowerGroup) -> HyperplaneAssignment:
    """The orthogonal-mate matching for powers of C4.

    Each transversal representative squares into H; its coset gets the
    hyperplane orthogonal to that square, which contains it by the mate's
    defining property.
    """
    if group.n < 2:
        raise AssignmentPreconditionError("orthogonal mate needs dimension >= 2")
    sub = group.distinguished_subgroup()
    dec = cosets(group, sub)
    pairing = _coset_pairing(group, dec)
    h_coords = {m: group.h_vector(m) for m in sub.members}
    h = sub.order
    normals: List[Optional[f2.Vector]] = [None] * h
    for i in range(1, h):
        rep = dec.transversal[i]
        sq = group.mul(rep, rep)
        normals[i] = f2.orthogonal_mate(h_coords[sq])
    return HyperplaneAssignment(group, sub, dec, pairing, tuple(normals), h_coords)


def c4n_difference_set(n: int) -> DifferenceSetCandidate:
    """Self-inverse difference set in the n-th power of C4 (n >= 2)."""
    if n < 2:
        raise ConstructionError("c4n construction needs n >= 2")
    group = C4PowerGroup(n)
    candidate = assignment_difference_set(c4n_standard_assignment(group))
    return DifferenceSetCandidate(
        group,
        candidate.subgroup,
        candidate.elements,
        candidate.params,
        "c4n",
        self_inverse_expected=True,
    )


# ---------------------------------------------------------------------------
# exhaustive search
# ---------------------------------------------------------------------------

DEFAULT_SEARCH_BUDGET = 1_000_000_000
UNAIDED_SEARCH_LIMIT = 64


@dataclass
class SearchResult:
    candidates: List[DifferenceSetCandidate]
    nodes: int
    leaves: int

    @property
    def count(self) -> int:
        return len(self.candidates)


def exhaustive_search(
    group: FiniteGroup,
    sub: Subgroup,
    *,
    budget: Optional[int] = None,
) -> SearchResult:
    """Enumerate every difference set with G = D + D^-1 + H disjointly.

    Any such D meets each nontrivial coset of H in exactly h/2 points, and
    choosing D inside a coset forces D on the inverse coset, so the search
    walks coset pairs and picks half-cosets: 2^(h/2) ways on a self-paired
    coset (one element from each inverse pair; an involution outside H kills
    the search immediately), binomial(h, h/2) ways on a cross pair.  Partial
    products D * D^-1 are tallied incrementally and any count exceeding
    lambda prunes the branch; at a full assignment the counts are forced to
    equal lambda everywhere, which certifies the difference-set equation.

    An empty result is a nonexistence proof at this group's scale.  Raises
    BudgetExceededError with progress statistics when the node budget runs
    out, and requires an explicit budget for groups of order above 64.
    """
    h = sub.order
    if group.order != h * h:
        raise ConstructionError(
            f"group order {group.order} is not the square of subgroup order {h}"
        )
    if h % 2:
        raise ConstructionError(f"subgroup order {h} must be even")
    if budget is None:
        if group.order > UNAIDED_SEARCH_LIMIT:
            raise ConstructionError(
                f"group order {group.order} > {UNAIDED_SEARCH_LIMIT}: pass an explicit budget"
            )
        budget = DEFAULT_SEARCH_BUDGET
    lam = h * (h - 2) // 4
    k = h * (h - 1) // 2
    dec = cosets(group, sub)
    inv = group.inv
    mul = group.mul
    u = dec.num_cosets
    members_by_coset = [[] for _ in range(u)]
    for g in range(group.order):
        members_by_coset[dec.coset_of[g]].append(g)
    pairing = _coset_pairing(group, dec)

    blocks: List[List[Tuple[int, ...]]] = []
    for i in range(1, u):
        j = pairing[i]
        if i > j:
            continue
        if i == j:
            mem = members_by_coset[i]
            if any(inv(x) == x for x in mem):
                return SearchResult([], nodes=0, leaves=0)
            pairs: List[Tuple[int, int]] = []
            seen = set()
            for x in mem:
                if x in seen:
                    continue
                y = inv(x)
                seen.add(x)
                seen.add(y)
                pairs.append((x, y))
            blocks.append([tuple(choice) for choice in itertools.product(*pairs)])
        else:
            mem_i = members_by_coset[i]
            mem_j = members_by_coset[j]
            choices = []
            for t_part in itertools.combinations(mem_i, h // 2):
                t_inv = {inv(x) for x in t_part}
                comp = tuple(y for y in mem_j if y not in t_inv)
                choices.append(t_part + comp)
            blocks.append(choices)

    counts = [0] * group.order
    chosen: List[Tuple[int, ...]] = []
    flat: List[int] = []
    found: List[DifferenceSetCandidate] = []
    nodes = 0
    leaves = 0
    params = ParameterSet.from_subgroup_order(h, m=0)

    def apply(new: Sequence[int]) -> List[int]:
        touched = []
        for a in new:
            ai = inv(a)
            for b in flat:
                g1 = mul(a, inv(b))
                g2 = mul(b, ai)
                counts[g1] += 1
                counts[g2] += 1
                touched.append(g1)
                touched.append(g2)
        for a in new:
            ai = inv(a)
            for b in new:
                g1 = mul(b, ai)
                counts[g1] += 1
                touched.append(g1)
        return touched

    def undo(touched: List[int]) -> None:
        for g in touched:
            counts[g] -= 1

    def extend(depth: int) -> None:
        nonlocal nodes, leaves
        if depth == len(blocks):
            leaves += 1
            if counts[IDENTITY] == k and all(
                counts[g] == lam for g in range(1, group.order)
            ):
                elements = tuple(sorted(flat))
                found.append(
                    DifferenceSetCandidate(group, sub, elements, params, "search")
                )
            return
        for choice in blocks[depth]:
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(
                    f"search exceeded {budget} nodes",
                    nodes=nodes,
                    leaves=leaves,
                    found=len(found),
                )
            touched = apply(choice)
            ok = all(g == IDENTITY or counts[g] <= lam for g in touched)
            if ok:
                chosen.append(choice)
                flat.extend(choice)
                extend(depth + 1)
                del flat[len(flat) - len(choice):]
                chosen.pop()
            undo(touched)

    extend(0)
    found.sort(key=lambda c: c.elements)
    return SearchResult(found, nodes=nodes, leaves=leaves)
