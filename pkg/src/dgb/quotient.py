"""Noetherian quotients by monic linear relations and cyclic symmetries.

A relation family assigns to every (symbol, shift operator) pair a monic
linear polynomial in the pure powers of that operator applied to that
symbol.  Such a family is automatically a complete basis; the quotient is
a finitely generated polynomial algebra whose variables are the finite
staircase left under the relation leading monomials.  Normal forms can be
computed two independent ways: by reduction, and through the action of
companion matrices combined with Kronecker products.  Cyclic permutation
symmetries are the special case where every companion polynomial is
s^d - 1; ideals invariant under such a group are completed by adjoining
the cycle relations.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import product

from .completion import (SigmaBasis, minimalize, sigma_gbasis,
                         verify_sigma_gbasis)
from .errors import ParseError, StaircaseError
from .orderings import DEGLEX, LEX, OrderingSpec
from .reduction import tail_reduce
from .ring import DifferenceRing, Polynomial, Signature, VarRef


@dataclass(frozen=True)
class LinearRelation:
    """A monic linear rewrite rule for one symbol along one shift operator:
    coefficients (c_0, ..., c_d) with c_d = 1 encode the polynomial
    sum_k c_k * symbol(op^k), whose leading monomial is symbol(op^d)."""

    symbol_index: int
    shift_index: int
    coefficients: tuple

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a relation needs at least the top coefficient")
        if self.coefficients[-1] != 1:
            raise ValueError("relation must be monic in its top power")

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def polynomial(self, ring: DifferenceRing) -> Polynomial:
        r = ring.signature.shift_rank
        pairs = []
        for k, c in enumerate(self.coefficients):
            shift = tuple(k if j == self.shift_index else 0 for j in range(r))
            pairs.append((ring.field.coerce(c), ring.monomial([(self.symbol_index, shift, 1)])))
        return ring.polynomial(pairs)


def _pure_power_direction(shift):
    """Index j when the shift is a pure power of operator j, 0-length
    support meaning the identity; None otherwise."""
    support = [j for j, a in enumerate(shift) if a]
    if not support:
        return -1
    if len(support) == 1:
        return support[0]
    return None


def missing_pure_powers(ring, lm_generators):
    """(symbol, operator) pairs with no pure-power variable reachable from
    the given leading monomials under the shift action."""
    n = len(ring.signature.symbols)
    r = ring.signature.shift_rank
    covered = [[False] * r for _ in range(n)]
    for m in lm_generators:
        if len(m.factors) != 1 or m.factors[0][1] != 1:
            continue
        (sym, shift), _ = m.factors[0]
        j = _pure_power_direction(shift)
        if j == -1:
            for jj in range(r):
                covered[sym][jj] = True
        elif j is not None:
            covered[sym][j] = True
    return [(i, j) for i in range(n) for j in range(r) if not covered[i][j]]


def normal_variables(ring, lm_generators):
    """The finite set of variables outside the shift-closed monomial ideal
    of the given leading monomials, or None when that set is infinite.

    Only variable generators matter: a variable is divisible by a shifted
    monomial exactly when that monomial is itself a single variable with
    exponent one and a componentwise smaller shift.
    """
    lm_generators = list(lm_generators)
    if missing_pure_powers(ring, lm_generators):
        return None
    n = len(ring.signature.symbols)
    r = ring.signature.shift_rank
    out = []
    for i in range(n):
        betas = []
        bounds = [None] * r
        for m in lm_generators:
            if len(m.factors) != 1 or m.factors[0][1] != 1:
                continue
            (sym, shift), _ = m.factors[0]
            if sym != i:
                continue
            betas.append(shift)
            j = _pure_power_direction(shift)
            if j == -1:
                bounds = [0] * r
            elif j is not None and (bounds[j] is None or shift[j] < bounds[j]):
                bounds[j] = shift[j]
        for omega in product(*(range(b) for b in bounds)):
            if not any(all(a <= w for a, w in zip(beta, omega)) for beta in betas):
                out.append(VarRef(i, omega))
    return out


def is_noetherian_quotient(arg, lm_generators=None):
    """Whether the quotient by the shift-closure of the given leading
    monomials (or of a full relation family) has finitely many variables."""
    if isinstance(arg, QuotientPresentation):
        return True
    return normal_variables(arg, lm_generators) is not None


class QuotientPresentation:
    """A full matrix of monic linear relations, one per (symbol, operator)."""

    def __init__(self, ring: DifferenceRing, relations):
        n = len(ring.signature.symbols)
        r = ring.signature.shift_rank
        matrix = {}
        for rel in relations:
            key = (rel.symbol_index, rel.shift_index)
            if not (0 <= rel.symbol_index < n and 0 <= rel.shift_index < r):
                raise ValueError(f"relation indices {key} out of range")
            if key in matrix:
                raise ValueError(f"duplicate relation for {key}")
            matrix[key] = rel
        missing = [(i, j) for i in range(n) for j in range(r) if (i, j) not in matrix]
        if missing:
            raise ValueError(f"missing relations for {missing}")
        self.ring = ring
        self.relations = matrix
        self.degree_table = [[matrix[(i, j)].degree for j in range(r)] for i in range(n)]
        self._polys = None

    @property
    def relation_polynomials(self):
        if self._polys is None:
            order = sorted(self.relations)
            self._polys = [self.relations[key].polynomial(self.ring) for key in order]
        return self._polys

    @property
    def dimension(self):
        return sum(math.prod(row) for row in self.degree_table)

    def normal_variables(self):
        out = []
        for i, row in enumerate(self.degree_table):
            for omega in product(*(range(d) for d in row)):
                out.append(VarRef(i, omega))
        return out

    def _companion_apply(self, coefficients, vec):
        """One application of the companion matrix of a monic polynomial
        with the given coefficients to a column vector."""
        field = self.ring.field
        d = len(vec)
        top = vec[-1]
        out = [field.zero - coefficients[0] * top]
        for row in range(1, d):
            out.append(vec[row - 1] - coefficients[row] * top)
        return out

    def _companion_power_basis(self, i, j, k):
        """The vector of the k-th companion power applied to the first
        basis vector, i.e. the coordinates of symbol_i(op_j^k)."""
        field = self.ring.field
        rel = self.relations[(i, j)]
        d = rel.degree
        if d == 0:
            return []
        coeffs = [field.coerce(c) for c in rel.coefficients]
        vec = [field.one] + [field.zero] * (d - 1)
        for _ in range(k):
            vec = self._companion_apply(coeffs, vec)
        return vec

    def normal_form_companion(self, var):
        """Normal form of a variable through the Kronecker product of
        companion-matrix powers."""
        i, shift = var
        ring = self.ring
        if any(d == 0 for d in self.degree_table[i]):
            return ring.zero
        vectors = [self._companion_power_basis(i, j, k) for j, k in enumerate(shift)]
        pairs = []
        for combo in product(*(range(len(v)) for v in vectors)):
            coeff = ring.field.one
            for v, t in zip(vectors, combo):
                coeff = coeff * v[t]
            if coeff:
                pairs.append((coeff, ring.monomial([(i, combo, 1)])))
        return ring.polynomial(pairs)

    def normal_form_reduction(self, var):
        """Normal form of a variable by reduction against the relations."""
        i, shift = var
        return tail_reduce(self.ring.var(i, shift), self.relation_polynomials)

    def normal_form_variable(self, var):
        """Normal form of a variable, computed along both routes; the two
        must agree and the common value is returned."""
        by_reduction = self.normal_form_reduction(var)
        by_companion = self.normal_form_companion(var)
        if by_reduction != by_companion:
            raise AssertionError(
                f"normal form mismatch for {var}: reduction gave "
                f"{by_reduction}, companion action gave {by_companion}")
        return by_reduction


def normal_form_variable(presentation: QuotientPresentation, var):
    return presentation.normal_form_variable(var)


def relations_are_groebner(presentation: QuotientPresentation) -> bool:
    """The relation family is always a complete basis over a field of
    constants; this runs the finite verification criterion on it."""
    return verify_sigma_gbasis(presentation.relation_polynomials).ok


_CYCLE_TEXT = re.compile(r"\(([^()]*)\)")


class PermutationAction:
    """A permutation of 1..degree acting on a finite polynomial ring.

    Cycles are listed by increasing smallest point; points not mentioned
    are fixed points and become cycles of length one.  Cycle i is carried
    by symbol i of the induced rank-one difference ring, with the cycle
    relation symbol_i(s^d_i) - symbol_i(1) closing it.
    """

    def __init__(self, cycles, degree=None, symbols=None, parameters=()):
        if isinstance(cycles, str):
            cycles = parse_cycles(cycles)
        cycles = [tuple(int(p) for p in c) for c in cycles]
        seen = set()
        for c in cycles:
            for p in c:
                if p < 1:
                    raise ValueError("cycle points are 1-based positive integers")
                if p in seen:
                    raise ValueError(f"point {p} appears in two cycles")
                seen.add(p)
        top = max(seen) if seen else 0
        self.degree = degree if degree is not None else top
        if top > self.degree:
            raise ValueError("cycle point exceeds the declared degree")
        fixed = [(p,) for p in range(1, self.degree + 1) if p not in seen]
        cycles = [c for c in cycles if len(c) > 1] + fixed
        # rotate each cycle to start at its smallest point, then sort
        cycles = [c[c.index(min(c)):] + c[:c.index(min(c))] for c in cycles]
        cycles.sort(key=lambda c: c[0])
        self.cycles = tuple(cycles)
        self.cycle_lengths = tuple(len(c) for c in self.cycles)
        if sum(self.cycle_lengths) != self.degree:
            raise ValueError("cycles do not cover 1..degree")
        n = len(self.cycles)
        if symbols is None:
            symbols = ("x",) if n == 1 else tuple(f"x{i + 1}" for i in range(n))
        self.ring = DifferenceRing(
            Signature(1, symbols, parameters),
            OrderingSpec(shift_order=DEGLEX, symbol_order=LEX))

    @property
    def order(self):
        return math.lcm(*self.cycle_lengths)

    def relations(self):
        out = []
        for i, d in enumerate(self.cycle_lengths):
            out.append(self.ring.var(i, (d,)) - self.ring.var(i, (0,)))
        return out

    def presentation(self) -> QuotientPresentation:
        rels = []
        for i, d in enumerate(self.cycle_lengths):
            coeffs = (-1,) + (0,) * (d - 1) + (1,)
            rels.append(LinearRelation(i, 0, coeffs))
        return QuotientPresentation(self.ring, rels)

    def __repr__(self):
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)
        return f"PermutationAction({body})"


def parse_cycles(text):
    """Parse disjoint cycle notation like "(1 2 3)(4 5)"; commas allowed."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty permutation")
    leftovers = _CYCLE_TEXT.sub("", stripped).strip()
    if leftovers:
        raise ParseError(f"bad permutation syntax near {leftovers!r}")
    cycles = []
    for body in _CYCLE_TEXT.findall(stripped):
        points = [p for p in re.split(r"[,\s]+", body.strip()) if p]
        if not points:
            raise ParseError("empty cycle in permutation")
        try:
            cycles.append(tuple(int(p) for p in points))
        except ValueError:
            raise ParseError(f"non-integer point in cycle ({body})") from None
    return cycles


def symmetric_setup(action: PermutationAction, generators):
    """Generators of the invariant ideal lifted to the difference ring,
    together with the cycle relations.  Generators must live inside the
    staircase: symbol i may only appear with shifts below its cycle length."""
    ring = action.ring
    gens = []
    for g in generators:
        if g.ring is not ring and g.ring != ring:
            raise StaircaseError("generator built over a different ring")
        for m, _ in g.terms:
            for (sym, shift), _e in m.factors:
                if shift[0] >= action.cycle_lengths[sym]:
                    raise StaircaseError(
                        f"generator mentions {ring.signature.symbols[sym]}({shift[0]}), "
                        f"outside the staircase of cycle length "
                        f"{action.cycle_lengths[sym]}")
        if g:
            gens.append(g)
    return gens + action.relations()


def groebner_gamma_basis(action: PermutationAction, generators,
                         options=None, **overrides) -> SigmaBasis:
    """Complete the invariant ideal inside the quotient: run completion on
    the lifted generators plus cycle relations (termination is guaranteed
    because every pure power is covered), minimalize, and drop the cycle
    relations from the returned elements."""
    lifted = symmetric_setup(action, generators)
    basis = minimalize(sigma_gbasis(lifted, options, **overrides))
    relation_lms = {rel.lm for rel in action.relations()}
    kept = tuple(g for g in basis.elements if g.lm not in relation_lms)
    return SigmaBasis(basis.ring, kept, basis.status, basis.stats)


def expand_classical_basis(action: PermutationAction, gamma_elements):
    """Unfold a group-invariant basis into the plain minimal basis of the
    finite ring: apply all powers of the shift, wrap through the cycle
    relations, deduplicate, and minimalize with plain divisibility."""
    ring = action.ring
    relations = action.relations()
    copies = {}
    for g in gamma_elements:
        for k in range(action.order):
            c = tail_reduce(g.shift((k,)), relations)
            if c:
                copies.setdefault(c.monic(), None)
    key = ring.ordering.monomial_key
    kept = []
    for g in sorted(copies, key=lambda g: key(g.lm)):
        if not any(h.lm.divides(g.lm) for h in kept):
            kept.append(g)
    return kept
