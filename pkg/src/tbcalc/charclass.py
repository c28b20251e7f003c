"""Canonical class coefficients and the characteristic set W.

On a negative definite tree of spheres the first Chern class of the
resolved surface is determined by adjunction: Q a = (n_i + 2). The
solution is required to be integral (the singularities handled here are
numerically Gorenstein; a non-integral solution means the input graph is
outside scope). W collects the vertices with odd coefficient; it is the
support of the Wu class, and an independent GF(2) solve of the Wu system
cross-checks every computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InconsistentAnnotation,
    NotNumericallyGorenstein,
    StructureMismatch,
    WuMismatch,
)
from .graph import DecoratedGraph, intersection_matrix, solve_intersection_system
from .numeric import GF2_INCONSISTENT, GF2_UNIQUE, solve_gf2

WU_CONFIRMED_UNIQUE = "confirmed-unique"
WU_CONFIRMED_CONSISTENT = "confirmed-consistent"
WU_SKIPPED_SINGULAR = "skipped-singular"


@dataclass(frozen=True)
class CharacteristicData:
    """Integral c1 coefficients, the odd-coefficient set W, and the status
    of the Wu-formula cross-check."""

    a: dict[int, int]
    w: frozenset[int]
    wu_status: str


def _underlying_graph(cg) -> DecoratedGraph:
    return cg.graph if hasattr(cg, "graph") else cg


def canonical_coefficients(cg) -> CharacteristicData:
    """Solve the adjunction system and extract W.

    Accepts a CoverGraph or a bare DecoratedGraph. When covering
    provenance is available, W must be invariant under the deck
    transformation (conjugation preserves the canonical class).
    """
    g = _underlying_graph(cg)
    rhs = {v: Fraction(g.vertices[v].self_int + 2) for v in g.vertex_ids()}
    solution = solve_intersection_system(g, rhs)
    a: dict[int, int] = {}
    for v, value in solution.items():
        if value.denominator != 1:
            raise NotNumericallyGorenstein(
                f"c1 coefficient of vertex {v} is {value}; the graph is not "
                "numerically Gorenstein"
            )
        a[v] = int(value)
    w = frozenset(v for v, coeff in a.items() if coeff % 2 != 0)
    deck = getattr(cg, "deck", None)
    if deck and {deck[v] for v in w} != w:
        raise StructureMismatch("W is not invariant under the deck transformation")
    wu_status = _wu_check(g, a)
    return CharacteristicData(a=a, w=w, wu_status=wu_status)


def _wu_check(g: DecoratedGraph, a: dict[int, int]) -> str:
    """Cross-check W against the Wu system Q x = diag(Q) over GF(2)."""
    ids, q = intersection_matrix(g)
    q2 = [[entry % 2 for entry in row] for row in q]
    rhs2 = [q[i][i] % 2 for i in range(len(ids))]
    a2 = [a[v] % 2 for v in ids]
    result = solve_gf2(q2, rhs2)
    if result.status == GF2_INCONSISTENT:
        raise WuMismatch(
            "Wu system is inconsistent although the adjunction parity solves it"
        )
    if result.status == GF2_UNIQUE:
        if list(result.solution) != a2:
            raise WuMismatch(
                "unique Wu solution differs from the adjunction parities"
            )
        return WU_CONFIRMED_UNIQUE
    for i in range(len(ids)):
        if sum(q2[i][j] * a2[j] for j in range(len(ids))) % 2 != rhs2[i]:
            raise WuMismatch(
                "adjunction parities do not satisfy the Wu system"
            )
    return WU_CONFIRMED_CONSISTENT


def restrict_to_real(cd: CharacteristicData, cg) -> frozenset[int]:
    """W_R: the members of W fixed by the real structure."""
    g = _underlying_graph(cg)
    for v in g.vertex_ids():
        if g.vertices[v].real is None:
            raise InconsistentAnnotation(
                f"vertex {v} has no real/imaginary mark; mark the real "
                "structure first"
            )
    return frozenset(v for v in cd.w if g.vertices[v].real)


def parity_checks(cd: CharacteristicData, cg, downstairs: DecoratedGraph) -> dict:
    """Membership laws for W on the pre-minimization lift.

    Checks, for each lifted vertex over a downstairs curve E_j with
    multiplicity m_j and c1 coefficient b_j:

    odd_mult_not_in_w:    m_j odd implies the lift is not in W;
    even_mult_parity_law: for even m_j, the lift is in W iff
                          (m_j = 2 mod 4 and b_j even) or (m_j = 0 mod 4
                          and b_j odd);
    rupture_membership:   with exactly one even exponent, e^0 is in W iff
                          that exponent is 2 mod 4 (skipped otherwise).

    Returns a report dict: each check maps to {"checked": int,
    "violations": [...]}; a missing precondition marks the check skipped.
    """
    g = _underlying_graph(cg)
    report: dict[str, dict] = {}

    odd_violations = []
    odd_checked = 0
    even_violations = []
    even_checked = 0
    for v in g.vertex_ids():
        down = cg.downstairs[v]
        mult = downstairs.vertices[down].mult
        b = downstairs.vertices[down].c1_coeff
        in_w = v in cd.w
        if mult % 2 == 1:
            odd_checked += 1
            if in_w:
                odd_violations.append(
                    {"vertex": v, "downstairs": down, "mult": mult}
                )
        else:
            even_checked += 1
            expected = (mult % 4 == 2 and b % 2 == 0) or (
                mult % 4 == 0 and b % 2 == 1
            )
            if in_w != expected:
                even_violations.append(
                    {"vertex": v, "downstairs": down, "mult": mult,
                     "b": b, "in_w": in_w}
                )
    report["odd_mult_not_in_w"] = {
        "checked": odd_checked, "violations": odd_violations,
    }
    report["even_mult_parity_law"] = {
        "checked": even_checked, "violations": even_violations,
    }

    m, n = cg.m, cg.n
    one_even = (m % 2 == 0) != (n % 2 == 0)
    if one_even and cg.e0_lift is not None:
        even_exp = m if m % 2 == 0 else n
        in_w = cg.e0_lift in cd.w
        expected = even_exp % 4 == 2
        violations = []
        if in_w != expected:
            violations.append(
                {"vertex": cg.e0_lift, "even_exponent": even_exp, "in_w": in_w}
            )
        report["rupture_membership"] = {"checked": 1, "violations": violations}
    else:
        report["rupture_membership"] = {"checked": 0, "violations": []}
    return report
