"""Boundedness checks and certified verdicts about resolved maps.

Everything here consumes the combinatorial shadow of a resolved map:
per stratum, the multiplicity vectors of the two Jacobians.  Their
difference paired with a contact vector gives the Jacobian order of the
map along any arc with those contacts, so boundedness of the Jacobian
reduces to componentwise comparisons, and the measure statements reduce
to order comparisons in the coefficient ring.

Reports never output a positive conclusion on partial evidence.  Each
hypothesis is checked and recorded; one failure downgrades the verdict
to Inconclusive with the failing certificate attached.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .grothendieck import (NEG_INF, MotiveSeries, Order, PrecisionExhausted,
                           leq_order, render)
from .measure import IndexMismatch, ResolutionDiagram, image_measure
from .series import matrix_entry_orders

# precision used for internal certificates when both inputs are exact
DEFAULT_REPORT_FLOOR = -16


def _floor_of(m):
    return m.floor if isinstance(m, MotiveSeries) else NEG_INF


class Conclusion:
    INVERSE_ARC_ANALYTIC = "InverseArcAnalytic"
    MEASURE_INEQUALITY = "MeasureInequality"
    INCONCLUSIVE = "Inconclusive"


def ord_jac_f(diagram: ResolutionDiagram, stratum_name: str,
              contacts) -> int:
    """Jacobian order of the map along arcs with the given contacts.

    The chain rule splits the order into target minus source leg, and on
    monomial data both legs are dot products with the contact vector.
    """
    stratum, p, q = diagram.stratum_named(stratum_name)
    contacts = tuple(int(e) for e in contacts)
    if len(contacts) != len(stratum.index_set):
        raise IndexMismatch(
            f"{len(contacts)} contacts for {len(stratum.index_set)} "
            "components")
    return (sum(m * e for m, e in zip(q, contacts))
            - sum(m * e for m, e in zip(p, contacts)))


@dataclass(frozen=True)
class BoundednessVerdict:
    """Outcome of the two boundedness questions, with counterexamples.

    A witness is a ``(stratum name, contact vector)`` pair on which
    :func:`ord_jac_f` has the offending sign; it is present exactly when
    the corresponding flag is False.
    """

    bounded_above: bool
    bounded_below: bool
    witness_above: tuple = None
    witness_below: tuple = None

    def __post_init__(self):
        if self.bounded_above == (self.witness_above is not None):
            raise ValueError("witness_above must accompany a failed bound")
        if self.bounded_below == (self.witness_below is not None):
            raise ValueError("witness_below must accompany a failed bound")


def _violating_contacts(deltas, position):
    """Contact vector making a single sign violation dominate.

    ``deltas[position]`` has the wrong sign; the remaining components
    are held at contact 1 and the violating one is scaled until it
    outweighs their combined contribution.
    """
    opposing = sum(d for i, d in enumerate(deltas)
                   if i != position and d * deltas[position] < 0)
    scale = 1 + abs(opposing) // abs(deltas[position])
    return tuple(scale if i == position else 1
                 for i in range(len(deltas)))


def check_boundedness(diagram: ResolutionDiagram) -> BoundednessVerdict:
    """Decide both Jacobian bounds from the multiplicity data.

    Bounded above means the order is nonnegative along every arc, which
    on monomial data is the componentwise comparison p <= q over every
    stratum; bounded below is the reverse comparison.  The witnesses
    returned on failure are explicit contact vectors, checkable through
    :func:`ord_jac_f`.
    """
    witness_above = witness_below = None
    for s, p, q in zip(diagram.strata, diagram.p_mults, diagram.q_mults):
        deltas = [qi - pi for pi, qi in zip(p, q)]
        for i, d in enumerate(deltas):
            if d < 0 and witness_above is None:
                witness_above = (s.name, _violating_contacts(deltas, i))
            if d > 0 and witness_below is None:
                witness_below = (s.name, _violating_contacts(deltas, i))
        if witness_above and witness_below:
            break
    return BoundednessVerdict(bounded_above=witness_above is None,
                              bounded_below=witness_below is None,
                              witness_above=witness_above,
                              witness_below=witness_below)


@dataclass(frozen=True)
class TheoremReport:
    """Verdict plus the full account of what was checked to reach it."""

    conclusion: str
    hypotheses_checked: tuple
    certificates: dict

    def to_json(self) -> dict:
        return {
            "conclusion": self.conclusion,
            "hypotheses": [
                {"name": n, "status": st, "detail": d}
                for n, st, d in self.hypotheses_checked],
            "certificates": dict(sorted(self.certificates.items())),
        }


def _witness_json(witness):
    if witness is None:
        return None
    name, contacts = witness
    return {"stratum": name, "contacts": list(contacts)}


def inverse_mapping_report(diagram: ResolutionDiagram, mu_x, mu_y
                           ) -> TheoremReport:
    """Certify that the inverse of a measure-preserving map behaves.

    Requires equality of the two germ measures and a Jacobian bounded
    below.  On top of the hypotheses, two internal certificates must
    come out right: the image measure computed through the target leg
    must reproduce the target measure, and the Jacobian must also be
    bounded above.  Any failure yields Inconclusive and names the
    failing item; comparisons that cannot be settled at the available
    precision raise :class:`PrecisionExhausted` instead of concluding.
    """
    hypotheses = []
    certificates = {"mu_x": render(mu_x), "mu_y": render(mu_y)}
    verdict = check_boundedness(diagram)
    order = leq_order(mu_x, mu_y)
    certificates["measure_order"] = order

    ok = order == Order.EQUAL
    hypotheses.append(("measures_equal", "pass" if ok else "fail",
                       f"leq_order returned {order}"))
    failed = not ok

    ok = verdict.bounded_below
    hypotheses.append(("jacobian_bounded_below", "pass" if ok else "fail",
                       "componentwise q <= p on every stratum" if ok
                       else "violating contact vector recorded"))
    if not ok:
        certificates["witness_below"] = _witness_json(verdict.witness_below)
        failed = True

    if failed:
        return TheoremReport(Conclusion.INCONCLUSIVE, tuple(hypotheses),
                             certificates)

    floor = max(_floor_of(mu_x), _floor_of(mu_y))
    if floor == NEG_INF:
        floor = DEFAULT_REPORT_FLOOR
    image = image_measure(diagram, int(floor))
    certificates["image_measure"] = render(image)
    image_order = leq_order(image, mu_y)
    ok = image_order == Order.EQUAL
    hypotheses.append(("image_measure_matches_target",
                       "pass" if ok else "fail",
                       f"leq_order returned {image_order}"))
    if not ok:
        return TheoremReport(Conclusion.INCONCLUSIVE, tuple(hypotheses),
                             certificates)

    ok = verdict.bounded_above
    hypotheses.append(("jacobian_bounded_above", "pass" if ok else "fail",
                       "componentwise p <= q on every stratum" if ok
                       else "violating contact vector recorded"))
    if not ok:
        certificates["witness_above"] = _witness_json(verdict.witness_above)
        return TheoremReport(Conclusion.INCONCLUSIVE, tuple(hypotheses),
                             certificates)

    return TheoremReport(Conclusion.INVERSE_ARC_ANALYTIC, tuple(hypotheses),
                         certificates)


def measure_comparison_report(diagram: ResolutionDiagram, mu_x, mu_y
                              ) -> TheoremReport:
    """Certify the measure inequality forced by a bounded-below Jacobian.

    With the Jacobian bounded below, the source measure cannot exceed
    the target measure.  A comparison coming out Greater therefore
    contradicts the supplied data and is reported as such rather than
    glossed over.
    """
    hypotheses = []
    certificates = {"mu_x": render(mu_x), "mu_y": render(mu_y)}
    verdict = check_boundedness(diagram)
    ok = verdict.bounded_below
    hypotheses.append(("jacobian_bounded_below", "pass" if ok else "fail",
                       "componentwise q <= p on every stratum" if ok
                       else "violating contact vector recorded"))
    if not ok:
        certificates["witness_below"] = _witness_json(verdict.witness_below)
        return TheoremReport(Conclusion.INCONCLUSIVE, tuple(hypotheses),
                             certificates)

    order = leq_order(mu_x, mu_y)
    certificates["measure_order"] = order
    ok = order in (Order.LESS, Order.EQUAL)
    hypotheses.append(("measures_comparable", "pass" if ok else "fail",
                       f"leq_order returned {order}"))
    if not ok:
        certificates["contradiction"] = (
            "source measure exceeds target measure although the Jacobian "
            "is bounded below; the supplied data is inconsistent")
        return TheoremReport(Conclusion.INCONCLUSIVE, tuple(hypotheses),
                             certificates)
    return TheoremReport(Conclusion.MEASURE_INEQUALITY, tuple(hypotheses),
                         certificates)


def inner_lipschitz_probe(entries, arcs) -> BoundednessVerdict:
    """Sample the entrywise Jacobian bound along supplied test arcs.

    ``entries`` are the chart Jacobian matrix entries, polynomials or
    (numerator, denominator) pairs.  A probed arc with negative matrix
    order disproves boundedness above and is returned as the witness.
    All probes nonnegative is evidence only, not a proof: this is a
    sampling semi-decision, and arcs must avoid the loci where the
    entries are undefined.  The below flag is not probed here; the
    entrywise criterion only concerns the upper bound.
    """
    arcs = list(arcs)
    if not arcs:
        raise ValueError("need at least one probe arc")
    for idx, arc in enumerate(arcs):
        order = matrix_entry_orders(entries, arc)
        # an inexact result is a bound >= 1, so only exact orders disprove
        if order.exact and order.value < 0:
            return BoundednessVerdict(
                bounded_above=False, bounded_below=True,
                witness_above=("arc", idx))
    return BoundednessVerdict(bounded_above=True, bounded_below=True)
