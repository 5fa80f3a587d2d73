"""Decide whether a unicyclic graph of order >= 21 has lambda_2 at least
1 - sqrt(6)/3.

The structural route: girth above 5 forces Below; otherwise the graph is
decomposed and matched against the family catalog, whose accepted
parameter regions are exactly the at-or-above-threshold instances. The
numeric lambda_2 is always computed alongside, and the verdict records
whether the two routes agree.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .config import DEFAULT_TOLERANCES, Tolerances
from .families import FamilyMatch, match_desc
from .graphs import Graph, girth_and_cycle
from .spectra import lambda2
from .unicyclic import decompose_unicyclic

MIN_CLASSIFIABLE_ORDER = 21


def threshold() -> float:
    """The classification boundary 1 - sqrt(6)/3."""
    return 1.0 - math.sqrt(6.0) / 3.0


@dataclass(frozen=True)
class Verdict:
    outcome: str  # "above" | "equal" | "below"
    family: str | None
    params: dict | None
    lambda2: float
    threshold: float
    agreement: bool
    notes: tuple[str, ...] = ()

    def to_json(self) -> str:
        payload = {
            "outcome": self.outcome,
            "family": self.family,
            "params": _jsonable(self.params),
            "lambda2": float(f"{self.lambda2:.17g}"),
            "threshold": float(f"{self.threshold:.17g}"),
            "agreement": self.agreement,
        }
        if self.notes:
            payload["notes"] = list(self.notes)
        return json.dumps(payload)


def _jsonable(params: dict | None):
    if params is None:
        return None
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in params.items()}


def _require_classifiable(g: Graph) -> int:
    if g.n < MIN_CLASSIFIABLE_ORDER:
        raise ValueError(
            f"classification needs order >= {MIN_CLASSIFIABLE_ORDER}, got n = {g.n}"
        )
    girth, _ = girth_and_cycle(g)  # raises when not unicyclic
    return girth


def girth_prefilter(g: Graph) -> bool:
    """True iff the girth leaves the threshold reachable (girth <= 5)."""
    return _require_classifiable(g) <= 5


def match_structure(g: Graph) -> FamilyMatch | None:
    """Best structural match of the graph against the catalog.

    Accepting matches win over rejected ones; equality wins over above;
    ties break on tag then parameters. None when nothing in the catalog
    has this shape.
    """
    if _require_classifiable(g) > 5:
        return None
    matches = match_desc(decompose_unicyclic(g))
    return matches[0] if matches else None


def numeric_outcome(lam2: float, tol: Tolerances = DEFAULT_TOLERANCES) -> str:
    t = threshold()
    if abs(lam2 - t) <= tol.equality_band:
        return "equal"
    return "above" if lam2 > t else "below"


def classify(g: Graph, tol: Tolerances = DEFAULT_TOLERANCES) -> Verdict:
    girth = _require_classifiable(g)
    lam2 = lambda2(g)
    notes: list[str] = []
    family: str | None = None
    params: dict | None = None

    if girth > 5:
        outcome = "below"
        notes.append(f"girth {girth} > 5 forces lambda2 below the threshold")
    else:
        matches = match_desc(decompose_unicyclic(g))
        accepted = [m for m in matches if m.outcome is not None]
        if accepted:
            best = accepted[0]
            outcome = best.outcome
            family, params = best.tag, best.params
            notes.extend(best.notes)
        else:
            outcome = "below"
            if matches:
                best = matches[0]
                family, params = best.tag, best.params
                notes.extend(best.notes)
                notes.append(
                    f"shape matches {best.tag} but parameters fall outside the accepted ranges"
                )
            else:
                notes.append("no catalog family has this shape")

    agreement = outcome == numeric_outcome(lam2, tol)
    return Verdict(
        outcome=outcome,
        family=family,
        params=params,
        lambda2=lam2,
        threshold=threshold(),
        agreement=agreement,
        notes=tuple(notes),
    )
