"""
The three isoclinism families of order p^6 whose derived subgroup is elementary abelian of
order p^4: φ23, φ40 and φ41. All have nilpotency class 4 and exist here for p >= 5.
"""

from typing import List

from catalog.base import BaseCatalogEntry, Params
from pgc.fp_linear import inv_mod, smallest_nonresidue
from pgc.presentation import PcPresentation, from_relations

PHI_LABELS = ["α1", "α2", "β", "β1", "β2", "γ"]


def _p_at_least_5(params: Params) -> List[str]:
    return [] if params["p"] >= 5 else ["p >= 5"]


class Phi23(BaseCatalogEntry):
    name = "phi23"
    description = "Representative of φ23: |Z(G)| = p^2 and K(G) != γ2(G), witness α4·γ"
    reference = "isoclinism family φ23 of order p^6"
    constraints = ["p >= 5"]

    def check(self, params: Params) -> List[str]:
        return _p_at_least_5(params)

    def build(self, params: Params) -> PcPresentation:
        labels = ["α", "α1", "α2", "α3", "α4", "γ"]
        commutators = {
            ("α1", "α"): [("α2", 1)],
            ("α2", "α"): [("α3", 1)],
            ("α3", "α"): [("α4", 1)],
            ("α2", "α1"): [("γ", -1)],
        }
        return from_relations(params["p"], labels, commutators=commutators, powers={"α": [("γ", 1)]})

    def claims(self, params: Params) -> dict:
        return {"order_log": 6, "nilpotency_class": 4, "center_log": 2, "derived_log": 4, "equal": False}


class _CoveredFamily(BaseCatalogEntry):
    """φ40 and φ41 share γ4(G) = <γ> and the same covering elements modulo γ4(G)."""

    constraints = ["p >= 5"]

    def check(self, params: Params) -> List[str]:
        return _p_at_least_5(params)

    def claims(self, params: Params) -> dict:
        return {"order_log": 6, "nilpotency_class": 4, "center_log": 1, "derived_log": 4, "equal": True}

    def covering_family(self, params: Params):
        p = params["p"]
        half = inv_mod(2, p)
        xs = []
        # α2^(k/j) α1 β^((1-i)/2) depends on k, j only through k/j
        for m in range(p):
            for i in range(p):
                xs.append([("α2", m), ("α1", 1), ("β", (1 - i) * half % p)])
        for i in range(p):
            xs.append([("α2", 1), ("β", -(1 + i) * half % p)])
        return xs, [[("γ", 1)]]


class Phi40(_CoveredFamily):
    name = "phi40"
    description = "Representative of φ40: |Z(G)| = p and K(G) = γ2(G)"
    reference = "isoclinism family φ40 of order p^6"
    notes = ["the stray relation α^p = 1 names no generator and is ignored"]

    def build(self, params: Params) -> PcPresentation:
        commutators = {
            ("α2", "α1"): [("β", -1)],
            ("β", "α1"): [("β1", 1)],
            ("β", "α2"): [("β2", 1)],
            ("β1", "α2"): [("γ", 1)],
            ("β2", "α1"): [("γ", 1)],
        }
        return from_relations(params["p"], PHI_LABELS, commutators=commutators)


class Phi41(_CoveredFamily):
    name = "phi41"
    description = "Representative of φ41: |Z(G)| = p and K(G) = γ2(G); ν the smallest non-residue"
    reference = "isoclinism family φ41 of order p^6"
    notes = [
        "α1^p = γ is kept; the blanket α_i^p = 1 is read for α2 only",
        "the stray relation α^p = 1 names no generator and is ignored",
    ]

    def build(self, params: Params) -> PcPresentation:
        p = params["p"]
        nu = int(smallest_nonresidue(p))
        commutators = {
            ("α2", "α1"): [("β", -1)],
            ("β", "α1"): [("β1", 1)],
            ("β", "α2"): [("β2", 1)],
            ("β1", "α1"): [("γ", -1)],
            ("β2", "α2"): [("γ", nu)],
        }
        return from_relations(p, PHI_LABELS, commutators=commutators, powers={"α1": [("γ", 1)]})
