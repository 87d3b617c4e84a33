"""
Groups of order p^7 with derived subgroup elementary abelian of order p^4: five of class 3
and two of class 4, on generators α1..α6, γ.
"""

from typing import Dict, List, Tuple

from catalog.base import BaseCatalogEntry, Params
from pgc.presentation import PcPresentation, from_relations

LABELS = ["α1", "α2", "α3", "α4", "α5", "α6", "γ"]

Relations = Dict[Tuple[str, str], list]


def _relations(pairs: List[Tuple[str, str, str]]) -> Relations:
    return {(x, y): [(z, 1)] for x, y, z in pairs}


class _OrderP7(BaseCatalogEntry):
    relations: List[Tuple[str, str, str]] = []
    alpha1_power: bool = False
    constraints = ["p odd"]

    def check(self, params: Params) -> List[str]:
        return [] if params["p"] > 2 else ["p odd"]

    def build(self, params: Params) -> PcPresentation:
        powers = {"α1": [("γ", 1)]} if self.alpha1_power else None
        return from_relations(params["p"], LABELS, commutators=_relations(self.relations), powers=powers)


class Class3First(_OrderP7):
    name = "class3_p7_1"
    description = "Class 3, |Z(G)| = p, K(G) = γ2(G)"
    reference = "class-3 examples of order p^7, first group"
    relations = [
        ("α2", "α1", "α4"),
        ("α3", "α1", "α5"),
        ("α3", "α2", "α6"),
        ("α4", "α2", "γ"),
        ("α5", "α2", "γ"),
        ("α5", "α3", "γ"),
        ("α6", "α1", "γ"),
    ]
    alpha1_power = True

    def claims(self, params: Params) -> dict:
        return {"order_log": 7, "nilpotency_class": 3, "center_log": 1, "derived_log": 4, "gamma3_log": 1, "equal": True}


class Class3Second(_OrderP7):
    name = "class3_p7_2"
    description = "Class 3, |Z(G)| = |γ3(G)| = p^2, K(G) = γ2(G)"
    reference = "class-3 examples of order p^7, second group"
    relations = [
        ("α2", "α1", "α4"),
        ("α3", "α1", "α5"),
        ("α4", "α1", "α6"),
        ("α5", "α1", "γ"),
    ]

    def claims(self, params: Params) -> dict:
        return {"order_log": 7, "nilpotency_class": 3, "center_log": 2, "derived_log": 4, "gamma3_log": 2, "equal": True}


class Class3Third(_OrderP7):
    name = "class3_p7_3"
    description = "Class 3, |Z(G)| = p^2, |γ3(G)| = p, K(G) = γ2(G)"
    reference = "class-3 examples of order p^7, third group"
    relations = [
        ("α2", "α1", "α4"),
        ("α3", "α1", "α5"),
        ("α3", "α2", "α6"),
        ("α4", "α2", "γ"),
        ("α5", "α3", "γ"),
    ]
    alpha1_power = True

    def claims(self, params: Params) -> dict:
        return {"order_log": 7, "nilpotency_class": 3, "center_log": 2, "derived_log": 4, "gamma3_log": 1, "equal": True}


class Class3Fourth(_OrderP7):
    name = "class3_p7_4"
    description = "Class 3, |Z(G)| = p^3, |γ3(G)| = p, K(G) != γ2(G)"
    reference = "class-3 examples of order p^7, fourth group"
    relations = [
        ("α2", "α1", "α4"),
        ("α3", "α1", "α5"),
        ("α3", "α2", "α6"),
        ("α4", "α1", "γ"),
    ]

    def claims(self, params: Params) -> dict:
        return {"order_log": 7, "nilpotency_class": 3, "center_log": 3, "derived_log": 4, "gamma3_log": 1, "equal": False}


class Class3Fifth(_OrderP7):
    name = "class3_p7_5"
    description = "Class 3, |Z(G)| = p^3, |γ3(G)| = p^2, K(G) != γ2(G)"
    reference = "class-3 examples of order p^7, fifth group"
    relations = [
        ("α2", "α1", "α4"),
        ("α3", "α1", "α5"),
        ("α4", "α1", "α6"),
        ("α4", "α2", "γ"),
    ]

    def claims(self, params: Params) -> dict:
        return {"order_log": 7, "nilpotency_class": 3, "center_log": 3, "derived_log": 4, "gamma3_log": 2, "equal": False}


class Class4First(_OrderP7):
    name = "class4_p7_1"
    description = "Class 4, |Z(G)| = p, K(G) = γ2(G) (as printed the relations are inconsistent)"
    reference = "class-4 examples of order p^7, first group"
    relations = [
        ("α2", "α1", "α4"),
        ("α3", "α1", "γ"),
        ("α4", "α1", "α5"),
        ("α4", "α2", "α6"),
        ("α4", "α3", "γ"),
        ("α5", "α1", "γ"),
        ("α6", "α2", "γ"),
    ]
    known_inconsistent = True
    notes = ["fails the consistency check at the overlap g3 (g2 g1) for every odd p; shipped unpatched"]


class Class4Second(_OrderP7):
    name = "class4_p7_2"
    description = "Class 4, |Z(G)| = p^2, K(G) = γ2(G)"
    reference = "class-4 examples of order p^7, second group"
    relations = [
        ("α2", "α1", "α4"),
        ("α3", "α2", "γ"),
        ("α4", "α1", "α5"),
        ("α4", "α2", "α6"),
        ("α5", "α1", "γ"),
    ]
    alpha1_power = True
    constraints = ["p >= 5"]
    notes = ["at p = 3 the relation α1^p = γ fails the power overlap (α2, α1)"]

    def check(self, params: Params) -> List[str]:
        return [] if params["p"] >= 5 else ["p >= 5"]

    def claims(self, params: Params) -> dict:
        return {"order_log": 7, "nilpotency_class": 4, "center_log": 2, "derived_log": 4, "equal": True}
