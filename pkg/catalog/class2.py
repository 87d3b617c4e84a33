"""
Class-2 groups: Heisenberg and extraspecial groups, relatively free groups and their
quotients of order p^8, and a central product of order p^10.
"""

from typing import List

from catalog.base import P_PARAMETER, BaseCatalogEntry, Params
from pgc.constructions import (
    central_product,
    central_quotient,
    elementary_abelian,
    extraspecial_p3,
    free_class2,
    heisenberg,
)
from pgc.errors import FieldError
from pgc.fp_linear import is_quadratic_residue, smallest_nonresidue
from pgc.presentation import PcPresentation, from_relations
from pgc.schemas import ParameterSpec

R_PARAMETER = ParameterSpec(
    name="r",
    type="int",
    default=None,
    description="quadratic non-residue mod p (default: the smallest one)",
)


def _odd_prime(params: Params) -> List[str]:
    return [] if params["p"] > 2 else ["p odd"]


def _nonresidue_violations(params: Params) -> List[str]:
    errors = _odd_prime(params)
    if errors:
        return errors
    r = params["r"] % params["p"]
    if r == 0 or is_quadratic_residue(r, params["p"]):
        return [f"r = {params['r']} is not a quadratic non-residue mod {params['p']}"]
    return []


def f_mod_r(p: int) -> PcPresentation:
    """F/R with F free class 2 of exponent p on a, b, c, d and R = <[b,d], [a,d]>."""
    free = free_class2(4, p, labels=["a", "b", "c", "d"])
    return central_quotient(free, [[("[d,b]", 1)], [("[d,a]", 1)]])


def f_mod_r1(p: int, r: int) -> PcPresentation:
    """F/R_1 with R_1 = <[a,b][c,d], [a,c][b,d]^r>."""
    free = free_class2(4, p, labels=["a", "b", "c", "d"])
    kill = [
        [("[b,a]", -1), ("[d,c]", -1)],
        [("[c,a]", -1), ("[d,b]", -r)],
    ]
    return central_quotient(free, kill)


class Heisenberg(BaseCatalogEntry):
    name = "heisenberg"
    description = "Heisenberg group of order p^3 (dihedral of order 8 for p = 2)"
    reference = "extraspecial groups of order p^3"

    def build(self, params: Params) -> PcPresentation:
        return heisenberg(params["p"])

    def claims(self, params: Params) -> dict:
        return {"order_log": 3, "nilpotency_class": 2, "center_log": 1, "derived_log": 1, "equal": True}


class ExtraspecialP3(BaseCatalogEntry):
    name = "extraspecial_p3"
    description = "Extraspecial group of order p^3 of exponent p (exp_p) or p^2 (exp_p2)"
    reference = "extraspecial groups of order p^3"
    parameters = [
        P_PARAMETER,
        ParameterSpec(name="kind", type="str", default="exp_p", description="exp_p or exp_p2"),
    ]
    constraints = ["kind in {exp_p, exp_p2}"]

    def check(self, params: Params) -> List[str]:
        return [] if params["kind"] in ("exp_p", "exp_p2") else [f"kind {params['kind']!r} is not exp_p or exp_p2"]

    def build(self, params: Params) -> PcPresentation:
        return extraspecial_p3(params["p"], params["kind"])

    def claims(self, params: Params) -> dict:
        return {"order_log": 3, "nilpotency_class": 2, "center_log": 1, "derived_log": 1, "equal": True}


class ElementaryAbelian(BaseCatalogEntry):
    name = "elementary_abelian"
    description = "Elementary abelian group of order p^n"
    reference = "plumbing"
    parameters = [P_PARAMETER, ParameterSpec(name="n", type="int", default=3, description="rank")]
    constraints = ["n >= 1"]

    def check(self, params: Params) -> List[str]:
        return [] if params["n"] >= 1 else ["n >= 1"]

    def build(self, params: Params) -> PcPresentation:
        return elementary_abelian(params["n"], params["p"])

    def claims(self, params: Params) -> dict:
        n = params["n"]
        return {"order_log": n, "nilpotency_class": 1, "center_log": n, "derived_log": 0, "equal": True}


class FreeClass2ExpP(BaseCatalogEntry):
    name = "free_class2_expp"
    description = "Freest group of nilpotency class 2 and exponent p on n generators"
    reference = "relatively free class-2 groups, order p^(n(n+1)/2)"
    parameters = [P_PARAMETER, ParameterSpec(name="n", type="int", default=4, description="number of generators")]
    constraints = ["n >= 2"]
    notes = ["derived generators are the commutators [x_j,x_i], i < j, in lexicographic pair order"]

    def check(self, params: Params) -> List[str]:
        return [] if params["n"] >= 2 else ["n >= 2"]

    def build(self, params: Params) -> PcPresentation:
        n = params["n"]
        labels = ["a", "b", "c", "d"] if n == 4 else None
        return free_class2(n, params["p"], labels=labels)

    def claims(self, params: Params) -> dict:
        n = params["n"]
        return {
            "order_log": n * (n + 1) // 2,
            "nilpotency_class": 2,
            "center_log": n * (n - 1) // 2,
            "derived_log": n * (n - 1) // 2,
        }


class FModR(BaseCatalogEntry):
    name = "F_mod_R"
    description = "F/R of order p^8 with R = <[b,d], [a,d]>; K(G) != γ2(G)"
    reference = "class-2 examples: F free of class 2 and exponent p on a, b, c, d"
    constraints = ["p odd"]

    def check(self, params: Params) -> List[str]:
        return _odd_prime(params)

    def build(self, params: Params) -> PcPresentation:
        return f_mod_r(params["p"])

    def claims(self, params: Params) -> dict:
        return {"order_log": 8, "nilpotency_class": 2, "center_log": 4, "derived_log": 4, "equal": False}


class FModR1(BaseCatalogEntry):
    name = "F_mod_R1"
    description = "F/R1 of order p^8 with R1 = <[a,b][c,d], [a,c][b,d]^r>, conjugate type {1, p^3}"
    reference = "class-2 examples: r any non-square mod p"
    parameters = [P_PARAMETER, R_PARAMETER]
    constraints = ["p odd", "r a quadratic non-residue mod p"]

    def default(self, name: str, resolved: Params):
        if name == "r":
            try:
                return int(smallest_nonresidue(resolved["p"]))
            except FieldError:
                return 0
        return super().default(name, resolved)

    def check(self, params: Params) -> List[str]:
        return _nonresidue_violations(params)

    def build(self, params: Params) -> PcPresentation:
        return f_mod_r1(params["p"], params["r"])

    def claims(self, params: Params) -> dict:
        p = params["p"]
        return {
            "order_log": 8,
            "nilpotency_class": 2,
            "center_log": 4,
            "derived_log": 4,
            "equal": True,
            "conjugate_type": [1, p**3],
        }


class NY18Type1(FModR1):
    """Same group as F_mod_R1, written down directly on a basis of γ2."""

    name = "NY18_type_1_p3"
    description = "Class-2 group of order p^8 and conjugate type {1, p^3}, given by explicit relations"
    reference = "groups of conjugate type {1, p^3}; r any non-residue mod p"
    notes = ["isomorphic to F_mod_R1 with the same r; built without central_quotient"]

    def build(self, params: Params) -> PcPresentation:
        p, r = params["p"], params["r"]
        labels = ["a", "b", "c", "d", "[d,a]", "[c,b]", "[d,b]", "[d,c]"]
        commutators = {
            ("b", "a"): [("[d,c]", -1)],
            ("c", "a"): [("[d,b]", -r)],
            ("d", "a"): [("[d,a]", 1)],
            ("c", "b"): [("[c,b]", 1)],
            ("d", "b"): [("[d,b]", 1)],
            ("d", "c"): [("[d,c]", 1)],
        }
        return from_relations(p, labels, commutators=commutators)


class FRCentralExtraspecial(BaseCatalogEntry):
    name = "FR_central_extraspecial"
    description = "Central product of F_mod_R and the extraspecial group of order p^3 over <[d,c]>"
    reference = "class-2 examples of order p^10 with K(G) = γ2(G)"
    constraints = ["p odd"]
    notes = ["K(G) = γ2(G) although K(F_mod_R) != γ2(F_mod_R)"]

    def check(self, params: Params) -> List[str]:
        return _odd_prime(params)

    def build(self, params: Params) -> PcPresentation:
        p = params["p"]
        return central_product(f_mod_r(p), heisenberg(p), {"[d,c]": [("c", 1)]})

    def claims(self, params: Params) -> dict:
        return {"order_log": 10, "nilpotency_class": 2, "center_log": 4, "derived_log": 4, "equal": True}
