"""
Special 2-groups of order 2^9 with derived subgroup elementary abelian of order 16.

T2_9(r, s, t) is generated by v1..v5 with
    [v4, v2] = [v5, v1] = 1,  [v1, v2] = [v3, v4]^r,  [v2, v3] = [v3, v4]^s,
    [v3, v1] = [v3, v4]^t,    [v3, v4] = [v3, v5],    v_i^2 = 1,
class 2 (built by pgc.constructions.t2_9). Only T2_9(0, 0, 0) has K(G) != γ2(G).
"""

from itertools import product
from typing import List

from catalog.base import P_PARAMETER, BaseCatalogEntry, Params
from pgc.constructions import central_product, extraspecial_p3, t2_9
from pgc.presentation import PcPresentation
from pgc.schemas import ParameterSpec


class _T2Family(BaseCatalogEntry):
    parameters = [
        P_PARAMETER,
        ParameterSpec(name="r", type="int", default=0, description="0 or 1"),
        ParameterSpec(name="s", type="int", default=0, description="0 or 1"),
        ParameterSpec(name="t", type="int", default=0, description="0 or 1"),
    ]
    constraints = ["p = 2", "r, s, t in {0, 1}"]

    def fixed_prime(self) -> int:
        return 2

    def check(self, params: Params) -> List[str]:
        return [f"{k} = {params[k]} is not 0 or 1" for k in ("r", "s", "t") if params[k] not in (0, 1)]

    def variants(self, p: int) -> List[Params]:
        return [{"p": p, "r": r, "s": s, "t": t} for r, s, t in product((0, 1), repeat=3)]


class T2_9(_T2Family):
    name = "T2_9"
    description = "Special 2-group of order 2^9; K(G) != γ2(G) exactly for r = s = t = 0"
    reference = "characterization of 2-groups with γ2 elementary abelian of order 16"
    notes = ["(r, s, t) = (0, 0, 0) is the group of the isoclinism case B1"]

    def build(self, params: Params) -> PcPresentation:
        return t2_9(params["r"], params["s"], params["t"])

    def claims(self, params: Params) -> dict:
        equal = (params["r"], params["s"], params["t"]) != (0, 0, 0)
        return {"order_log": 9, "nilpotency_class": 2, "center_log": 4, "derived_log": 4, "equal": equal}


class T2_9CentralQ8(_T2Family):
    name = "T2_9_central_Q8"
    description = "Central product of T2_9(r, s, t) and the quaternion group over <[v5,v4]>"
    reference = "central products of the special 2-groups of order 2^9"
    notes = ["order 2^11 with |G/Z(G)| = 2^7, outside every case of the 2-group characterization"]

    def build(self, params: Params) -> PcPresentation:
        base = t2_9(params["r"], params["s"], params["t"])
        return central_product(base, extraspecial_p3(2, "exp_p2"), {"[v5,v4]": [("c", 1)]})

    def claims(self, params: Params) -> dict:
        return {"order_log": 11, "nilpotency_class": 2, "center_log": 4, "derived_log": 4, "equal": True}
