"""
Base abstract class for catalog entries.

Every named group the tool can build is a class inheriting from BaseCatalogEntry, declaring
its parameter schema and constraints and implementing build(). Entries are discovered
automatically by catalog/__init__.py.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Tuple

from pgc.errors import CatalogError, FieldError
from pgc.fp_linear import check_prime
from pgc.presentation import PcPresentation
from pgc.schemas import CatalogEntryModel, ParameterSpec

Params = Dict[str, Any]

P_PARAMETER = ParameterSpec(name="p", type="int", default=None, description="prime")


class BaseCatalogEntry(ABC):
    """
    Abstract base class for all catalog entries.

    Attributes:
        name: Catalog name used on the command line (e.g. "phi23")
        description: One-line description of the group
        reference: Where the presentation comes from
        parameters: Parameter schema; "p" is always first
        constraints: Human-readable validity constraints (e.g. "p >= 5")
        notes: Known typos and reading decisions
        known_inconsistent: The presentation as printed fails the consistency check
    """

    name: str = ""
    description: str = ""
    reference: str = ""
    parameters: List[ParameterSpec] = [P_PARAMETER]
    constraints: List[str] = []
    notes: List[str] = []
    known_inconsistent: bool = False

    def resolve(self, params: Params) -> Params:
        """
        Fill defaults and coerce values to the declared types.

        Raises:
            CatalogError: unknown parameter, missing required parameter or bad value
        """
        known = {spec.name: spec for spec in self.parameters}
        unknown = sorted(k for k, v in params.items() if k not in known and v is not None)
        if unknown:
            raise CatalogError(f"{self.name}: unknown parameter(s) {', '.join(unknown)}")
        resolved: Params = {}
        for spec in self.parameters:
            value = params.get(spec.name)
            if value is None:
                value = spec.default
            if value is None:
                value = self.default(spec.name, resolved)
            if value is None:
                raise CatalogError(f"{self.name}: parameter {spec.name!r} is required")
            try:
                resolved[spec.name] = int(value) if spec.type == "int" else str(value)
            except (TypeError, ValueError):
                raise CatalogError(f"{self.name}: {spec.name}={value!r} is not an {spec.type}") from None
        return resolved

    def fixed_prime(self) -> Optional[int]:
        """The only prime the entry exists for, if any."""
        return None

    def default(self, name: str, resolved: Params) -> Any:
        """Computed default for a parameter declared with default None; `resolved` holds the earlier ones."""
        return self.fixed_prime() if name == "p" else None

    def validate(self, params: Params) -> Params:
        """
        Resolve parameters and check every constraint.

        Raises:
            CatalogError: naming the violated constraint
        """
        resolved = self.resolve(params)
        try:
            check_prime(resolved["p"])
        except FieldError as e:
            raise CatalogError(f"{self.name}: {e}") from None
        fixed = self.fixed_prime()
        if fixed is not None and resolved["p"] != fixed:
            raise CatalogError(f"{self.name}: constraint violated: p = {fixed}")
        for message in self.check(resolved):
            raise CatalogError(f"{self.name}: constraint violated: {message}")
        return resolved

    def check(self, params: Params) -> List[str]:
        """Constraint violations for resolved parameters; empty when valid."""
        return []

    def variants(self, p: int) -> List[Params]:
        """Parameter sets swept by `pgc verify` at the prime p."""
        return [{"p": p}]

    def valid_for(self, p: int) -> bool:
        try:
            self.validate({"p": p})
        except CatalogError:
            return False
        return True

    @abstractmethod
    def build(self, params: Params) -> PcPresentation:
        """
        Build the presentation for validated parameters.

        Args:
            params: Output of validate()

        Returns:
            The presentation, not yet checked for consistency
        """
        pass

    def claims(self, params: Params) -> Dict[str, Any]:
        """
        Invariants the source states for this group, keyed by
        order_log, nilpotency_class, center_log, derived_log, equal, conjugate_type.
        """
        return {}

    def covering_family(self, params: Params) -> Optional[Tuple[list, list]]:
        """
        Elements x_1..x_m and generators of H with γ_2 = ⋃ [x_i, G] predicted through G/H.

        Returns:
            (list of words, list of words) or None when the entry has no such family
        """
        return None

    def to_model(self) -> CatalogEntryModel:
        return CatalogEntryModel(
            name=self.name,
            description=self.description,
            reference=self.reference,
            parameters=list(self.parameters),
            constraints=list(self.constraints),
            notes=list(self.notes),
            known_inconsistent=self.known_inconsistent,
        )

    def __repr__(self):
        return f"<{self.__class__.__name__} {self.name}>"
