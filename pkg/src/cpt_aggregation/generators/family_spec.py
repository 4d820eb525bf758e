"""Family specifications and generator dispatch."""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from cpt_aggregation.errors import ParameterError
from cpt_aggregation.generators.families import gen_copy_parent, gen_symmetric_disjoint, gen_tkn
from cpt_aggregation.generators.random_instances import MAX_SEED, gen_random
from cpt_aggregation.model.cpt import MAX_ATTRIBUTES
from cpt_aggregation.model.instance import Instance

FamilyTag = Literal["tkn", "symmetric-disjoint", "copy-parent", "random"]
FAMILIES = ("tkn", "symmetric-disjoint", "copy-parent", "random")


class FamilySpec(BaseModel):
    """Parameters of one generated instance."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    family: FamilyTag
    n: int = Field(..., ge=1, le=MAX_ATTRIBUTES, description="Attribute count")
    k: Optional[int] = Field(None, description="Parent-set size (tkn)")
    t: Optional[int] = Field(None, ge=1, description="Tuple size (symmetric-disjoint, random)")
    max_parents: Optional[int] = Field(None, ge=0, description="Parent-set size bound (random)")
    seed: Optional[int] = Field(None, ge=0, le=MAX_SEED, description="64-bit seed")
    parent_size: int = Field(1, ge=1, description="Parents per CPT (symmetric-disjoint)")

    @model_validator(mode="after")
    def validate_family_parameters(self):
        """Each family gets the parameters it needs, within its bounds."""
        if self.family == "tkn":
            if self.k is None:
                raise ValueError("family 'tkn' requires k")
            if self.n < 3 or not 2 <= self.k <= self.n - 1:
                raise ValueError(f"family 'tkn' requires n >= 3 and 2 <= k <= n-1, got n={self.n}, k={self.k}")
        elif self.family == "symmetric-disjoint":
            if self.t is None:
                raise ValueError("family 'symmetric-disjoint' requires t")
            if self.t < 3 or self.t * self.parent_size > self.n - 1:
                raise ValueError(
                    f"family 'symmetric-disjoint' requires 3 <= t and t*parent_size <= n-1, "
                    f"got n={self.n}, t={self.t}, parent_size={self.parent_size}"
                )
        elif self.family == "copy-parent":
            if self.n < 4:
                raise ValueError(f"family 'copy-parent' requires n >= 4, got n={self.n}")
        elif self.family == "random":
            if self.t is None or self.max_parents is None:
                raise ValueError("family 'random' requires t and max_parents")
            if self.n < 2 or self.max_parents > self.n - 1:
                raise ValueError(
                    f"family 'random' requires n >= 2 and max_parents <= n-1, "
                    f"got n={self.n}, max_parents={self.max_parents}"
                )
        return self

    def label(self) -> str:
        parts = [self.family, f"n={self.n}"]
        for name in ("k", "t", "max_parents", "seed"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value}")
        if self.parent_size != 1:
            parts.append(f"parent_size={self.parent_size}")
        return " ".join(parts)


def make_family_spec(**fields) -> FamilySpec:
    """Validate family parameters.

    Raises:
        ParameterError: If the parameters do not describe a valid family member
    """
    try:
        return FamilySpec(**fields)
    except ValidationError as e:
        first = e.errors()[0]
        message = str(first.get("msg", e)).removeprefix("Value error, ")
        location = ".".join(str(part) for part in first.get("loc", ()))
        raise ParameterError(f"{location}: {message}" if location else message, original_error=e) from e


def generate_family(spec: FamilySpec) -> Instance:
    """Generate the instance a FamilySpec describes."""
    if spec.family == "tkn":
        return gen_tkn(spec.n, spec.k)
    if spec.family == "symmetric-disjoint":
        return gen_symmetric_disjoint(spec.n, spec.t, spec.seed, spec.parent_size)
    if spec.family == "copy-parent":
        return gen_copy_parent(spec.n)
    return gen_random(spec.n, spec.t, spec.max_parents, 0 if spec.seed is None else spec.seed)
