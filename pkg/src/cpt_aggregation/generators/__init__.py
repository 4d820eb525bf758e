"""Instance families and seeded random instances."""

from cpt_aggregation.generators.families import gen_copy_parent, gen_symmetric_disjoint, gen_tkn
from cpt_aggregation.generators.family_spec import FAMILIES, FamilySpec, generate_family, make_family_spec
from cpt_aggregation.generators.random_instances import gen_random

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "gen_copy_parent",
    "gen_random",
    "gen_symmetric_disjoint",
    "gen_tkn",
    "generate_family",
    "make_family_spec",
]
