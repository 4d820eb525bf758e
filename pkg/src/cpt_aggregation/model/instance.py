"""Problem instances (tuples of input CPTs) and their JSON serialization."""

import json
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, Tuple, Union

from cpt_aggregation.errors import InstanceFormatError, UniverseMismatchError
from cpt_aggregation.model.cpt import MAX_ATTRIBUTES, AttributeSet, Cpt
from cpt_aggregation.model.schema import cpt_from_document, load_json, validate_instance_document

logger = logging.getLogger(__name__)

_SEPARATORS = (",", ":")


@dataclass(frozen=True)
class Instance:
    """A tuple T = (N_1, ..., N_t) of CPTs over one attribute universe."""

    n: int
    cpts: Tuple[Cpt, ...]

    def __post_init__(self):
        object.__setattr__(self, "cpts", tuple(self.cpts))
        if not 1 <= self.n <= MAX_ATTRIBUTES:
            raise InstanceFormatError(f"Attribute count n must be in 1..{MAX_ATTRIBUTES}, got {self.n}")
        if not self.cpts:
            raise InstanceFormatError("An instance needs at least one CPT (t >= 1)")
        for position, cpt in enumerate(self.cpts):
            if cpt.n != self.n:
                raise UniverseMismatchError(f"CPT {position} has n={cpt.n}, instance has n={self.n}")

    @property
    def t(self) -> int:
        return len(self.cpts)

    @property
    def width(self) -> int:
        """Number of potential parents (n - 1)."""
        return self.n - 1

    @property
    def universe(self) -> AttributeSet:
        return AttributeSet.full(self.n - 1)

    @property
    def parent_union(self) -> AttributeSet:
        """Union of all input parent sets."""
        bits = 0
        for cpt in self.cpts:
            bits |= cpt.parents.bits
        return AttributeSet(bits, self.n - 1)

    @property
    def rule_count(self) -> int:
        """Total number of rules over all input CPTs."""
        return sum(cpt.size for cpt in self.cpts)

    def __len__(self) -> int:
        return len(self.cpts)

    def __iter__(self) -> Iterator[Cpt]:
        return iter(self.cpts)

    def __getitem__(self, index: int) -> Cpt:
        return self.cpts[index]

    def to_dict(self) -> Dict:
        return {"n": self.n, "cpts": [cpt.to_dict() for cpt in self.cpts]}


def parse_instance(text: Union[bytes, str]) -> Instance:
    """Parse and validate an instance document.

    Args:
        text: UTF-8 JSON of the form ``{"n": int, "cpts": [CptObj, ...]}``

    Returns:
        Validated Instance

    Raises:
        InstanceFormatError: On malformed syntax, duplicate or missing contexts,
            out-of-range parents or an empty CPT list
    """
    document = validate_instance_document(load_json(text))
    instance = Instance(document.n, tuple(cpt_from_document(cpt, document.n) for cpt in document.cpts))
    logger.debug(f"Parsed instance: n={instance.n}, t={instance.t}, rules={instance.rule_count}")
    return instance


def parse_cpt(text: Union[bytes, str], n: int) -> Cpt:
    """Parse a single CptObj over an ``n``-attribute universe.

    Raises:
        InstanceFormatError: If the document is invalid for this universe
    """
    return cpt_from_document(load_json(text), n)


def serialize_cpt(cpt: Cpt) -> bytes:
    """Canonical JSON of a CPT: ascending parents, contexts in ascending index order."""
    return json.dumps(cpt.to_dict(), separators=_SEPARATORS).encode("utf-8")


def serialize_instance(instance: Instance) -> bytes:
    """Canonical JSON of an instance."""
    return json.dumps(instance.to_dict(), separators=_SEPARATORS).encode("utf-8")
