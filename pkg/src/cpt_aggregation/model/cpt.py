"""Attribute sets, contexts and complete conditional preference tables.

A CPT here is always the table for the fixed target attribute (the last attribute of
an ``n``-attribute universe). Its potential parents are the attributes ``0..n-2``.

Context indices are read most-significant-bit first: the smallest parent attribute is
the leading bit, so ascending index order equals lexicographic order of the context
strings (``"00", "01", "10", "11"`` for two parents).
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Tuple

import numpy as np

from cpt_aggregation.errors import InstanceFormatError, UniverseMismatchError

logger = logging.getLogger(__name__)

# Hard cap on the attribute count; 2^(n-1) swap counts times t must stay in 64 bits.
MAX_ATTRIBUTES = 30

PREFER_ZERO = 0  # rule "gamma: 0 > 1"
PREFER_ONE = 1  # rule "gamma: 1 > 0"
RULE_LABELS: Dict[int, str] = {PREFER_ZERO: "0>1", PREFER_ONE: "1>0"}
RULE_VALUES: Dict[str, int] = {label: value for value, label in RULE_LABELS.items()}


def popcount(bits: int) -> int:
    """Number of set bits in a non-negative integer."""
    return bin(bits).count("1")


@dataclass(frozen=True)
class AttributeSet:
    """A set of potential parent attributes stored as a bitmask.

    Bit ``i`` of ``bits`` stands for attribute ``i``. ``width`` is the number of
    potential parents of the owning universe (``n - 1``).
    """

    bits: int
    width: int

    def __post_init__(self):
        if self.width < 0:
            raise InstanceFormatError(f"Attribute universe width must be non-negative, got {self.width}")
        if self.bits < 0 or self.bits >> self.width:
            raise InstanceFormatError(
                f"Attribute set {self.bits:#b} has members outside a universe of {self.width} potential parents"
            )

    @classmethod
    def from_indices(cls, indices: Iterable[int], width: int) -> "AttributeSet":
        """Build a set from attribute indices.

        Args:
            indices: 0-based attribute indices
            width: Number of potential parents in the universe

        Returns:
            AttributeSet containing the given attributes

        Raises:
            InstanceFormatError: If an index is outside ``0..width-1``
        """
        bits = 0
        for index in indices:
            if not 0 <= index < width:
                raise InstanceFormatError(f"Parent index {index} out of range for {width} potential parents")
            bits |= 1 << index
        return cls(bits, width)

    @classmethod
    def empty(cls, width: int) -> "AttributeSet":
        return cls(0, width)

    @classmethod
    def full(cls, width: int) -> "AttributeSet":
        return cls((1 << width) - 1, width)

    @property
    def indices(self) -> Tuple[int, ...]:
        """Member attributes in ascending order."""
        return tuple(i for i in range(self.width) if self.bits >> i & 1)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and 0 <= index < self.width and bool(self.bits >> index & 1)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.indices) + "}"

    def _require_same_universe(self, other: "AttributeSet") -> None:
        if other.width != self.width:
            raise UniverseMismatchError(
                f"Attribute sets over different universes: width {self.width} vs {other.width}"
            )

    def union(self, other: "AttributeSet") -> "AttributeSet":
        self._require_same_universe(other)
        return AttributeSet(self.bits | other.bits, self.width)

    def intersection(self, other: "AttributeSet") -> "AttributeSet":
        self._require_same_universe(other)
        return AttributeSet(self.bits & other.bits, self.width)

    def difference(self, other: "AttributeSet") -> "AttributeSet":
        self._require_same_universe(other)
        return AttributeSet(self.bits & ~other.bits, self.width)

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def issubset(self, other: "AttributeSet") -> bool:
        self._require_same_universe(other)
        return self.bits & ~other.bits == 0

    def subsets(self) -> List["AttributeSet"]:
        """All subsets, ordered by (cardinality, bitmask)."""
        masks = []
        sub = self.bits
        while True:
            masks.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & self.bits
        masks.sort(key=lambda m: (popcount(m), m))
        return [AttributeSet(m, self.width) for m in masks]


@dataclass(frozen=True)
class Context:
    """An instantiation of a parent set.

    ``assignment[i]`` is the value of the i-th smallest attribute of ``parents``.
    """

    parents: AttributeSet
    assignment: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(int(v) for v in self.assignment))
        if len(self.assignment) != len(self.parents):
            raise InstanceFormatError(
                f"Context assigns {len(self.assignment)} values to {len(self.parents)} parents"
            )
        if any(v not in (0, 1) for v in self.assignment):
            raise InstanceFormatError(f"Context values must be 0 or 1, got {self.assignment}")

    @classmethod
    def from_index(cls, parents: AttributeSet, index: int) -> "Context":
        k = len(parents)
        if not 0 <= index < 1 << k:
            raise InstanceFormatError(f"Context index {index} out of range for {k} parents")
        return cls(parents, tuple(index >> (k - 1 - j) & 1 for j in range(k)))

    @classmethod
    def from_label(cls, parents: AttributeSet, label: str) -> "Context":
        if len(label) != len(parents) or any(ch not in "01" for ch in label):
            raise InstanceFormatError(f"Context '{label}' is not a bit string of length {len(parents)}")
        return cls(parents, tuple(int(ch) for ch in label))

    @property
    def index(self) -> int:
        value = 0
        for bit in self.assignment:
            value = value << 1 | bit
        return value

    @property
    def label(self) -> str:
        return "".join(str(bit) for bit in self.assignment)

    def value_of(self, attribute: int) -> int:
        return self.assignment[self.parents.indices.index(attribute)]

    def to_mask(self) -> int:
        """Universe bitmask with bit ``a`` set iff attribute ``a`` is assigned 1."""
        return context_mask(self.index, self.parents)

    def is_consistent_with(self, other: "Context") -> bool:
        """True iff both contexts agree on every attribute they share."""
        shared = self.parents.intersection(other.parents).bits
        return (self.to_mask() ^ other.to_mask()) & shared == 0


def enumerate_contexts(parents: AttributeSet) -> Iterator[Context]:
    """Yield every instantiation of ``parents`` in ascending index order.

    The empty parent set has exactly one (empty) context.
    """
    for index in range(1 << len(parents)):
        yield Context.from_index(parents, index)


def context_index(mask: int, parents: AttributeSet) -> int:
    """Index of the context of ``parents`` that a universe assignment ``mask`` falls into."""
    index = 0
    for attribute in parents.indices:
        index = index << 1 | (mask >> attribute & 1)
    return index


def context_mask(index: int, parents: AttributeSet) -> int:
    """Universe bitmask of the context ``index`` of ``parents``."""
    members = parents.indices
    k = len(members)
    mask = 0
    for j, attribute in enumerate(members):
        if index >> (k - 1 - j) & 1:
            mask |= 1 << attribute
    return mask


# Projections over larger source sets are rebuilt on every call instead of being cached.
CACHED_PROJECTION_BITS = 12


def _build_projection(source_bits: int, target_bits: int) -> np.ndarray:
    source = [i for i in range(source_bits.bit_length()) if source_bits >> i & 1]
    k = len(source)
    position = np.arange(1 << k, dtype=np.int64)
    projected = np.zeros(1 << k, dtype=np.int64)
    for j, attribute in enumerate(source):
        if target_bits >> attribute & 1:
            projected = (projected << 1) | ((position >> (k - 1 - j)) & 1)
    projected.setflags(write=False)
    return projected


_cached_projection = lru_cache(maxsize=256)(_build_projection)


def project(source: AttributeSet, target: AttributeSet) -> np.ndarray:
    """Restrict every context of ``source`` to ``target``.

    Args:
        source: Parent set whose contexts are enumerated
        target: Subset of ``source``

    Returns:
        Read-only array; entry ``i`` is the index of the restriction of context ``i``
        of ``source`` to ``target``

    Raises:
        ValueError: If ``target`` is not a subset of ``source``
    """
    if not target.issubset(source):
        raise ValueError(f"{target} is not a subset of {source}")
    if len(source) <= CACHED_PROJECTION_BITS:
        return _cached_projection(source.bits, target.bits)
    return _build_projection(source.bits, target.bits)


@dataclass(frozen=True)
class Cpt:
    """A complete CPT for the target attribute.

    ``prefs[i]`` is the preference for context ``i`` of ``parents``:
    1 encodes ``1>0`` and 0 encodes ``0>1``.
    """

    n: int
    parents: AttributeSet
    prefs: Tuple[int, ...]
    _votes: np.ndarray = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ATTRIBUTES:
            raise InstanceFormatError(f"Attribute count n must be in 1..{MAX_ATTRIBUTES}, got {self.n}")
        if self.parents.width != self.n - 1:
            raise UniverseMismatchError(
                f"Parent set over {self.parents.width} attributes does not match n={self.n}"
            )
        prefs = tuple(int(p) for p in self.prefs)
        if len(prefs) != 1 << len(self.parents):
            raise InstanceFormatError(
                f"Incomplete CPT: {len(prefs)} rules given, {1 << len(self.parents)} required"
            )
        if any(p not in (PREFER_ZERO, PREFER_ONE) for p in prefs):
            raise InstanceFormatError("CPT preferences must be 0 (0>1) or 1 (1>0)")
        object.__setattr__(self, "prefs", prefs)
        votes = np.array(prefs, dtype=np.uint8)
        votes.setflags(write=False)
        object.__setattr__(self, "_votes", votes)

    @classmethod
    def separable(cls, n: int, preference: int) -> "Cpt":
        """CPT with no parents and one unconditional rule."""
        return cls(n, AttributeSet.empty(n - 1), (preference,))

    @classmethod
    def from_indices(cls, n: int, parents: Iterable[int], prefs: Iterable[int]) -> "Cpt":
        return cls(n, AttributeSet.from_indices(parents, n - 1), tuple(prefs))

    @property
    def votes(self) -> np.ndarray:
        """Preferences as a read-only uint8 array indexed by context."""
        return self._votes

    @property
    def size(self) -> int:
        """Number of rules."""
        return len(self.prefs)

    def vote(self, mask: int) -> int:
        """Vote on the swap whose non-target attributes are given by ``mask``."""
        return self.prefs[context_index(mask, self.parents)]

    def rule_for(self, context: Context) -> int:
        if context.parents != self.parents:
            raise ValueError(f"Context over {context.parents} does not match parents {self.parents}")
        return self.prefs[context.index]

    def rules(self) -> Iterator[Tuple[Context, int]]:
        """Yield ``(context, preference)`` in ascending context order."""
        for context in enumerate_contexts(self.parents):
            yield context, self.prefs[context.index]

    def to_dict(self) -> Dict:
        """Convert to the CptObj document shape.

        Returns:
            Dictionary with ascending ``parents`` and ``rules`` in context order
        """
        return {
            "parents": list(self.parents.indices),
            "rules": {context.label: RULE_LABELS[pref] for context, pref in self.rules()},
        }

    @classmethod
    def from_dict(cls, data: Dict, n: int) -> "Cpt":
        """Create a CPT from a CptObj document over an ``n``-attribute universe.

        Raises:
            InstanceFormatError: If the document is invalid or incomplete
        """
        from cpt_aggregation.model.schema import cpt_from_document

        return cpt_from_document(data, n)

    def __str__(self) -> str:
        rules = ", ".join(f"{c.label or 'ε'}:{RULE_LABELS[p]}" for c, p in self.rules())
        return f"Cpt(parents={self.parents}, {rules})"
