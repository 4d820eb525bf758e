"""pydantic models for the instance and CPT file formats."""

import json
from typing import Any, Dict, List, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from cpt_aggregation.errors import InstanceFormatError
from cpt_aggregation.model.cpt import MAX_ATTRIBUTES, RULE_VALUES, AttributeSet, Cpt


class CptDocument(BaseModel):
    """One CptObj: ascending parent indices plus one rule per context."""

    model_config = ConfigDict(extra="forbid", strict=True)

    parents: List[int] = Field(default_factory=list, description="Ascending 0-based parent indices")
    rules: Dict[str, str] = Field(..., description="Context bit string -> '0>1' or '1>0'")

    @field_validator("parents")
    @classmethod
    def validate_parents(cls, v):
        """Parents must be non-negative and strictly ascending."""
        if any(index < 0 for index in v):
            raise ValueError(f"Parent indices must be non-negative, got {v}")
        if any(a >= b for a, b in zip(v, v[1:])):
            raise ValueError(f"Parent indices must be strictly ascending, got {v}")
        return v

    @field_validator("rules")
    @classmethod
    def validate_rules(cls, v):
        """Every rule is one of the two orders."""
        for context, rule in v.items():
            if rule not in RULE_VALUES:
                raise ValueError(f"Rule for context '{context}' must be '0>1' or '1>0', got '{rule}'")
        return v

    @model_validator(mode="after")
    def validate_contexts(self):
        """Contexts are bit strings of the right length, and all of them are present."""
        k = len(self.parents)
        for context in self.rules:
            if len(context) != k or any(ch not in "01" for ch in context):
                raise ValueError(f"Context '{context}' is not a bit string of length {k}")
        if len(self.rules) != 1 << k:
            labels = [format(i, f"0{k}b") if k else "" for i in range(1 << k)]
            missing = [label for label in labels if label not in self.rules]
            shown = ", ".join(f"'{m}'" for m in missing[:4])
            raise ValueError(
                f"Incomplete CPT: {len(self.rules)} of {1 << k} rules given; missing contexts {shown}"
            )
        return self


class InstanceDocument(BaseModel):
    """Top-level instance file: ``{"n": int, "cpts": [CptObj, ...]}``."""

    model_config = ConfigDict(extra="forbid", strict=True)

    n: int = Field(..., ge=1, le=MAX_ATTRIBUTES, description="Attribute count including the target")
    cpts: List[CptDocument] = Field(..., min_length=1, description="Input CPTs, t >= 1")

    @model_validator(mode="after")
    def validate_parent_range(self):
        """Parent indices stay below n-1; the target is never a parent."""
        for position, cpt in enumerate(self.cpts):
            for index in cpt.parents:
                if index >= self.n - 1:
                    raise ValueError(
                        f"CPT {position}: parent index {index} out of range for n={self.n} (must be < {self.n - 1})"
                    )
        return self


def _reject_duplicate_keys(pairs: List[Tuple[str, Any]]) -> Dict[str, Any]:
    result: Dict[str, Any] = {}
    for key, value in pairs:
        if key in result:
            raise InstanceFormatError(f"Duplicate key '{key}' (duplicate context or field)")
        result[key] = value
    return result


def load_json(text: Union[bytes, str]) -> Any:
    """Decode JSON, rejecting duplicate object keys.

    Raises:
        InstanceFormatError: On undecodable or syntactically invalid input
    """
    try:
        if isinstance(text, bytes):
            text = text.decode("utf-8")
        return json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except UnicodeDecodeError as e:
        raise InstanceFormatError(f"Input is not valid UTF-8: {e}", original_error=e) from e
    except json.JSONDecodeError as e:
        raise InstanceFormatError(f"Malformed JSON: {e}", original_error=e) from e


def describe_validation_error(error: ValidationError) -> str:
    """First pydantic error as a one-line message."""
    first = error.errors()[0]
    location = ".".join(str(part) for part in first.get("loc", ()))
    message = str(first.get("msg", error)).removeprefix("Value error, ")
    return f"{location}: {message}" if location else message


def validate_instance_document(data: Any) -> InstanceDocument:
    try:
        return InstanceDocument.model_validate(data)
    except ValidationError as e:
        raise InstanceFormatError(f"Invalid instance: {describe_validation_error(e)}", original_error=e) from e


def validate_cpt_document(data: Any) -> CptDocument:
    try:
        return CptDocument.model_validate(data)
    except ValidationError as e:
        raise InstanceFormatError(f"Invalid CPT: {describe_validation_error(e)}", original_error=e) from e


def cpt_from_document(data: Union[Dict, CptDocument], n: int) -> Cpt:
    """Build a validated Cpt from a CptObj over an ``n``-attribute universe.

    Raises:
        InstanceFormatError: If the document is invalid, incomplete or out of range
    """
    document = data if isinstance(data, CptDocument) else validate_cpt_document(data)
    parents = AttributeSet.from_indices(document.parents, n - 1)
    prefs = [0] * (1 << len(parents))
    for context, rule in document.rules.items():
        prefs[int(context, 2) if context else 0] = RULE_VALUES[rule]
    return Cpt(n, parents, tuple(prefs))
