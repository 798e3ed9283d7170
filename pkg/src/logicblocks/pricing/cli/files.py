import json
from collections.abc import Mapping
from pathlib import Path
from typing import Any, cast

from logicblocks.pricing.demand import DemandSystem
from logicblocks.pricing.exceptions import InstanceFormatError
from logicblocks.pricing.types import Vector, as_vector
from logicblocks.pricing.utils import write_atomically


def read_json(path: Path) -> Any:
    try:
        with path.open(encoding="utf-8") as f:
            return json.load(f)
    except ValueError as ex:
        raise InstanceFormatError(
            f"File {path} is not valid JSON: {ex}"
        ) from None


def read_instance(path: Path) -> DemandSystem:
    document = read_json(path)
    if not isinstance(document, dict):
        raise InstanceFormatError(
            f"Instance file {path} must hold a JSON object."
        )
    return DemandSystem.deserialise(cast(dict[str, Any], document))


def _is_number(value: object) -> bool:
    return isinstance(value, int | float) and not isinstance(value, bool)


def read_vector(path: Path, field: str) -> Vector:
    """Vector stored either as a bare array or under `field`."""
    document = read_json(path)
    if isinstance(document, dict):
        document = cast(dict[str, Any], document).get(field)
    if not isinstance(document, list):
        raise InstanceFormatError(
            f"File {path} must hold an array of numbers or an object "
            f'with a numeric array "{field}".'
        )
    values = cast(list[object], document)
    if not all(_is_number(value) for value in values):
        raise InstanceFormatError(
            f'Array "{field}" in {path} must contain only numbers.'
        )
    try:
        return as_vector([float(cast(float, value)) for value in values])
    except OverflowError:
        raise InstanceFormatError(
            f'Array "{field}" in {path} holds a number too large for a '
            "float."
        ) from None


def render_json(document: Mapping[str, Any]) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def write_json(path: Path, document: Mapping[str, Any]) -> None:
    write_atomically(path, render_json(document))
