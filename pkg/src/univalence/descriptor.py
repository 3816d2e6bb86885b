"""JSON function descriptors.

Three shapes are accepted; complex numbers are ``[re, im]`` pairs (a bare
number is read as a real value) and lists are in ascending powers of ``z``::

    {"kind": "rational", "num": [[re, im], ...], "den": [[re, im], ...], "pole": p}
    {"kind": "z_over_f", "b": [[re, im], ...], "pole": p}
    {"kind": "schwarz", "w": [[re, im], ...], "lambda": x, "pole": p}

``b`` lists the coefficients of ``z/f`` starting with ``b_0 = 1``; ``w``
must already be bounded by one on the unit circle.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, List, Union

import numpy as np

from .errors import DescriptorError, ModelError
from .model import MeroFunction, SchwarzSampler, from_rational, from_schwarz, from_z_over_f

KINDS = ("rational", "z_over_f", "schwarz")


def _number(x: Any, where: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
        raise DescriptorError(f"expected a finite number, got {x!r}", where)
    return float(x)


def _complex_list(obj: dict, key: str) -> List[complex]:
    if key not in obj:
        raise DescriptorError("missing field", key)
    seq = obj[key]
    if not isinstance(seq, list) or not seq:
        raise DescriptorError("expected a nonempty list", key)
    out = []
    for i, item in enumerate(seq):
        where = f"{key}[{i}]"
        if isinstance(item, list):
            if len(item) != 2:
                raise DescriptorError("expected [re, im]", where)
            out.append(complex(_number(item[0], where + "[0]"), _number(item[1], where + "[1]")))
        else:
            out.append(complex(_number(item, where)))
    return out


def parse_descriptor(obj: Any) -> MeroFunction:
    if not isinstance(obj, dict):
        raise DescriptorError("descriptor must be a JSON object", "$")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise DescriptorError(f"expected one of {KINDS}, got {kind!r}", "kind")
    if "pole" not in obj:
        raise DescriptorError("missing field", "pole")
    p = _number(obj["pole"], "pole")
    try:
        if kind == "rational":
            return from_rational(_complex_list(obj, "num"), _complex_list(obj, "den"), p)
        if kind == "z_over_f":
            return from_z_over_f(_complex_list(obj, "b"), p)
        if "lambda" not in obj:
            raise DescriptorError("missing field", "lambda")
        w = SchwarzSampler(np.array(_complex_list(obj, "w")))
        return from_schwarz(w, _number(obj["lambda"], "lambda"), p)
    except ModelError as exc:
        raise DescriptorError(f"{type(exc).__name__}: {exc}", kind) from exc


def load_descriptor(source: Union[str, Path]) -> MeroFunction:
    """Read and validate a descriptor file; errors carry line/column or field paths."""
    text = Path(source).read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DescriptorError(exc.msg, f"{source}:{exc.lineno}:{exc.colno}") from exc
    return parse_descriptor(obj)


def to_descriptor(f: MeroFunction) -> dict:
    pairs = lambda c: [[float(np.real(x)), float(np.imag(x))] for x in c]
    return {"kind": "rational", "num": pairs(f.num), "den": pairs(f.den), "pole": f.pole}
