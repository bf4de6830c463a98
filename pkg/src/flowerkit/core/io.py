"""Family text format and its JSON mirror.

Text format::

    7 3
    1 2 4
    1 3 7
    ...

First line ``n r`` (``r = 0`` for mixed sizes), then one edge per line as
increasing 1-based vertices, edges in canonical (bitmask) order.  Blank lines
and ``#`` comments are ignored on input.
"""
from __future__ import annotations

import json

from ..errors import BadParams, ParseError
from .family import SetFamily
from .vertexset import VertexSet, mask_of


def to_text(F: SetFamily) -> str:
    lines = [f"{F.n} {F.r}"]
    lines += [" ".join(map(str, e)) for e in F.to_lists()]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> SetFamily:
    header = None
    masks = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {raw!r}", lineno) from None
        if header is None:
            if len(nums) != 2 or nums[0] < 0 or nums[1] < 0:
                raise ParseError("header must be 'n r'", lineno)
            header = nums
            continue
        n = header[0]
        if any(not 1 <= v <= n for v in nums):
            raise ParseError(f"vertex outside [1, {n}]", lineno)
        if nums != sorted(set(nums)):
            raise ParseError("edge vertices must be strictly increasing", lineno)
        if header[1] and len(nums) != header[1]:
            raise ParseError(f"edge has {len(nums)} vertices, header says r = {header[1]}", lineno)
        masks.append(mask_of(nums))
    if header is None:
        raise ParseError("missing 'n r' header", 1)
    try:
        return SetFamily(header[0], masks, header[1] or None)
    except BadParams as exc:
        raise ParseError(str(exc)) from exc


def to_json(F: SetFamily) -> dict:
    return {"n": F.n, "r": F.r, "edges": F.to_lists()}


def from_json(obj: dict) -> SetFamily:
    try:
        n, r, edges = int(obj["n"]), int(obj.get("r", 0)), obj["edges"]
        return SetFamily.from_sets(n, edges, r or None)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad family JSON: {exc}") from exc


def parse_family(text: str) -> SetFamily:
    """Accept either the text format or the JSON mirror."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno) from exc
        return from_json(obj)
    return from_text(text)


def read_family(path) -> SetFamily:
    with open(path) as fh:
        return parse_family(fh.read())


def write_family(F: SetFamily, path) -> None:
    with open(path, "w") as fh:
        fh.write(to_text(F))


def vertexset_json(S: VertexSet) -> list[int]:
    return S.to_list()
