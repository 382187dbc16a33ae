"""Group-spec strings and the cayley-v1 / dset-v1 / hadamard-v1 file formats.

cayley-v1 and dset-v1 are JSON documents; hadamard-v1 is plain text with a
one-line header.  All writers emit byte-identical output for identical
inputs.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from .groups import (
    C4PowerGroup,
    CayleyTableGroup,
    FiniteGroup,
    GnkGroup,
    GroupError,
    Subgroup,
    closure,
)

CAYLEY_FORMAT = "cayley-v1"
DSET_GROUP_KEY = "group"
HADAMARD_HEADER = "hadamard-v1"


class FormatError(ValueError):
    pass


# ---------------------------------------------------------------------------
# group specs
# ---------------------------------------------------------------------------

_GNK_RE = re.compile(r"^gnk:(\d+),(\d+)$")
_C4N_RE = re.compile(r"^c4n:(\d+)$")


@dataclass(frozen=True)
class GroupSpec:
    """Parseable group description: gnk:n,k | c4n:n | file:<path>."""

    kind: str
    n: Optional[int] = None
    k: Optional[int] = None
    path: Optional[str] = None

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        text = text.strip()
        m = _GNK_RE.match(text)
        if m:
            return cls("gnk", n=int(m.group(1)), k=int(m.group(2)))
        m = _C4N_RE.match(text)
        if m:
            return cls("c4n", n=int(m.group(1)))
        if text.startswith("file:") and len(text) > 5:
            return cls("file", path=text[5:])
        raise FormatError(f"unrecognized group spec {text!r}")

    def __str__(self) -> str:
        if self.kind == "gnk":
            return f"gnk:{self.n},{self.k}"
        if self.kind == "c4n":
            return f"c4n:{self.n}"
        return f"file:{self.path}"


def build_group(spec: Union[str, GroupSpec]) -> FiniteGroup:
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    if spec.kind == "gnk":
        return GnkGroup(spec.n, spec.k)
    if spec.kind == "c4n":
        return C4PowerGroup(spec.n)
    return read_cayley(spec.path)


# ---------------------------------------------------------------------------
# cayley-v1
# ---------------------------------------------------------------------------


def write_cayley(group: FiniteGroup, path: Union[str, Path]) -> None:
    doc = {
        "format": CAYLEY_FORMAT,
        "order": group.order,
        "table": group.table,
        "names": [group.element_name(a) for a in group.elements()],
    }
    Path(path).write_text(json.dumps(doc, separators=(",", ":")) + "\n", encoding="utf-8")


def read_cayley(path: Union[str, Path]) -> CayleyTableGroup:
    """Parse and fully validate a cayley-v1 document."""
    p = Path(path)
    if not p.exists():
        raise FormatError(f"no such file: {p}")
    try:
        doc = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON in {p}: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != CAYLEY_FORMAT:
        raise FormatError(f"not a {CAYLEY_FORMAT} document: {p}")
    order = doc.get("order")
    table = doc.get("table")
    if not isinstance(order, int) or not isinstance(table, list) or len(table) != order:
        raise FormatError(f"order/table mismatch in {p}")
    names = doc.get("names")
    if names is not None:
        if not isinstance(names, list) or len(names) != order:
            raise FormatError(f"names array has wrong length in {p}")
        names = [str(x) for x in names]
    try:
        return CayleyTableGroup(table, names=names, validate=True)
    except GroupError as exc:
        witness = getattr(exc, "witness", {})
        raise FormatError(f"invalid multiplication table in {p}: {exc} {witness}") from exc


# ---------------------------------------------------------------------------
# dset-v1
# ---------------------------------------------------------------------------


def write_dset(
    path: Union[str, Path],
    group_spec: Union[str, GroupSpec],
    subgroup: Union[str, Sequence[int]],
    elements: Sequence[int],
) -> None:
    """Write a difference-set document.

    ``subgroup`` is either the literal string "distinguished" or a list of
    generator indices whose closure is the subgroup.
    """
    if isinstance(subgroup, str):
        if subgroup != "distinguished":
            raise FormatError(f"unknown subgroup token {subgroup!r}")
        sub_field: Union[str, List[int]] = "distinguished"
    else:
        sub_field = [int(x) for x in subgroup]
    doc = {
        "group": str(group_spec if isinstance(group_spec, GroupSpec) else GroupSpec.parse(group_spec)),
        "subgroup": sub_field,
        "elements": sorted(int(x) for x in elements),
    }
    Path(path).write_text(json.dumps(doc, separators=(",", ":")) + "\n", encoding="utf-8")


def read_dset(
    path: Union[str, Path]
) -> Tuple[FiniteGroup, Subgroup, Tuple[int, ...], GroupSpec]:
    p = Path(path)
    if not p.exists():
        raise FormatError(f"no such file: {p}")
    try:
        doc = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON in {p}: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError(f"not a dset-v1 document: {p}")
    for key in ("group", "subgroup", "elements"):
        if key not in doc:
            raise FormatError(f"dset-v1 document missing field {key!r}: {p}")
    spec = GroupSpec.parse(str(doc["group"]))
    group = build_group(spec)
    sub_field = doc["subgroup"]
    if sub_field == "distinguished":
        sub = group.distinguished_subgroup()
        if sub is None:
            raise FormatError(f"group {spec} has no distinguished subgroup")
    elif isinstance(sub_field, list):
        sub = closure(group, [int(x) for x in sub_field])
    else:
        raise FormatError(f"invalid subgroup field {sub_field!r}")
    elements = doc["elements"]
    if not isinstance(elements, list):
        raise FormatError("elements field must be a list")
    elems = tuple(sorted(int(x) for x in elements))
    if len(set(elems)) != len(elems):
        raise FormatError("duplicate element indices")
    for e in elems:
        if not (0 <= e < group.order):
            raise FormatError(f"element index {e} out of range")
    return group, sub, elems, spec


# ---------------------------------------------------------------------------
# hadamard-v1
# ---------------------------------------------------------------------------


def write_hadamard(path: Union[str, Path], matrix: Sequence[Sequence[int]]) -> None:
    n = len(matrix)
    lines = [f"{HADAMARD_HEADER} {n}"]
    for row in matrix:
        if len(row) != n or any(x not in (1, -1) for x in row):
            raise FormatError("hadamard-v1 rows must be +-1 entries of full length")
        lines.append(" ".join(str(x) for x in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_hadamard(path: Union[str, Path]) -> List[List[int]]:
    p = Path(path)
    if not p.exists():
        raise FormatError(f"no such file: {p}")
    lines = p.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise FormatError(f"empty hadamard-v1 file: {p}")
    header = lines[0].split()
    if len(header) != 2 or header[0] != HADAMARD_HEADER:
        raise FormatError(f"bad hadamard-v1 header: {lines[0]!r}")
    n = int(header[1])
    if len(lines) < n + 1:
        raise FormatError(f"expected {n} matrix rows, found {len(lines) - 1}")
    matrix = []
    for i in range(1, n + 1):
        row = [int(x) for x in lines[i].split()]
        if len(row) != n or any(x not in (1, -1) for x in row):
            raise FormatError(f"bad hadamard-v1 row {i}")
        matrix.append(row)
    return matrix
