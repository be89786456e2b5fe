"""
Quiver text format.

One declaration per line, '#' starts a comment:

    vertex <label>
    arrow <label> : <tail> -> <head>
    dim <label>=<nonneg int> ...

Vertex order is the order of the `vertex` lines. At most one `dim` line; vertices it
does not mention get 0.
"""
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .models import Arrow, DimensionMismatchError, DimVector, Quiver, QuiverParseError

LABEL = r"[^\s:=#]+"
VERTEX_LINE = re.compile(rf"^vertex\s+({LABEL})$")
ARROW_LINE = re.compile(rf"^arrow\s+({LABEL})\s*:\s*({LABEL})\s*->\s*({LABEL})$")
DIM_ENTRY = re.compile(rf"^({LABEL})=(\d+)$")


def _parse_dim_entries(tokens: List[str], line_number: Optional[int]) -> Dict[str, int]:
    values: Dict[str, int] = {}
    for token in tokens:
        match = DIM_ENTRY.match(token)
        if not match:
            raise QuiverParseError(f"Malformed dimension entry '{token}' (expected <label>=<nonneg int>)", line_number)
        label, value = match.group(1), int(match.group(2))
        if label in values:
            raise QuiverParseError(f"Vertex '{label}' appears twice in dim line", line_number)
        values[label] = value
    return values


def parse_quiver(text: str) -> Tuple[Quiver, Optional[DimVector]]:
    """
    Parse quiver text

    Args:
        text: Contents of a quiver file

    Returns:
        The quiver and, if a `dim` line is present, its dimension vector

    Raises:
        QuiverParseError: on malformed lines, duplicate labels or undeclared vertices
    """
    vertices: List[str] = []
    arrows: List[Arrow] = []
    arrow_lines: Dict[str, int] = {}
    dim_values: Optional[Dict[str, int]] = None
    dim_line = None

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword = line.split()[0]
        if keyword == "vertex":
            match = VERTEX_LINE.match(line)
            if not match:
                raise QuiverParseError(f"Malformed vertex declaration '{line}'", line_number)
            label = match.group(1)
            if label in vertices:
                raise QuiverParseError(f"Duplicate vertex label '{label}'", line_number)
            vertices.append(label)
        elif keyword == "arrow":
            match = ARROW_LINE.match(line)
            if not match:
                raise QuiverParseError(f"Malformed arrow declaration '{line}'", line_number)
            label, tail, head = match.groups()
            if label in arrow_lines:
                raise QuiverParseError(
                    f"Duplicate arrow label '{label}' (first declared on line {arrow_lines[label]})", line_number
                )
            for endpoint in (tail, head):
                if endpoint not in vertices:
                    raise QuiverParseError(f"Arrow '{label}' uses undeclared vertex '{endpoint}'", line_number)
            arrow_lines[label] = line_number
            arrows.append(Arrow(label=label, tail=tail, head=head))
        elif keyword == "dim":
            if dim_values is not None:
                raise QuiverParseError(f"Second dim line (first on line {dim_line})", line_number)
            dim_values = _parse_dim_entries(line.split()[1:], line_number)
            dim_line = line_number
        else:
            raise QuiverParseError(f"Unknown declaration '{keyword}'", line_number)

    quiver = Quiver(vertices=tuple(vertices), arrows=tuple(arrows))
    if dim_values is None:
        return quiver, None
    unknown = sorted(set(dim_values) - set(vertices))
    if unknown:
        raise QuiverParseError(f"dim line mentions undeclared vertices {unknown}", dim_line)
    return quiver, quiver.vector_from_mapping(dim_values)


def load_quiver(path: Union[str, Path]) -> Tuple[Quiver, Optional[DimVector]]:
    """Parse a quiver file from disk"""
    return parse_quiver(Path(path).read_text())


def format_dim_vector(quiver: Quiver, alpha: DimVector) -> str:
    """`label=value` tokens in vertex order"""
    return " ".join(f"{v}={x}" for v, x in zip(quiver.vertices, quiver.vector(alpha)))


def format_quiver(quiver: Quiver, alpha: Optional[DimVector] = None) -> str:
    """Render a quiver (and optional dimension vector) in the text format; re-parses to an equal value"""
    lines = [f"vertex {v}" for v in quiver.vertices]
    lines += [f"arrow {a.label} : {a.tail} -> {a.head}" for a in quiver.arrows]
    if alpha is not None:
        lines.append(f"dim {format_dim_vector(quiver, alpha)}".rstrip())
    return "\n".join(lines) + "\n"


def parse_dim_vector(quiver: Quiver, spec: str) -> DimVector:
    """
    Parse a command-line dimension vector.

    Accepts comma or space separated integers in vertex order (`2,1,1`, `2 1 1`)
    or `label=value` tokens.
    """
    tokens = [t for t in re.split(r"[\s,]+", spec.strip()) if t]
    if not tokens:
        raise DimensionMismatchError("Empty dimension vector")
    if all("=" in t for t in tokens):
        try:
            values = _parse_dim_entries(tokens, None)
        except QuiverParseError as e:
            raise DimensionMismatchError(str(e))
        return quiver.vector_from_mapping(values)
    try:
        numbers = [int(t) for t in tokens]
    except ValueError:
        raise DimensionMismatchError(f"Cannot parse dimension vector '{spec}'")
    return quiver.vector(numbers)
