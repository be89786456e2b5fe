"""
Matrix representation text format.

    surface g=<g> n=<n>                      or   quiver-rep <quiverfile> dim <vector>
    matrix <label>
    <row of rationals p/q or integers>
    ...

Surface files list X1, Y1, ..., Xg, Yg. Quiver files refer to a quiver file of Q (resolved
relative to the representation file) and give blocks for the arrows of its double; a
missing matrix is zero. Blocks with no rows or no columns have no row lines.
"""
import logging
import re
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Union

from libs.quiver_service import DimVector, Quiver, double_quiver, load_quiver, parse_dim_vector

from . import linalg
from .models import RepParseError
from .representations import AbstractRepresentation, QuiverMatrixRep, SurfaceMatrixRep, generator_labels

logger = logging.getLogger(__name__)

SURFACE_HEADER = re.compile(r"^surface\s+g=(\d+)\s+n=(\d+)$")
QUIVER_HEADER = re.compile(r"^quiver-rep\s+(\S+)\s+dim\s+(.+)$")
MATRIX_LINE = re.compile(r"^matrix\s+(\S+)$")

QuiverLoader = Callable[[Path], Tuple[Quiver, Optional[DimVector]]]


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((line_number, line))
    return lines


def _read_matrices(lines: List[Tuple[int, str]], shapes: Dict[str, Tuple[int, int]]) -> Dict[str, List[List]]:
    matrices: Dict[str, List[List]] = {}
    position = 0
    while position < len(lines):
        line_number, line = lines[position]
        match = MATRIX_LINE.match(line)
        if not match:
            raise RepParseError(f"Expected 'matrix <label>', got '{line}'", line_number)
        label = match.group(1)
        if label not in shapes:
            raise RepParseError(f"Unknown matrix label '{label}'", line_number)
        if label in matrices:
            raise RepParseError(f"Matrix '{label}' given twice", line_number)
        rows, cols = shapes[label]
        expected = rows if cols else 0
        block = []
        for offset in range(1, expected + 1):
            if position + offset >= len(lines):
                raise RepParseError(f"Matrix '{label}' needs {rows} rows", line_number)
            row_number, row_text = lines[position + offset]
            tokens = row_text.split()
            if len(tokens) != cols:
                raise RepParseError(f"Row of '{label}' needs {cols} entries, got {len(tokens)}", row_number)
            try:
                block.append([linalg.qq(token) for token in tokens])
            except (ValueError, ZeroDivisionError):
                raise RepParseError(f"Malformed rational in row '{row_text}'", row_number)
        matrices[label] = block if cols else [[] for _ in range(rows)]
        position += expected + 1
    return matrices


def parse_rep(
    text: str, base_dir: Union[str, Path, None] = None, quiver_loader: QuiverLoader = load_quiver
) -> AbstractRepresentation:
    """
    Parse a representation file

    Args:
        text: File contents
        base_dir: Directory against which the quiver file path is resolved
        quiver_loader: Reads a quiver file

    Returns:
        SurfaceMatrixRep or QuiverMatrixRep

    Raises:
        RepParseError: malformed header, rows or rationals
    """
    lines = _content_lines(text)
    if not lines:
        raise RepParseError("Empty representation file")
    header_number, header = lines[0]

    surface = SURFACE_HEADER.match(header)
    if surface:
        genus, n = int(surface.group(1)), int(surface.group(2))
        labels = generator_labels(genus)
        matrices = _read_matrices(lines[1:], {label: (n, n) for label in labels})
        missing = [label for label in labels if label not in matrices]
        if missing:
            raise RepParseError(f"Missing generator matrices {missing}", header_number)
        return SurfaceMatrixRep(genus, [linalg.matrix(matrices[label], n) for label in labels])

    quiver_match = QUIVER_HEADER.match(header)
    if quiver_match:
        reference, spec = quiver_match.group(1), quiver_match.group(2)
        path = Path(reference)
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        try:
            quiver, _ = quiver_loader(path)
        except OSError as exc:
            raise RepParseError(f"Cannot read quiver file '{reference}': {exc}", header_number)
        double = double_quiver(quiver)
        alpha = parse_dim_vector(double, spec)
        dims = dict(zip(double.vertices, alpha))
        shapes = {a.label: (dims[a.head], dims[a.tail]) for a in double.arrows}
        matrices = _read_matrices(lines[1:], shapes)
        rep = QuiverMatrixRep(double, alpha, matrices)
        rep.source_path = reference
        return rep

    raise RepParseError(f"Unknown header '{header}'", header_number)


def load_rep(path: Union[str, Path]) -> AbstractRepresentation:
    path = Path(path)
    return parse_rep(path.read_text(), base_dir=path.parent)


def _format_block(block: List[List]) -> List[str]:
    return [" ".join(linalg.format_scalar(x) for x in row) for row in block if row]


def format_rep(rep: AbstractRepresentation, quiver_path: Optional[str] = None) -> str:
    """Render a representation; the output re-parses to the same matrices"""
    lines: List[str] = []
    if isinstance(rep, SurfaceMatrixRep):
        lines.append(f"surface g={rep.genus} n={rep.size}")
        for label, mat in rep.generators().items():
            lines.append(f"matrix {label}")
            lines.extend(_format_block(linalg.entries(mat)))
    elif isinstance(rep, QuiverMatrixRep):
        reference = quiver_path or rep.source_path
        if reference is None:
            raise ValueError("Formatting a quiver representation needs the path of its quiver file")
        lines.append(f"quiver-rep {reference} dim {','.join(str(x) for x in rep.alpha)}")
        for arrow in rep.quiver.arrows:
            lines.append(f"matrix {arrow.label}")
            lines.extend(_format_block(rep.blocks[arrow.label]))
    else:
        raise TypeError(f"Unsupported representation type {type(rep).__name__}")
    return "\n".join(lines) + "\n"
