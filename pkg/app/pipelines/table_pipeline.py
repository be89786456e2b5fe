"""
Batch evaluation of dimension/smoothness reports, and the built-in table of headline cases
"""
import logging
import re
from pathlib import Path
from typing import List, Optional, Tuple, Union

from joblib import Parallel, delayed
from pydantic import BaseModel, ConfigDict

from app.utils.report import Report, moduli_report
from libs.moduli_service import report_preprojective, report_surface
from libs.quiver_service import Arrow, Quiver, load_quiver, parse_dim_vector

logger = logging.getLogger(__name__)

SURFACE_SPEC = re.compile(r"^\s*g\s*=\s*(\d+)\s+n\s*=\s*(\d+)\s*$")


class TableItem(BaseModel):
    """One input row: a surface (g, n) or a quiver with a dimension vector"""
    model_config = ConfigDict(frozen=True)

    label: str
    genus: Optional[int] = None
    n: Optional[int] = None
    quiver: Optional[Quiver] = None
    alpha: Optional[Tuple[int, ...]] = None


def parse_surface_spec(spec: str) -> Tuple[int, int]:
    """'g=2 n=3' -> (2, 3)"""
    match = SURFACE_SPEC.match(spec)
    if not match:
        raise ValueError(f"Malformed surface signature '{spec}' (expected 'g=<g> n=<n>')")
    return int(match.group(1)), int(match.group(2))


def parse_batch_line(line: str, base_dir: Union[str, Path, None] = None) -> TableItem:
    """
    `surface g=<g> n=<n>` or `<quiverfile> <vector>`; quiver paths resolve against base_dir
    """
    text = line.strip()
    if text.startswith("surface"):
        genus, n = parse_surface_spec(text[len("surface"):])
        return TableItem(label=text, genus=genus, n=n)
    parts = text.split(None, 1)
    if len(parts) != 2:
        raise ValueError(f"Malformed batch line '{line}' (expected '<quiverfile> <vector>')")
    path = Path(parts[0])
    if base_dir is not None and not path.is_absolute():
        path = Path(base_dir) / path
    quiver, _ = load_quiver(path)
    return TableItem(label=text, quiver=quiver, alpha=tuple(parse_dim_vector(quiver, parts[1])))


def load_batch(path: Union[str, Path]) -> List[TableItem]:
    path = Path(path)
    items = []
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            items.append(parse_batch_line(line, base_dir=path.parent))
    return items


def _loop_quiver(loops: int) -> Quiver:
    return Quiver(
        vertices=("v",),
        arrows=tuple(Arrow(label=f"x{i + 1}", tail="v", head="v") for i in range(loops)),
    )


def _dtilde4() -> Quiver:
    return Quiver(
        vertices=("c", "l1", "l2", "l3", "l4"),
        arrows=tuple(Arrow(label=f"a{i}", tail=f"l{i}", head="c") for i in range(1, 5)),
    )


def default_table() -> List[TableItem]:
    """Surfaces g in {2, 3}, n in {1, 2, 3}; 2- and 3-loop quivers at (1), (2), (3); D̃_4 at δ"""
    items = [
        TableItem(label=f"surface g={g} n={n}", genus=g, n=n) for g in (2, 3) for n in (1, 2, 3)
    ]
    for loops in (2, 3):
        quiver = _loop_quiver(loops)
        items.extend(
            TableItem(label=f"loops={loops} dim={a}", quiver=quiver, alpha=(a,)) for a in (1, 2, 3)
        )
    items.append(TableItem(label="dtilde4 dim=2,1,1,1,1", quiver=_dtilde4(), alpha=(2, 1, 1, 1, 1)))
    return items


def evaluate_item(item: TableItem, with_dims: bool = True) -> Report:
    """Report for one row, headed by an `input` echo line"""
    if item.genus is not None:
        report = report_surface(item.genus, item.n)
    else:
        report = report_preprojective(item.quiver, item.alpha)
    out = Report().add("input", item.label)
    rendered = moduli_report(report, with_dims=with_dims)
    return out.raw(rendered.lines).set_verdict(rendered.verdict)


def run_batch(items: List[TableItem], n_jobs: int = 1, with_dims: bool = True) -> List[Report]:
    """Evaluate rows in parallel; the result order is the input order"""
    logger.info(f"Evaluating {len(items)} rows with n_jobs={n_jobs}")
    return Parallel(n_jobs=n_jobs)(delayed(evaluate_item)(item, with_dims) for item in items)
