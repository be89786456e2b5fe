from pathlib import Path

import pytest

from libs.lab_config import LabConfig
from libs.quiver_service import Arrow, Quiver

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def loop_quiver(loops: int) -> Quiver:
    return Quiver(
        vertices=("v",),
        arrows=tuple(Arrow(label=f"x{i + 1}", tail="v", head="v") for i in range(loops)),
    )


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def point() -> Quiver:
    return loop_quiver(0)


@pytest.fixture
def jordan() -> Quiver:
    return loop_quiver(1)


@pytest.fixture
def twoloop() -> Quiver:
    return loop_quiver(2)


@pytest.fixture
def threeloop() -> Quiver:
    return loop_quiver(3)


@pytest.fixture
def a2() -> Quiver:
    return Quiver(vertices=("u", "w"), arrows=(Arrow(label="a", tail="u", head="w"),))


@pytest.fixture
def atilde1() -> Quiver:
    return Quiver(
        vertices=("u", "w"),
        arrows=(Arrow(label="a", tail="u", head="w"), Arrow(label="b", tail="u", head="w")),
    )


@pytest.fixture
def dtilde4() -> Quiver:
    return Quiver(
        vertices=("c", "l1", "l2", "l3", "l4"),
        arrows=tuple(Arrow(label=f"a{i}", tail=f"l{i}", head="c") for i in range(1, 5)),
    )


@pytest.fixture
def atilde2_cycle() -> Quiver:
    return Quiver(
        vertices=("1", "2", "3"),
        arrows=(
            Arrow(label="a", tail="1", head="2"),
            Arrow(label="b", tail="2", head="3"),
            Arrow(label="c", tail="3", head="1"),
        ),
    )


@pytest.fixture
def lab_config() -> LabConfig:
    return LabConfig(seed=7, trials=10)
