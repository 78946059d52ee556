import pytest

from loopwalks import FamilySpec, generate


@pytest.fixture
def k4_three_loops():
    """Complete graph on 4 vertices with loops at three of them."""
    return generate(FamilySpec.complete(4, loops=(0, 1, 3)))


@pytest.fixture
def petersen_one_loop():
    return generate(FamilySpec.petersen(loops=(1,)))
