import pytest

import lassomatroid as lm


@pytest.fixture
def quartet():
    return lm.quartet_tree("a", "b", "c", "d")


@pytest.fixture
def star3():
    return lm.star_tree("abc")


@pytest.fixture
def star4():
    return lm.star_tree("abcd")


@pytest.fixture
def star5():
    return lm.star_tree("abcde")


@pytest.fixture
def cat5():
    return lm.caterpillar_tree("abcde")


@pytest.fixture
def cat6():
    return lm.caterpillar_tree("abcdef")
