import pytest

from rankdec import FieldContext


@pytest.fixture(scope="session")
def f4():
    return FieldContext(2, 1, 2)


@pytest.fixture(scope="session")
def f16():
    return FieldContext(2, 1, 4)


@pytest.fixture(scope="session")
def f32():
    return FieldContext(2, 1, 5)


@pytest.fixture(scope="session")
def f64():
    return FieldContext(2, 1, 6)


@pytest.fixture(scope="session")
def f128():
    return FieldContext(2, 1, 7)


@pytest.fixture(scope="session")
def f81():
    return FieldContext(3, 1, 4)
