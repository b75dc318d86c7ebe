import pytest

from edutree.datasets import load_embedded_students
from edutree.models.dataset import AttributeSpec, Dataset, Schema


@pytest.fixture(scope="session")
def students() -> Dataset:
    return load_embedded_students()


@pytest.fixture
def frozen_clock(monkeypatch):
    """冻结建模计时，使 build_time_s 恒为 0"""
    monkeypatch.setattr("edutree.algorithms.evaluation.perf_counter", lambda: 0.0)


@pytest.fixture
def weather() -> Dataset:
    """14 行的小型名义数据集，用于手算核对"""
    header = Schema.of(
        [
            AttributeSpec.nominal("outlook", ("sunny", "overcast", "rainy")),
            AttributeSpec.nominal("temp", ("hot", "mild", "cool")),
            AttributeSpec.nominal("humidity", ("high", "normal")),
            AttributeSpec.nominal("windy", ("false", "true")),
            AttributeSpec.nominal("play", ("yes", "no")),
        ]
    )
    rows = [
        ("sunny", "hot", "high", "false", "no"),
        ("sunny", "hot", "high", "true", "no"),
        ("overcast", "hot", "high", "false", "yes"),
        ("rainy", "mild", "high", "false", "yes"),
        ("rainy", "cool", "normal", "false", "yes"),
        ("rainy", "cool", "normal", "true", "no"),
        ("overcast", "cool", "normal", "true", "yes"),
        ("sunny", "mild", "high", "false", "no"),
        ("sunny", "cool", "normal", "false", "yes"),
        ("rainy", "mild", "normal", "false", "yes"),
        ("sunny", "mild", "normal", "true", "yes"),
        ("overcast", "mild", "high", "true", "yes"),
        ("overcast", "hot", "normal", "false", "yes"),
        ("rainy", "mild", "high", "true", "no"),
    ]
    return Dataset.from_labels(header, rows, relation="weather")


@pytest.fixture
def numeric_toy() -> Dataset:
    """单个数值属性，在 5 处把两类分开"""
    header = Schema.of([AttributeSpec.numeric("x"), AttributeSpec.nominal("y", ("lo", "hi"))])
    rows = [(float(v), "lo" if v <= 5 else "hi") for v in range(1, 11)]
    return Dataset.from_labels(header, rows)
