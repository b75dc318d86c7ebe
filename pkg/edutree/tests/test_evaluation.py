import asyncio

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edutree.algorithms.evaluation import confusion_from_pairs, cross_validate, precision_per_class
from edutree.algorithms.folds import stratified_folds
from edutree.controllers import evaluation_controller
from edutree.core.exceptions import DataError, DomainError
from edutree.datasets.reference import REFERENCE_MATRICES, REFERENCE_PRECISION
from edutree.models.dataset import Dataset, Instance
from edutree.models.enums import Algorithm
from edutree.models.tree import Prediction
from edutree.schemas.params import LearnerParams
from edutree.schemas.reports import ConfusionMatrix


@pytest.mark.parametrize(
    "algorithm, expected",
    [
        (Algorithm.ID3, (66.7, 42.9, 70.0, 66.7)),
        (Algorithm.C45, (53.3, 47.1, 30.8, 33.3)),
        (Algorithm.CART, (69.2, 55.6, 41.7, 60.0)),
    ],
)
def test_precision_on_published_matrices(algorithm, expected):
    assert precision_per_class(REFERENCE_MATRICES[algorithm]) == expected


def test_published_precision_differs_only_in_c45_first():
    for algorithm, published in REFERENCE_PRECISION.items():
        recomputed = precision_per_class(REFERENCE_MATRICES[algorithm])
        differing = [i for i, (p, r) in enumerate(zip(published, recomputed)) if p != r]
        assert differing == ([0] if algorithm == Algorithm.C45 else [])
    assert REFERENCE_PRECISION[Algorithm.C45][0] == 55.31


def test_published_id3_rows_match_class_tally():
    matrix = REFERENCE_MATRICES[Algorithm.ID3]
    totals = [r + u for r, u in zip(matrix.row_sums(), matrix.unclassified_per_actual)]
    assert totals == [14, 14, 13, 7]
    assert matrix.correct == 25
    assert matrix.unclassified == 6


def test_precision_of_empty_column_is_none():
    matrix = ConfusionMatrix(labels=("a", "b"), cells=((3, 0), (1, 0)), unclassified_per_actual=(0, 2))
    assert precision_per_class(matrix) == (75.0, None)


def test_confusion_from_pairs():
    pairs = [
        ("a", Prediction(label="a", distribution=(1.0, 0.0))),
        ("a", Prediction.unclassified()),
        ("b", Prediction(label="a", distribution=(0.5, 0.5))),
    ]
    matrix = confusion_from_pairs(pairs, ("a", "b"))
    assert matrix.cells == ((1, 0), (1, 0))
    assert matrix.unclassified_per_actual == (1, 0)
    assert matrix.total == 3


def test_all_unclassified_gives_empty_matrix():
    matrix = confusion_from_pairs([("a", Prediction.unclassified()), ("b", Prediction.unclassified())], ("a", "b"))
    assert matrix.cells == ((0, 0), (0, 0))
    assert matrix.unclassified_per_actual == (1, 1)
    assert precision_per_class(matrix) == (None, None)


def test_confusion_rejects_unknown_label():
    with pytest.raises(DomainError):
        confusion_from_pairs([("c", Prediction.unclassified())], ("a", "b"))


@given(seed=st.integers(min_value=0, max_value=2**32), k=st.integers(min_value=2, max_value=48))
@settings(max_examples=100, deadline=None)
def test_stratified_fold_properties(students, seed, k):
    folds = stratified_folds(students, k, seed)
    sizes = folds.fold_sizes()
    assert sum(sizes) == 48
    assert max(sizes) - min(sizes) <= 1
    y = students.class_codes()
    for c in range(students.header.n_classes):
        per_fold = [sum(1 for i in folds.test_indices(f) if y[i] == c) for f in range(k)]
        assert max(per_fold) - min(per_fold) <= 1


def test_folds_are_deterministic(students):
    assert stratified_folds(students, 10, 7) == stratified_folds(students, 10, 7)


def test_fold_contents_ignore_row_order(students):
    reversed_rows = students.subset(range(47, -1, -1))

    def contents(dataset):
        folds = stratified_folds(dataset, 10, 3)
        return [sorted(dataset.instances[i].values for i in folds.test_indices(f)) for f in range(10)]

    assert contents(reversed_rows) == contents(students)


def test_train_and_test_partition(students):
    folds = stratified_folds(students, 10, 1)
    for f in range(10):
        assert sorted(folds.train_indices(f) + folds.test_indices(f)) == list(range(48))


@pytest.mark.parametrize("k", [0, 1, 49])
def test_fold_count_out_of_range(students, k):
    with pytest.raises(DomainError, match=r"k must be in \[2, 48\]"):
        stratified_folds(students, k, 1)


def test_missing_class_cannot_be_stratified(students):
    holed = Dataset(
        relation="holed",
        header=students.header,
        instances=(Instance(values=(0, 0, 0, 0, 0, 0, None)),) + students.instances[1:],
    )
    with pytest.raises(DataError):
        stratified_folds(holed, 10, 1)


@pytest.mark.parametrize("algorithm", list(Algorithm))
def test_cross_validation_triple(students, frozen_clock, algorithm):
    report = cross_validate(algorithm, students, k=10, seed=1)
    assert report.n_instances == 48
    assert report.correct + report.incorrect + report.unclassified == 48
    assert report.correct_pct + report.incorrect_pct + report.unclassified_pct == pytest.approx(100.0)
    assert report.matrix.correct == report.correct
    assert report.build_time_seconds == 0.0
    if algorithm != Algorithm.ID3:
        assert report.unclassified == 0


def test_leave_one_out(students):
    report = cross_validate(Algorithm.ID3, students, k=48, seed=3)
    assert report.n_instances == 48
    assert report.k == 48


def test_cross_validation_is_reproducible(students, frozen_clock):
    first = cross_validate(Algorithm.CART, students, seed=5)
    assert cross_validate(Algorithm.CART, students, seed=5) == first


def test_cross_validation_rejects_empty(students):
    with pytest.raises(DomainError):
        cross_validate(Algorithm.C45, students.subset([]))


def test_compare_orders_reports(students, frozen_clock):
    reports = asyncio.run(
        evaluation_controller.compare([Algorithm.CART, Algorithm.ID3], students, LearnerParams(), k=4, seed=2)
    )
    assert [r.algorithm for r in reports] == [Algorithm.ID3, Algorithm.CART]
    assert reports[1] == cross_validate(Algorithm.CART, students, k=4, seed=2)
