import pathlib

import pytest

from semialg import AffineSemigroup

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

BIG15 = [1051, 1071, 1087, 1099, 1129, 1139, 1199, 1207, 1211, 1213,
         3331, 4325, 5511, 10311, 11421]

A47 = [[3, 1, 1, 1], [1, 3, 1, 1], [1, 1, 3, 1], [1, 1, 1, 3],
       [2, 0, 4, 0], [4, 0, 2, 0], [1, 1, 2, 2]]

A29 = [[6, 1], [6, 2], [6, 3], [7, 2], [7, 3], [8, 2], [8, 3], [9, 3], [10, 3]]


@pytest.fixture(scope="session")
def s8():
    return AffineSemigroup([[8], [11], [18]])


@pytest.fixture(scope="session")
def curve():
    return AffineSemigroup([[4, 0], [3, 1], [1, 3], [0, 4]])


@pytest.fixture(scope="session")
def m4x7():
    return AffineSemigroup(A47, E=[0, 1, 2, 3, 4, 5])


@pytest.fixture(scope="session")
def m2x9():
    return AffineSemigroup(A29, E=[0, 2])


@pytest.fixture(scope="session")
def conic():
    return AffineSemigroup([[1, 0], [1, 1], [1, 2]], E=[0, 2])


@pytest.fixture(scope="session")
def big15():
    return AffineSemigroup([[v] for v in BIG15], E=[0])
