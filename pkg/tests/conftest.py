import pytest

import datasets


@pytest.fixture(scope="session")
def classroom():
    return datasets.graph(datasets.classroom_db())


@pytest.fixture(scope="session")
def physics():
    return datasets.graph(datasets.physics_db())


@pytest.fixture(scope="session")
def two_departments():
    return datasets.graph(datasets.two_departments_db())


@pytest.fixture(scope="session")
def department_variant():
    return datasets.graph(datasets.department_variant_db())


def node_id(h, name):
    return h.node_names.index(name)


def names(h, ids):
    return sorted(h.node_names[v] for v in ids)
