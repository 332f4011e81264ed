"""Shared loaders for the bundled fixture files."""

import pytest

from symq.serialize import (
    fixture_path,
    load_cochain,
    load_group,
    load_module,
    load_rack,
)


def rack(name):
    return load_rack(fixture_path(f"rack_{name}.json"))


def module(name, base):
    return load_module(fixture_path(f"module_{name}.json"), base)


def cochain(name, base, m):
    return load_cochain(fixture_path(f"cocycle_{name}.json"), base.size, m.A)


@pytest.fixture
def t2():
    return rack("t2")


@pytest.fixture
def core_z4():
    return rack("core_z4")
