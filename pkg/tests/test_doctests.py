from __future__ import annotations

import doctest
import sys

import pytest

MODULES = [
    "starroute.perm",
    "starroute.topology",
    "starroute.classify",
    "starroute.routing",
    "starroute.oracle",
    "starroute.harness",
]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    __import__(name)
    # fetch from sys.modules: some submodule names are shadowed by
    # same-named function re-exports on the package object
    module = sys.modules[name]
    failures, attempted = doctest.testmod(module)
    assert failures == 0
    if name != "starroute.routing":
        assert attempted > 0, "doctests went missing"
