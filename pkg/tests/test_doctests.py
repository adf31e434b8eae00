import doctest
import importlib

import pytest

MODULES = ["zastava.ring", "zastava.rootdata", "zastava.qkostant", "zastava.partitions",
           "zastava.pidhom", "zastava.icstalks"]


@pytest.mark.parametrize("name", MODULES)
def test_doctests(name):
    result = doctest.testmod(importlib.import_module(name))
    assert result.failed == 0
