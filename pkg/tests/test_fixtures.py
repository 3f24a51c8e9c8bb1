from __future__ import annotations

import pytest

from cayleyrec.fixtures import FIXTURES, mismatches


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_expectations_reverify(name):
    assert mismatches(FIXTURES[name]) == {}
