import pytest

from balident.sequences import SequenceCache


@pytest.fixture
def cache():
    return SequenceCache()
