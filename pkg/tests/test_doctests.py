import doctest

import klheap.perm
import klheap.qpoly


def test_perm_doctests():
    result = doctest.testmod(klheap.perm)
    assert result.attempted > 0
    assert result.failed == 0


def test_qpoly_doctests():
    result = doctest.testmod(klheap.qpoly)
    assert result.attempted > 0
    assert result.failed == 0
