import random

import pytest

import klheap.heap as H
import klheap.perm as P
from klheap.errors import InputError

HEX_POINTS = (
    (3, 0), (2, 1), (1, 2), (5, 0), (4, 1), (3, 2), (2, 3),
    (6, 1), (5, 2), (4, 3), (3, 4), (7, 2), (6, 3), (5, 4),
)


def test_level_raw():
    assert H.level_raw((2, 1, 3, 2)) == (0, 1, 1, 2)
    assert H.level_raw(()) == ()
    with pytest.raises(InputError):
        H.level_raw((1, 2, 1))  # not 321-avoiding
    with pytest.raises(InputError):
        H.level_raw((1, 1))  # not reduced


def test_build_heap_small():
    h = H.build_heap((2, 1, 3, 2))
    assert h.points == ((2, 0), (1, 1), (3, 1), (2, 2))
    assert h.components == ((1, 2, 3, 4),)
    assert h.point(1) == (2, 0)


def test_build_heap_empty():
    h = H.build_heap(())
    assert h.points == ()
    assert h.components == ()
    assert H.render_ascii(h) == ""


def test_build_heap_coalesces_components():
    # three components: a lone letter far right, a chain, and a block that
    # must be shifted down to sit against the chain
    h = H.build_heap((9, 6, 7, 8, 2, 1, 3, 2, 4, 5, 6))
    assert h.components == ((1,), (2, 3, 4), (5, 6, 7, 8, 9, 10, 11))
    assert h.points == (
        (9, 3),
        (6, 2), (7, 3), (8, 4),
        (2, 0), (1, 1), (3, 1), (2, 2), (4, 2), (5, 3), (6, 4),
    )


def test_build_heap_hexagon_word():
    h = H.build_heap(P.HEXAGON_WORD)
    assert h.points == HEX_POINTS
    assert h.components == (tuple(range(1, 15)),)


def test_build_heap_rejects_bad_words():
    with pytest.raises(InputError):
        H.build_heap((1, 2, 1))
    with pytest.raises(InputError):
        H.build_heap((2, 2))


def test_cone_points_frozen():
    h = H.build_heap(P.HEXAGON_WORD)
    lower = H.cone_points(h, 6, "lower")
    assert sorted(lower.positions) == [1, 2, 4, 5, 6]
    assert sorted(lower.boundary) == [2, 4, 5, 6]
    upper = H.cone_points(h, 6, "upper")
    assert sorted(upper.positions) == [6, 7, 10, 11, 14]
    assert sorted(upper.boundary) == [6, 7, 10, 14]


def test_cone_points_apex_is_boundary():
    h = H.build_heap((2, 1, 3, 2))
    for j in range(1, 5):
        for direction in ("lower", "upper"):
            cone = H.cone_points(h, j, direction)
            assert j in cone.positions
            assert j in cone.boundary
            assert cone.boundary <= cone.positions


def test_cone_points_errors():
    h = H.build_heap((2, 1, 3, 2))
    with pytest.raises(InputError):
        H.cone_points(h, 5, "lower")
    with pytest.raises(InputError):
        H.cone_points(h, 0, "upper")
    with pytest.raises(InputError):
        H.cone_points(h, 1, "down")


def test_render_ascii_plain():
    h = H.build_heap((2, 1, 3, 2))
    assert H.render_ascii(h) == "1 2 3\n  o\no   o\n  o"


def test_render_ascii_with_mask():
    h = H.build_heap((2, 1, 3, 2))
    # zero-defect at position 4
    assert H.render_ascii(h, (1, 0, 0, 0)) == "1 2 3\n  o\n.   .\n  *"
    # one-defect at position 4
    assert H.render_ascii(h, (1, 0, 0, 1)) == "1 2 3\n  o\n.   .\n  #"


def test_heap_json():
    h = H.build_heap((2, 1, 3, 2))
    assert H.heap_json(h) == {
        "word": [2, 1, 3, 2],
        "points": [[2, 0], [1, 1], [3, 1], [2, 2]],
        "components": [[1, 2, 3, 4]],
    }


def _commutation_shuffle(a, rng, moves=60):
    a = list(a)
    for _ in range(moves):
        j = rng.randrange(len(a) - 1) if len(a) > 1 else 0
        if len(a) > 1 and abs(a[j] - a[j + 1]) > 1:
            a[j], a[j + 1] = a[j + 1], a[j]
    return tuple(a)


def test_embedding_is_word_independent():
    # the embedded point multiset and the component point-sets must not
    # depend on which reduced word (commutation class) produced them
    rng = random.Random(7)
    for n in (4, 5, 6, 7, 8):
        for _ in range(20):
            w = rng.choice(list(P.all_321_avoiding(n)))
            a = P.canonical_reduced_word(w)
            if not a:
                continue
            h = H.build_heap(a)
            base_pts = sorted(h.points)
            base_comps = sorted(
                sorted(h.points[j - 1] for j in comp) for comp in h.components
            )
            for _ in range(3):
                b = _commutation_shuffle(a, rng)
                assert P.apply_word(b, n) == w
                g = H.build_heap(b)
                assert sorted(g.points) == base_pts
                assert (
                    sorted(sorted(g.points[j - 1] for j in comp) for comp in g.components)
                    == base_comps
                )


def test_levels_respect_word_order():
    rng = random.Random(11)
    for n in (5, 6, 7):
        for _ in range(30):
            w = rng.choice(list(P.all_321_avoiding(n)))
            a = P.canonical_reduced_word(w)
            h = H.build_heap(a)
            assert all(c == a[j] for j, (c, _) in enumerate(h.points))
            levels = [l for _, l in h.points]
            assert min(levels, default=0) == 0
            for j in range(len(a)):
                for k in range(j + 1, len(a)):
                    if abs(a[j] - a[k]) <= 1:
                        assert levels[j] < levels[k]
