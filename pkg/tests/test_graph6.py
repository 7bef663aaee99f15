import pytest
from hypothesis import given, settings

from graphenergy import (
    Graph,
    Graph6ParseError,
    ScaleError,
    graph6_decode,
    graph6_encode,
    make_complete,
    make_cycle,
    make_star,
)
from graphenergy.census import enumerate_connected

from test_graphs import graph_strategy


def test_k4_hand_encoding():
    # n=4 -> chr(63+4)='C'; upper triangle column-major is six 1-bits,
    # one 6-bit group 0b111111 = 63 -> chr(63+63) = '~'
    assert graph6_encode(make_complete(4)) == "C~"


def test_k1():
    g = Graph(1, (0,))
    assert graph6_encode(g) == "@"
    assert graph6_decode("@").adj == (0,)


@given(graph_strategy(min_n=1, max_n=12))
@settings(max_examples=150, deadline=None)
def test_roundtrip_identity(g):
    assert graph6_decode(graph6_encode(g)).adj == g.adj


def test_roundtrip_on_census():
    for s in enumerate_connected(7, 10).graphs:
        assert graph6_encode(graph6_decode(s)) == s


def test_header_stripping():
    s = ">>graph6<<" + graph6_encode(make_cycle(5))
    assert graph6_decode(s).adj == make_cycle(5).adj


@pytest.mark.parametrize(
    "bad",
    ["", "C", "C~~", "C\x1f", "?A"],
)
def test_malformed_inputs(bad):
    with pytest.raises(Graph6ParseError):
        graph6_decode(bad)


def test_parse_error_carries_offset():
    with pytest.raises(Graph6ParseError) as err:
        graph6_decode("")
    assert err.value.offset == 0


def test_nonzero_padding_rejected():
    # C5 uses 10 of 12 bits; flip the final padding bit of the last data byte
    good = graph6_encode(make_cycle(5))
    bad = good[:-1] + chr(ord(good[-1]) ^ 1)
    with pytest.raises(Graph6ParseError):
        graph6_decode(bad)


def test_order_beyond_limit():
    with pytest.raises(ScaleError):
        graph6_decode(chr(63 + 63))  # long-form marker
    with pytest.raises(Graph6ParseError):
        graph6_decode(chr(62))  # below the size range


def test_star_roundtrip_large():
    g = make_star(40)
    assert graph6_decode(graph6_encode(g)).adj == g.adj
