import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracescreen import (
    ParseError,
    format_record,
    gen_cactus,
    gen_connected,
    parse_stream,
    write_records,
)


def parse_text(text, **kw):
    return list(parse_stream(io.StringIO(text), **kw))


def test_single_edge_record():
    records = parse_text("t # 0\nv 0 C\nv 1 C\ne 0 1 1\n")
    assert len(records) == 1
    rec = records[0]
    assert rec.id == "0"
    assert rec.graph.vertex_count == 2
    assert rec.graph.edges == ((0, 1),)
    assert rec.duplicate_edge_warnings == 0


def test_triangle_record():
    records = parse_text(
        "t # 7\nv 0 C\nv 1 C\nv 2 C\ne 0 1 1\ne 1 2 1\ne 2 0 1\n"
    )
    assert records[0].id == "7"
    assert records[0].graph.edges == ((0, 1), (0, 2), (1, 2))


def test_multiple_records_in_order():
    text = "t # a\nv 0 X\nt # b\nv 0 X\nv 1 X\ne 0 1 Y\nt # c\n"
    records = parse_text(text)
    assert [r.id for r in records] == ["a", "b", "c"]
    assert [r.graph.vertex_count for r in records] == [1, 2, 0]


def test_out_of_range_endpoint():
    with pytest.raises(ParseError) as exc:
        parse_text("t # 1\nv 0 C\ne 0 5 1\n")
    assert exc.value.line == 3
    assert "out of range" in exc.value.message


def test_self_loop_rejected():
    with pytest.raises(ParseError) as exc:
        parse_text("t # 1\nv 0 C\nv 1 C\ne 1 1 1\n")
    assert exc.value.line == 4
    assert "self-loop" in exc.value.message


def test_duplicate_edges_counted():
    records = parse_text(
        "t # d\nv 0 C\nv 1 C\ne 0 1 1\ne 0 1 2\ne 1 0 1\n"
    )
    assert records[0].duplicate_edge_warnings == 2
    assert records[0].graph.edges == ((0, 1),)


def test_malformed_lines():
    bad = [
        "t #\n",                      # missing id
        "t  # 0\n",                   # double space
        "x 0 1\n",                    # unknown kind
        "t # 0\nv 1 C\n",             # index not consecutive
        "t # 0\nv 0\n",               # missing label
        "t # 0\nv 0 C\nv 1 C\ne 0 1\n",    # edge missing label
        "t # 0\nv 0 C\nv 1 C\ne 0 1 1 1\n",  # extra token
        "t # 0\nv 0 C\nv 1 C\ne 0 -1 1\n",   # negative endpoint
        "v 0 C\n",                    # data before first header
        "t # 0\nv 0 C\nv 1 C\ne 0 1 1\nv 2 C\n",  # v after e
    ]
    for text in bad:
        with pytest.raises(ParseError):
            parse_text(text)


def test_blank_lines_ignored():
    records = parse_text("\n\nt # 0\n\nv 0 C\n   \nv 1 C\ne 0 1 1\n\n")
    assert records[0].graph.edges == ((0, 1),)


def test_no_trailing_newline():
    records = parse_text("t # 0\nv 0 C\nv 1 C\ne 0 1 1")
    assert records[0].graph.edges == ((0, 1),)


def test_empty_input():
    assert parse_text("") == []


def test_lenient_skips_bad_record_resumes_at_next():
    text = (
        "t # good1\nv 0 C\nv 1 C\ne 0 1 1\n"
        "t # bad\nv 0 C\ne 0 9 1\nv 1 C\n"
        "t # good2\nv 0 C\n"
    )
    with pytest.raises(ParseError):
        parse_text(text)
    records = parse_text(text, lenient=True)
    assert [r.id for r in records] == ["good1", "good2"]


def test_lenient_bad_header_drops_following_record():
    text = "t # ok\nv 0 C\nt #\nv 0 C\ne 0 0 1\nt # ok2\nv 0 C\n"
    records = parse_text(text, lenient=True)
    assert [r.id for r in records] == ["ok", "ok2"]


def test_ids_are_arbitrary_strings():
    records = parse_text("t # mol-17:a\nv 0 C\n")
    assert records[0].id == "mol-17:a"


def test_format_record_exact_bytes():
    g = gen_connected(2, 1, seed=0)
    assert format_record("0", g) == "t # 0\nv 0 0\nv 1 0\ne 0 1 0\n"


def test_write_records_roundtrip_count():
    graphs = [(str(i), gen_cactus(6, 0.5, i)) for i in range(4)]
    buf = io.StringIO()
    assert write_records(buf, graphs) == 4
    records = parse_text(buf.getvalue())
    assert [r.id for r in records] == ["0", "1", "2", "3"]
    for (rid, g), rec in zip(graphs, records):
        assert rec.graph == g


@given(st.lists(
    st.tuples(st.integers(min_value=1, max_value=12),
              st.integers(min_value=0, max_value=2**32)),
    max_size=8,
))
@settings(max_examples=100)
def test_roundtrip_random_mixtures(specs):
    pairs = []
    for i, (n, seed) in enumerate(specs):
        max_m = n * (n - 1) // 2
        m = min(n - 1 + seed % 5, max_m)
        pairs.append((f"g{i}", gen_connected(n, m, seed)))
    buf = io.StringIO()
    write_records(buf, pairs)
    parsed = parse_text(buf.getvalue())
    assert len(parsed) == len(pairs)
    for (rid, g), rec in zip(pairs, parsed):
        assert rec.id == rid
        assert rec.graph == g
        assert rec.duplicate_edge_warnings == 0
