"""Exit criteria. Each test records one PASS/FAIL line, printed in the pytest summary."""

from __future__ import annotations

import contextlib
import random
import time

import pytest

from projroute import (
    build_projection,
    build_table,
    dump_table,
    enumerate_shortest_paths,
    load_table,
    parse_bracket,
    serialize_table,
    shortest_path,
    shortest_path_checked,
    to_bracket,
)
from projroute.cli import main
from projroute.oracle import all_simple_paths, bfs_distances, diameter, eccentricity
from projroute.query import UNREACHABLE, distance
from projroute.table import validate
from projroute.verify import random_family

from .conftest import FIXTURES, PAPER_PROJECTIONS, canonical, paper_graph, table_for
from .test_table import PAPER_ROW0, parse_row

RESULTS: dict[str, str] = {}


@contextlib.contextmanager
def criterion(key: str, title: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        RESULTS[key] = f"FAIL  {key} {title}"
        raise
    RESULTS[key] = f"PASS  {key} {title} ({time.perf_counter() - start:.2f}s)"


def test_ac1_projection_goldens():
    with criterion("AC1", "six paper projections byte-exact, < 1 s"):
        start = time.perf_counter()
        for (name, s), printed in PAPER_PROJECTIONS.items():
            proj = build_projection(paper_graph(name), s)
            assert to_bracket(proj) == canonical(printed), (name, s)
            assert not proj.truncated
        assert time.perf_counter() - start < 1.0


def test_ac2_table_goldens():
    with criterion("AC2", "row 0 of Tables 1a/1б/2a/2б; cells = printed parent-child pairs"):
        for name in ("fig1", "fig2"):
            for s in (1, 3):
                assert table_for(name, s).row0 == parse_row(PAPER_ROW0[(name, s)])
        for (name, s), printed in PAPER_PROJECTIONS.items():
            tree = parse_bracket(printed)
            pairs: dict[tuple[int, int], set[int]] = {}
            for depth, level in enumerate(tree.levels()):
                for v, parent in level:
                    if parent is not None:
                        pairs.setdefault((depth, v), set()).add(parent)
            tbl = table_for(name, s)
            assert {k: set(v) for k, v in tbl.cells.items()} == pairs
            assert all(list(v) == sorted(v) for v in tbl.cells.values())


def test_ac3_path_goldens():
    with criterion("AC3", "R(1,5), R(5,1) on both graphs; directed asymmetry"):
        got = {
            (name, s, t): shortest_path(table_for(name, s), t)[0].vertices
            for name in ("fig1", "fig2")
            for s, t in ((1, 5), (5, 1))
        }
        assert got[("fig1", 1, 5)] == (1, 2, 3, 5)
        assert got[("fig1", 5, 1)] == (5, 3, 2, 1)
        assert got[("fig2", 1, 5)] == (1, 2, 3, 5)
        assert got[("fig2", 5, 1)] == (5, 3, 4, 1)
        assert got[("fig1", 1, 5)] == got[("fig1", 5, 1)][::-1]
        assert got[("fig2", 1, 5)] != got[("fig2", 5, 1)][::-1]


def _check_instance(g, s, dist, d_max):
    """Oracle agreement and complexity bounds for one (graph, source)."""
    proj = build_projection(g, s)
    assert not proj.truncated
    tbl = build_table(proj)
    validate(tbl, g)
    assert proj.l_full == eccentricity(g, s)
    assert tbl.rows == proj.l_full + 1 <= d_max + 1
    for t in g.vertices:
        want = dist.get(t, UNREACHABLE)
        assert distance(tbl, t) == want
        if want is UNREACHABLE:
            continue
        path, stats = shortest_path(tbl, t)
        assert path.source == s and path.target == t
        assert path.length == want
        assert path.is_simple() and path.is_valid_in(g)
        assert stats.cells_touched == want + 1 <= d_max + 1
    return tbl


def test_ac4_oracle_equivalence():
    with criterion("AC4", "500 random graphs n<=40: distances, paths, l_full vs oracles, < 60 s"):
        start = time.perf_counter()
        rng = random.Random(20240)
        graphs = list(random_family(seed=4242, count=500))
        assert len(graphs) >= 500
        assert {g.directed for g in graphs} == {True, False}
        checked = 0
        for g in graphs:
            d_max = diameter(g)
            sources = g.vertices if g.n <= 12 else sorted(rng.sample(g.vertices, 5))
            for s in sources:
                _check_instance(g, s, bfs_distances(g, s), d_max)
                checked += 1
        assert checked > 500
        assert time.perf_counter() - start < 60.0


def test_ac5_enumeration_completeness():
    with criterion("AC5", ">=100 random graphs n<=9: enumeration = brute force for all pairs"):
        graphs = list(random_family(seed=909, count=120, n_range=(1, 9)))
        assert len(graphs) >= 100
        for g in graphs:
            for s in g.vertices:
                tbl = build_table(build_projection(g, s))
                dist = bfs_distances(g, s)
                for t in g.vertices:
                    if t not in dist:
                        continue
                    listed = enumerate_shortest_paths(tbl, t, limit=10**9)
                    assert {p.vertices for p in listed} == all_simple_paths(g, s, t, dist[t])
                    assert len(listed) == len({p.vertices for p in listed})


def test_ac6_complexity_bounds_paper_and_dense():
    with criterion("AC6", "rows = l_full+1 <= d+1 and cells_touched = dist+1 on every instance"):
        for name in ("fig1", "fig2"):
            g = paper_graph(name)
            d_max = diameter(g)
            for s in g.vertices:
                tbl = _check_instance(g, s, bfs_distances(g, s), d_max)
                assert tbl.stats()["cells"] <= tbl.rows * g.n
        for g in random_family(seed=66, count=60, n_range=(2, 25)):
            d_max = diameter(g)
            for s in g.vertices[:4]:
                _check_instance(g, s, bfs_distances(g, s), d_max)


def test_ac7_parser_round_trip():
    with criterion("AC7", "parse(to_bracket(p)) = p for 1000 random projections and the six strings"):
        count = 0
        for g in random_family(seed=77, count=420, n_range=(1, 14)):
            for s in g.vertices[:3]:
                proj = build_projection(g, s)
                again = parse_bracket(to_bracket(proj))
                assert again == proj and again.l_full == proj.l_full
                count += 1
        assert count >= 1000
        for printed in PAPER_PROJECTIONS.values():
            assert to_bracket(parse_bracket(printed)) == canonical(printed)
            assert parse_bracket(printed) == parse_bracket(canonical(printed))


def test_ac8_dynamic_behaviour():
    with criterion("AC8", "remove (3,5): checked walk finds a length-3 detour; rebuild = fresh BFS"):
        g = paper_graph("fig1")
        tbl = build_table(build_projection(g, 1))
        g.remove_edge(3, 5)
        path, stats = shortest_path_checked(tbl, g, 5)
        assert path.length == 3
        assert path.is_simple() and path.is_valid_in(g)
        assert (3, 5) not in zip(path.vertices, path.vertices[1:])
        assert stats.stale
        rebuilt = build_table(build_projection(g, 1))
        fresh = bfs_distances(g, 1)
        assert {t: lv[0] for t, lv in rebuilt.row0.items()} == fresh
        assert not shortest_path(rebuilt, 5, g)[1].stale


@pytest.mark.parametrize("name, s", [(n, s) for n in ("fig1", "fig2") for s in (1, 3, 5)])
def test_ac9_format_goldens(name, s, capsys):
    with criterion(f"AC9[{name}_s{s}]", "dump and .ptab byte-match fixtures; load . serialize = id"):
        tbl = table_for(name, s)
        ptab = FIXTURES / f"{name}_s{s}.ptab"
        assert serialize_table(tbl) == ptab.read_text()
        assert load_table(ptab.read_text()) == tbl
        assert dump_table(tbl) == (FIXTURES / f"{name}_s{s}.tsv").read_text()
        assert main(["dump", "--table", str(ptab)]) == 0
        assert capsys.readouterr().out == (FIXTURES / f"{name}_s{s}.tsv").read_text()
