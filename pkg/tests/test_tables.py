from pathlib import Path

import pytest

from triality.checks import NON_GALOIS_FAMILIES, dropped_families
from triality.tables import emit_tables

GOLDEN = Path(__file__).parent / "golden"
ROWS = {1: 6, 2: 8, 3: 6, 4: 5, 5: 5}


@pytest.mark.parametrize("fmt", ["md", "csv"])
@pytest.mark.parametrize("galois", [True, False], ids=["galois", "nongalois"])
@pytest.mark.parametrize("which", [1, 2, 3, 4, 5])
def test_tables_match_golden(which, galois, fmt):
    (table,) = emit_tables((which,), galois=galois)
    name = f"table{which}_{'galois' if galois else 'nongalois'}.{fmt}"
    assert table.render(fmt) == (GOLDEN / name).read_text()


@pytest.mark.parametrize("which, n", sorted(ROWS.items()))
def test_row_counts(which, n):
    (table,) = emit_tables((which,))
    assert len(table.rows) == n


def test_non_galois_drops_exactly_two_families():
    assert dropped_families() == NON_GALOIS_FAMILIES


def test_non_galois_drops_rows_only_where_expected():
    a, b = emit_tables(), emit_tables(galois=False)
    for x, y in zip(a, b):
        kept = [r for r in x.rows if r in y.rows]
        assert kept == list(y.rows)
    # tables 1 and 3 do not list families and are unchanged
    assert a[0].render("md") == b[0].render("md")
    assert a[2].render("md") == b[2].render("md")
    assert [t.number for t in a] == [1, 2, 3, 4, 5]


def test_table_selection_order():
    assert [len(t.rows) for t in emit_tables((5, 1))] == [5, 6]


def test_csv_parses():
    import csv
    import io

    for t in emit_tables():
        rows = list(csv.reader(io.StringIO(t.render("csv"))))
        assert len(rows) == len(t.rows) + 1
        assert all(len(r) == len(rows[0]) for r in rows)
