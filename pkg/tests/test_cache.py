import pytest

from flagcalc.cohomology import CacheCorruptError, FlagSpace, STORE, CohomClass, cup_product
from flagcalc.cohomology import cache as sc
from flagcalc.weyl import Permutation as P


def test_tables_are_bit_reproducible(isolated_cache, tmp_path):
    a = sc.build_tables(FlagSpace.full_flag(5), 4, tmp_path / "a")
    b = sc.build_tables(FlagSpace.full_flag(5), 4, tmp_path / "b")
    assert [p.name for p in a] == [p.name for p in b]
    assert all(x.read_bytes() == y.read_bytes() for x, y in zip(a, b))
    assert [p.name for p in a] == [f"sc-n5-Jnone-d{i}-d{j}.txt" for i, j in [(1, 1), (1, 2), (1, 3), (2, 2)]]


def test_header_and_round_trip(isolated_cache):
    space = FlagSpace.full_flag(4)
    path = sc.build_table(space, 1, 2)
    lines = path.read_text().splitlines()
    assert lines[0] == "flagcalc-structure-constants 1"
    assert lines[1:6] == ["n 4", "J -", "d1 1", "d2 2", f"pairs {3 * 5}"]
    header, table = sc.parse_table(path)
    assert header["space"] == space
    for (u, v), prod in table.items():
        assert prod == sc.product_in_sn(u, v, 4)


def test_store_reads_tables(isolated_cache):
    sc.build_tables(FlagSpace.full_flag(5), 4)
    STORE.reset()
    g = FlagSpace.full_flag(5)
    a = CohomClass.sigma(g, P(1, 3, 2))
    cup_product(a, a)
    assert STORE.stats["disk_tables"] == 1 and STORE.stats["computed"] == 0


def test_partial_flag_table(isolated_cache):
    path = sc.build_table(FlagSpace.grassmannian(2, 5), 1, 2)
    assert "J 1,3,4" in path.read_text()
    assert sc.verify_table(path, fraction=1.0) == 2


def test_verify_detects_edit(isolated_cache):
    path = sc.build_table(FlagSpace.full_flag(4), 1, 1)
    text = path.read_text().splitlines()
    body = text[8]
    u, v, w, c = body.split()
    text[8] = f"{u} {v} {w} {int(c) + 1}"
    path.write_text("\n".join(text) + "\n")
    with pytest.raises(CacheCorruptError) as exc:
        sc.verify_table(path)
    assert exc.value.reason == "digest mismatch"


def test_verify_detects_consistent_forgery(isolated_cache):
    """A rewritten body with a matching digest is still caught by re-derivation."""
    space = FlagSpace.full_flag(3)
    pairs = list(sc._pairs(space, 1, 1))
    entries = [(u, v, {w: c + 1 for w, c in sc.product_in_sn(u, v, 3).items()}) for u, v in pairs]
    path = isolated_cache / sc.table_filename(space, 1, 1)
    isolated_cache.mkdir(parents=True, exist_ok=True)
    path.write_text(sc.render_table(space, 1, 1, entries))
    with pytest.raises(CacheCorruptError) as exc:
        sc.verify_table(path, fraction=1.0)
    assert exc.value.reason == "re-derived product differs"
    assert "," in exc.value.key


def test_truncated_file(isolated_cache):
    isolated_cache.mkdir(parents=True, exist_ok=True)
    bad = isolated_cache / "sc-n4-Jnone-d1-d1.txt"
    bad.write_text("flagcalc-structure-constants 1\nn 4\n")
    with pytest.raises(CacheCorruptError):
        sc.parse_table(bad)


def test_clear(isolated_cache):
    sc.build_tables(FlagSpace.full_flag(4), 2)
    assert sc.clear_tables() == 1
    assert sc.list_tables() == []
