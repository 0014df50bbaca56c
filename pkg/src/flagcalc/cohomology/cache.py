"""Schubert structure constants of ``H*(G/B)`` and their on-disk tables.

Constants are computed through Borel's presentation: multiply Schubert
polynomials, expand, and keep the ``S_n`` part.  Tables for a fixed
``(n, J, d1, d2)`` are written as line-oriented text::

    flagcalc-structure-constants 1
    n 5
    J -
    d1 1
    d2 2
    pairs 36
    sha256 <hex digest of the body>
    u v w c
    1,3,2,4,5 2,1,3,4,5 2,3,1,4,5 1
    ...

Only nonzero constants are listed, in basis order, so the bytes are a pure
function of the header.  The digest makes any edit detectable; ``verify``
also re-derives a random sample of pairs.
"""

from __future__ import annotations

import hashlib
import os
import random
import threading
from pathlib import Path

from ..polyring import kernel
from ..polyring.schubert import _TABLE as _SCHUBERT, expand_packed
from ..weyl import Permutation
from .spaces import FlagSpace

FORMAT_VERSION = 1
MAGIC = "flagcalc-structure-constants"
ENV_VAR = "FLAGCALC_CACHE_DIR"


class CacheCorruptError(RuntimeError):
    """A cache file failed its digest, parse or re-derivation check."""

    def __init__(self, path, key, reason):
        super().__init__(f"{path}: {reason} (key {key})")
        self.path = path
        self.key = key
        self.reason = reason


class InvariantViolation(ArithmeticError):
    """A mathematical invariant of the engine failed; indicates a bug."""


def cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else Path.home() / ".cache" / "flagcalc"


def product_in_sn(u: Permutation, v: Permutation, n: int) -> dict[Permutation, int]:
    """Coefficients of ``sigma_u sigma_v`` in ``H*(G/B)`` for ``SL(n)``."""
    fu = _SCHUBERT.packed(_code(u))
    fv = _SCHUBERT.packed(_code(v))
    out = {}
    for m, c in expand_packed(kernel.mul(fu, fv)).items():
        w = Permutation.from_code(kernel.exponents(m))
        if w.in_sn(n):
            if c < 0:
                raise InvariantViolation(f"negative structure constant {c} for {u}*{v} at {w}")
            out[w.extended(n)] = c
    return out


def _code(w: Permutation) -> tuple[int, ...]:
    c = w.code
    end = len(c)
    while end and c[end - 1] == 0:
        end -= 1
    return c[:end]


def perm_text(w: Permutation, n: int) -> str:
    return ",".join(map(str, w.extended(n).entries))


def table_filename(space: FlagSpace, d1: int, d2: int) -> str:
    return f"sc-{space.key}-d{d1}-d{d2}.txt"


def basis_of(space: FlagSpace, d: int) -> list[Permutation]:
    from .classes import schubert_basis

    return schubert_basis(space, d)


def _pairs(space: FlagSpace, d1: int, d2: int):
    left = basis_of(space, d1)
    right = basis_of(space, d2)
    for i, u in enumerate(left):
        for j, v in enumerate(right):
            if d1 == d2 and j < i:
                continue
            yield u, v


def render_table(space: FlagSpace, d1: int, d2: int, entries) -> str:
    """Serialize ``entries`` (iterable of ``(u, v, {w: c})``) deterministically."""
    n = space.n
    body_lines = []
    npairs = 0
    for u, v, prod in entries:
        npairs += 1
        for w in sorted(prod, key=_order_key):
            body_lines.append(f"{perm_text(u, n)} {perm_text(v, n)} {perm_text(w, n)} {prod[w]}")
    body = "".join(line + "\n" for line in body_lines)
    digest = hashlib.sha256(body.encode()).hexdigest()
    header = [
        f"{MAGIC} {FORMAT_VERSION}",
        f"n {n}",
        "J " + (",".join(map(str, space.J)) or "-"),
        f"d1 {d1}",
        f"d2 {d2}",
        f"pairs {npairs}",
        f"sha256 {digest}",
        "u v w c",
    ]
    return "\n".join(header) + "\n" + body


def _order_key(w: Permutation):
    return tuple(reversed(w.code)), w.entries


def parse_table(path: Path):
    """Read a table; returns ``(header, {(u, v): {w: c}})`` or raises CacheCorruptError."""
    text = path.read_text()
    lines = text.split("\n")
    if len(lines) < 8:
        raise CacheCorruptError(path, "header", "truncated header")
    head = lines[:8]
    try:
        magic, version = head[0].split()
        if magic != MAGIC or int(version) != FORMAT_VERSION:
            raise ValueError("bad magic/version")
        fields = {}
        for line in head[1:7]:
            k, v = line.split(" ", 1)
            fields[k] = v
        n = int(fields["n"])
        J = () if fields["J"] == "-" else tuple(int(t) for t in fields["J"].split(","))
        d1, d2 = int(fields["d1"]), int(fields["d2"])
        npairs = int(fields["pairs"])
        digest = fields["sha256"]
        if head[7] != "u v w c":
            raise ValueError("missing column header")
    except (ValueError, KeyError) as exc:
        raise CacheCorruptError(path, "header", f"malformed header: {exc}") from None
    body = "\n".join(lines[8:])
    intact = hashlib.sha256(body.encode()).hexdigest() == digest
    table: dict = {}
    first_line: dict = {}
    for lineno, line in enumerate(lines[8:], start=9):
        if not line:
            continue
        try:
            us, vs, ws, cs = line.split()
            key = (Permutation.parse(us), Permutation.parse(vs))
            table.setdefault(key, {})[Permutation.parse(ws)] = int(cs)
            first_line.setdefault(key, lineno)
        except ValueError:
            reason = "digest mismatch" if not intact else "unparseable entry"
            raise CacheCorruptError(path, f"line {lineno}", reason) from None
    space = FlagSpace(n, J)
    if not intact:
        raise CacheCorruptError(path, _locate(space, d1, d2, table, first_line), "digest mismatch")
    header = {"n": n, "J": J, "d1": d1, "d2": d2, "pairs": npairs, "space": space}
    return header, table


def _locate(space, d1, d2, table, first_line) -> str:
    """Name the first stored pair whose product differs from a fresh derivation."""
    n = space.n
    try:
        pairs = list(_pairs(space, d1, d2))
    except Exception:
        return "header"
    for key in sorted(table, key=lambda k: first_line[k]):
        if key not in pairs or table[key] != product_in_sn(*key, n):
            return f"line {first_line[key]}: {perm_text(key[0], n)} {perm_text(key[1], n)}"
    for u, v in pairs:
        if (u, v) not in table and product_in_sn(u, v, n):
            return f"missing pair {perm_text(u, n)} {perm_text(v, n)}"
    return "body"


class StructureStore:
    """In-memory products plus lazily loaded disk tables.

    Tables are write-once: a concurrent recomputation of a missing pair
    produces the same dictionary, so racing writers are harmless.
    """

    def __init__(self):
        self._pairs: dict[tuple, dict] = {}
        self._loaded: set[tuple] = set()
        self._lock = threading.Lock()
        self.stats = {"computed": 0, "memory_hits": 0, "disk_tables": 0}

    def reset(self):
        with self._lock:
            self._pairs.clear()
            self._loaded.clear()
            self.stats = {"computed": 0, "memory_hits": 0, "disk_tables": 0}

    def product(self, u: Permutation, v: Permutation, n: int) -> dict[Permutation, int]:
        key = self._key(n, u, v)
        hit = self._pairs.get(key)
        if hit is not None:
            self.stats["memory_hits"] += 1
            return hit
        self._try_disk(n, *sorted((u.length, v.length)))
        hit = self._pairs.get(key)
        if hit is not None:
            self.stats["memory_hits"] += 1
            return hit
        prod = product_in_sn(u, v, n)
        self.stats["computed"] += 1
        with self._lock:
            return self._pairs.setdefault(key, prod)

    def _key(self, n, u, v):
        a, b = sorted((u.trimmed().entries, v.trimmed().entries))
        return (n, a, b)

    def _try_disk(self, n, d1, d2):
        tkey = (n, d1, d2)
        if tkey in self._loaded:
            return
        self._loaded.add(tkey)
        path = cache_dir() / table_filename(FlagSpace.full_flag(n), d1, d2)
        if not path.exists():
            return
        _, table = parse_table(path)
        with self._lock:
            for (u, v), prod in table.items():
                self._pairs.setdefault(self._key(n, u, v), prod)
        # pairs with empty products are absent from the file but known to be zero
        for u, v in _pairs(FlagSpace.full_flag(n), d1, d2):
            self._pairs.setdefault(self._key(n, u, v), {})
        self.stats["disk_tables"] += 1


STORE = StructureStore()


def build_table(space: FlagSpace, d1: int, d2: int, directory: Path | None = None) -> Path:
    """Compute and write the full ``(d1, d2)`` table for ``space``."""
    from .classes import product_on_space

    directory = Path(directory) if directory else cache_dir()
    directory.mkdir(parents=True, exist_ok=True)
    entries = ((u, v, product_on_space(space, u, v, fresh=True)) for u, v in _pairs(space, d1, d2))
    text = render_table(space, d1, d2, entries)
    path = directory / table_filename(space, d1, d2)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(text)
    tmp.replace(path)
    return path


def build_tables(space: FlagSpace, max_codim: int = 4, directory: Path | None = None) -> list[Path]:
    top = min(max_codim, space.dimension)
    paths = []
    for d1 in range(1, top + 1):
        for d2 in range(d1, top - d1 + 1):
            paths.append(build_table(space, d1, d2, directory))
    return paths


def verify_table(path: Path, fraction: float = 0.05, seed: int = 0) -> int:
    """Digest check plus re-derivation of a random sample; returns #pairs checked."""
    from .classes import product_on_space

    header, table = parse_table(path)
    space, d1, d2 = header["space"], header["d1"], header["d2"]
    pairs = list(_pairs(space, d1, d2))
    if len(pairs) != header["pairs"]:
        raise CacheCorruptError(path, "pairs", f"expected {len(pairs)} pairs, header says {header['pairs']}")
    extra = set(table) - set(pairs)
    if extra:
        u, v = sorted(extra, key=lambda p: (p[0].entries, p[1].entries))[0]
        raise CacheCorruptError(path, f"{perm_text(u, space.n)} {perm_text(v, space.n)}", "pair outside the table range")
    rng = random.Random(seed)
    k = max(1, round(fraction * len(pairs))) if pairs else 0
    sample = rng.sample(pairs, k) if k else []
    for u, v in sample:
        fresh = product_on_space(space, u, v, fresh=True)
        stored = table.get((u, v), {})
        if fresh != stored:
            raise CacheCorruptError(path, f"{perm_text(u, space.n)} {perm_text(v, space.n)}", "re-derived product differs")
    return len(sample)


def list_tables(directory: Path | None = None) -> list[Path]:
    directory = Path(directory) if directory else cache_dir()
    if not directory.is_dir():
        return []
    return sorted(directory.glob("sc-*.txt"))


def clear_tables(directory: Path | None = None) -> int:
    paths = list_tables(directory)
    for p in paths:
        p.unlink()
    STORE.reset()
    return len(paths)
