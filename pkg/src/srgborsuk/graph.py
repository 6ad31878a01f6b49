"""Graph storage, graph6 I/O, strong-regularity checks and a small SRG corpus.

Adjacency is held as one Python ``int`` bitset per row, so neighbourhood
intersections are a single ``&`` followed by ``int.bit_count``.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DataVerificationError,
    Graph6Error,
    InvalidGeneratorArgument,
    MalformedHeader,
    TrailingGarbage,
    TruncatedBitSection,
    VertexOutOfRange,
)
from .params import SrgParams

DATA_ENV = "SRGBORSUK_DATA"
G2_4_FILE = "g2_4.g6"
G2_4_PARAMS = SrgParams(416, 100, 36, 20)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0 or len(rows) != n:
            raise ValueError("row count must equal n")
        full = (1 << n) - 1
        rows = tuple(int(r) for r in rows)
        for i, r in enumerate(rows):
            if r & ~full:
                raise ValueError(f"row {i} has bits beyond n={n}")
            if (r >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in _bits(r):
                if not (rows[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at ({i},{j})")
        self.n = n
        self.rows = rows
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, rows)

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        n = a.shape[0]
        rows = []
        for i in range(n):
            rows.append(sum(1 << int(j) for j in np.flatnonzero(a[i])))
        return cls(n, rows)

    def adjacent(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def neighbors(self, u: int) -> list[int]:
        self._check(u)
        return _bits(self.rows[u])

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.rows[i] >> (i + 1) << (i + 1))]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def to_numpy(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for i, r in enumerate(self.rows):
            a[i, _bits(r)] = 1
        return a

    def _check(self, *vertices: int) -> None:
        for u in vertices:
            if not isinstance(u, (int, np.integer)) or not 0 <= u < self.n:
                raise VertexOutOfRange(f"vertex {u} not in [0, {self.n})", vertex=u)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.num_edges()})"


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"n={n} too large for graph6")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise MalformedHeader("empty input")
    for pos, byte in enumerate(data[:8]):
        if not 63 <= byte <= 126:
            raise MalformedHeader(f"byte {byte} at offset {pos} outside [63,126]")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedHeader("truncated 8-byte size field")
        n = 0
        for byte in data[2:8]:
            n = (n << 6) | (byte - 63)
        return n, 8
    if len(data) < 4:
        raise MalformedHeader("truncated 4-byte size field")
    n = 0
    for byte in data[1:4]:
        n = (n << 6) | (byte - 63)
    return n, 4


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    if text.startswith(b">>graph6<<"):
        text = text[10:]
    n, pos = _decode_size(text)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[pos:]
    if len(body) < nbytes:
        raise TruncatedBitSection(f"need {nbytes} data bytes for n={n}, got {len(body)}")
    if len(body) > nbytes:
        raise TrailingGarbage(f"{len(body) - nbytes} unexpected bytes after the bit section")
    if any(not 63 <= b <= 126 for b in body):
        raise Graph6Error("data byte outside [63,126]")
    bits = [((b - 63) >> s) & 1 for b in body for s in range(5, -1, -1)]
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        col = bits[idx:idx + j]
        idx += j
        for i, bit in enumerate(col):
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)


def write_graph6(graph: Graph) -> bytes:
    n = graph.n
    if n < 1:
        raise ValueError("graph6 needs n >= 1")
    bits = []
    for j in range(1, n):
        col = graph.rows[j]
        bits.extend((col >> i) & 1 for i in range(j))
    bits.extend([0] * ((-len(bits)) % 6))
    body = bytes(
        63 + (bits[t] << 5 | bits[t + 1] << 4 | bits[t + 2] << 3 | bits[t + 3] << 2 | bits[t + 4] << 1 | bits[t + 5])
        for t in range(0, len(bits), 6)
    )
    return _encode_size(n) + body


def read_graph6_file(path: str | os.PathLike) -> Graph:
    data = Path(path).read_bytes().strip()
    lines = data.splitlines()
    if len(lines) != 1:
        raise TrailingGarbage(f"{path}: expected exactly one graph, found {len(lines)} lines")
    return parse_graph6(lines[0])


def write_graph6_file(path: str | os.PathLike, graph: Graph) -> None:
    Path(path).write_bytes(write_graph6(graph) + b"\n")


# ---------------------------------------------------------------------------
# strong regularity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SrgVerification:
    is_regular: bool
    params: SrgParams | None
    witness: tuple[int, int] | None = None
    reason: str = ""

    @property
    def is_srg(self) -> bool:
        return self.params is not None


def verify_srg(graph: Graph) -> SrgVerification:
    """Decide strong regularity by scanning every vertex pair."""
    n = graph.n
    if n < 4:
        raise ValueError("verify_srg needs at least 4 vertices")
    rows = graph.rows
    deg = graph.degrees()
    k = deg[0]
    for u in range(1, n):
        if deg[u] != k:
            return SrgVerification(False, None, (0, u), f"degree {deg[0]} at 0 but {deg[u]} at {u}")
    if k == 0 or k == n - 1:
        return SrgVerification(True, None, None, "empty or complete graph")
    lam = mu = None
    for i in range(n):
        ri = rows[i]
        for j in range(i + 1, n):
            c = (ri & rows[j]).bit_count()
            if (ri >> j) & 1:
                if lam is None:
                    lam = c
                elif c != lam:
                    return SrgVerification(True, None, (i, j), f"adjacent pair has {c} common neighbours, expected {lam}")
            else:
                if mu is None:
                    mu = c
                elif c != mu:
                    return SrgVerification(True, None, (i, j), f"nonadjacent pair has {c} common neighbours, expected {mu}")
    if mu == 0:
        return SrgVerification(True, None, None, "mu = 0 (disjoint union of cliques)")
    return SrgVerification(True, SrgParams(n, k, lam, mu))


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph, relabelled by ascending original index."""
    vs = sorted(set(vertices))
    graph._check(*vs)
    pos = {u: t for t, u in enumerate(vs)}
    keep = sum(1 << u for u in vs)
    rows = []
    for u in vs:
        rows.append(sum(1 << pos[w] for w in _bits(graph.rows[u] & keep)))
    return Graph(len(vs), rows)


def local_subgraph(graph: Graph, u: int) -> Graph:
    graph._check(u)
    return induced_subgraph(graph, _bits(graph.rows[u]))


def _require_list(graph: Graph, vertices: Sequence[int]) -> None:
    if not vertices:
        raise ValueError("vertex list must be nonempty")
    graph._check(*vertices)


def common_neighbors(graph: Graph, vertices: Sequence[int]) -> list[int]:
    _require_list(graph, vertices)
    mask = (1 << graph.n) - 1
    for u in vertices:
        mask &= graph.rows[u]
    return _bits(mask)


def common_neighbor_count(graph: Graph, vertices: Sequence[int]) -> int:
    _require_list(graph, vertices)
    mask = (1 << graph.n) - 1
    for u in vertices:
        mask &= graph.rows[u]
    return mask.bit_count()


def common_nonneighbor_set(graph: Graph, vertices: Sequence[int]) -> list[int]:
    _require_list(graph, vertices)
    mask = (1 << graph.n) - 1
    for u in vertices:
        mask &= ~(graph.rows[u] | (1 << u))
    return _bits(mask)


def is_triangle_free(graph: Graph) -> bool:
    rows = graph.rows
    for i in range(graph.n):
        upper = rows[i] >> (i + 1) << (i + 1)
        for j in _bits(upper):
            if upper & rows[j]:
                return False
    return True


def is_clique(graph: Graph, vertices: Sequence[int]) -> bool:
    vs = list(vertices)
    return all(graph.adjacent(a, b) for a, b in itertools.combinations(vs, 2))


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def complement(graph: Graph) -> Graph:
    full = (1 << graph.n) - 1
    return Graph(graph.n, [full & ~r & ~(1 << i) for i, r in enumerate(graph.rows)])


def petersen() -> Graph:
    """Kneser graph K(5,2); vertex t is the t-th 2-subset of {0..4} in lexicographic order."""
    pairs = list(itertools.combinations(range(5), 2))
    return Graph.from_edges(
        10, [(a, b) for a, b in itertools.combinations(range(10), 2) if not set(pairs[a]) & set(pairs[b])]
    )


def triangular(m: int) -> Graph:
    """Line graph of K_m, vertices labelled by lexicographic 2-subsets."""
    if not isinstance(m, int) or m < 4:
        raise InvalidGeneratorArgument(f"triangular(m) needs integer m >= 4, got {m!r}")
    pairs = list(itertools.combinations(range(m), 2))
    return Graph.from_edges(
        len(pairs),
        [(a, b) for a, b in itertools.combinations(range(len(pairs)), 2) if set(pairs[a]) & set(pairs[b])],
    )


def lattice(m: int) -> Graph:
    """Rook's graph on an m x m board; vertex ``i*m + j`` is cell (i, j)."""
    if not isinstance(m, int) or m < 2:
        raise InvalidGeneratorArgument(f"lattice(m) needs integer m >= 2, got {m!r}")
    n = m * m
    return Graph.from_edges(
        n,
        [(a, b) for a, b in itertools.combinations(range(n), 2) if a // m == b // m or a % m == b % m],
    )


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def paley(p: int) -> Graph:
    if not isinstance(p, int) or not _is_prime(p) or p % 4 != 1:
        raise InvalidGeneratorArgument(f"paley(p) needs a prime p = 1 mod 4, got {p!r}")
    squares = {(x * x) % p for x in range(1, p)}
    return Graph.from_edges(p, [(a, b) for a, b in itertools.combinations(range(p), 2) if (b - a) % p in squares])


def srg_corpus() -> dict[str, Graph]:
    """Small strongly regular graphs used throughout the tests."""
    corpus = {"petersen": petersen()}
    for m in range(4, 9):
        corpus[f"triangular({m})"] = triangular(m)
    for m in range(2, 7):
        corpus[f"lattice({m})"] = lattice(m)
    for p in (5, 13, 17, 29, 37, 41):
        corpus[f"paley({p})"] = paley(p)
    return corpus


# ---------------------------------------------------------------------------
# bundled data
# ---------------------------------------------------------------------------

def g2_4_path() -> Path:
    override = os.environ.get(DATA_ENV)
    if override:
        return Path(override) / G2_4_FILE
    return Path(str(resources.files("srgborsuk") / "data" / G2_4_FILE))


def load_g2_4(path: str | os.PathLike | None = None) -> Graph:
    """Load the 416-vertex G2(4) graph and refuse it unless it is SRG(416,100,36,20)."""
    path = Path(path) if path is not None else g2_4_path()
    graph = read_graph6_file(path)
    if graph.n < 4:
        raise DataVerificationError(f"{path}: only {graph.n} vertices")
    check = verify_srg(graph)
    if check.params != G2_4_PARAMS:
        raise DataVerificationError(
            f"{path}: expected SRG{G2_4_PARAMS}, got {check.params or check.reason}", witness=check.witness
        )
    return graph
