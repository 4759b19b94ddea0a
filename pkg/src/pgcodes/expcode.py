"""The overall graph code: parity/generator matrices, encoding, iterative decoding.

Symbols sit on the 1953 labeled edges of the point-hyperplane Tanner graph,
and every vertex constrains its 31 ordered edge symbols to be a codeword of
the shortened Reed-Solomon component code. Decoding alternates sides: each
pass decodes all 63 components of one side from the same snapshot and writes
corrections back (the components of a side touch disjoint symbol sets, so a
parallel round and a sequential sweep are identical). A component decoder
that detects an uncorrectable block skips it, leaving the symbols for the
other side to repair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable, Sequence

import numpy as np

from pgcodes.galois import GF
from pgcodes.projgeom import Flat
from pgcodes.rscodec import RsParams, rs_decode
from pgcodes.tanner import TannerGraph, build_graph

POINT_SIDE = "points"
HYPERPLANE_SIDE = "hyperplanes"


@dataclass
class SideReport:
    """One side of one iteration: how many components failed, how many symbols moved."""

    side: str
    component_failures: int
    symbols_changed: int


@dataclass
class DecodeReport:
    """Outcome of iterative decoding.

    success means every component on both sides had zero syndromes when the
    decoder stopped; it does not compare against any transmitted word, which
    is exactly the information a receiver has. per_iteration holds two
    entries per executed iteration, point side first.
    """

    success: bool
    iterations_used: int
    per_iteration: list[SideReport]
    final_word: np.ndarray

    def failure_counts(self) -> list[tuple[int, int]]:
        """(point failures, hyperplane failures) per iteration."""
        pairs = []
        for i in range(0, len(self.per_iteration), 2):
            pairs.append(
                (
                    self.per_iteration[i].component_failures,
                    self.per_iteration[i + 1].component_failures,
                )
            )
        return pairs


class CodeSpec:
    """Parameters and cached matrices of one overall code instance.

    The Tanner graph and RS tables are built eagerly (cheap); the parity and
    generator matrices are built on first use (the generator costs one
    Gaussian elimination over GF(256)). Instances are safe to share between
    threads once the lazy matrices have been materialized.
    """

    def __init__(
        self,
        epsilon: int,
        d: int = 5,
        max_iterations: int = 4,
        field: GF | None = None,
    ):
        if max_iterations < 1:
            raise ValueError(f"need at least one iteration, got {max_iterations}")
        self.field = field if field is not None else GF(8)
        self.graph: TannerGraph = build_graph(d)
        self.rs = RsParams(n=self.graph.degree, epsilon=epsilon, field=self.field)
        if self.rs.n != self.graph.degree:
            raise ValueError("component block length must equal the graph degree")
        self.n_symbols = self.graph.n_edges
        self.max_iterations = max_iterations
        self._parity: np.ndarray | None = None
        self._generator: np.ndarray | None = None
        self._rank: int | None = None

    def __repr__(self) -> str:
        return (
            f"CodeSpec(epsilon={self.rs.epsilon}, d={self.graph.d}, "
            f"n={self.n_symbols})"
        )

    @property
    def epsilon(self) -> int:
        return self.rs.epsilon

    @property
    def parity_matrix(self) -> np.ndarray:
        if self._parity is None:
            self._parity = build_parity(self)
        return self._parity

    @property
    def generator_matrix(self) -> np.ndarray:
        if self._generator is None:
            self._generator = derive_generator(self)
        return self._generator

    @property
    def rank(self) -> int:
        if self._rank is None:
            self.generator_matrix
        return self._rank

    @property
    def k_overall(self) -> int:
        return self.n_symbols - self.rank


def build_parity(spec: CodeSpec) -> np.ndarray:
    """Overall parity-check matrix over GF(256).

    One block of epsilon-1 rows per vertex (63 point vertices first, then 63
    hyperplane vertices). Row i of vertex u has alpha^(i*j) in the column of
    u's j-th ordered edge, j = 0..degree-1: exactly the component syndrome
    functionals, so word * row^T = 0 iff syndrome S_i of that component is 0.
    """
    graph = spec.graph
    f = spec.field
    two_t = spec.rs.two_t
    n_side, degree = graph.n_side, graph.degree
    H = np.zeros((2 * n_side * two_t, spec.n_symbols), dtype=np.uint8)
    powers = np.array(
        [[f.exp_alpha(i * j) for j in range(degree)] for i in range(1, two_t + 1)],
        dtype=np.uint8,
    )
    for v in range(n_side):
        H[v * two_t : (v + 1) * two_t, graph.point_edge_idx[v]] = powers
    base = n_side * two_t
    for h in range(n_side):
        H[base + h * two_t : base + (h + 1) * two_t, graph.hpl_edge_idx[h]] = powers
    return H


def derive_generator(spec: CodeSpec, parity: np.ndarray | None = None) -> np.ndarray:
    """Systematic generator: reduce H to RRE form and read off the null space.

    For each non-pivot column f the generator gets a row with 1 at f and the
    RRE entries of column f at the pivot columns; rows are independent by the
    unit coordinates and orthogonal to H by construction. Also records
    rank(H) on the spec.
    """
    H = spec.parity_matrix if parity is None else parity
    rre, pivots = _row_reduce(spec.field, H)
    rank = len(pivots)
    n = H.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    G = np.zeros((len(free), n), dtype=np.uint8)
    G[np.arange(len(free)), free] = 1
    G[:, pivots] = rre[:rank, free].T
    if parity is None:
        spec._rank = rank
    return G


def _row_reduce(field: GF, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2^m) by table-driven elimination."""
    A = M.copy()
    mt = field.mul_table
    inv = np.array([0] + [field.inv(v) for v in range(1, field.q)], dtype=np.uint8)
    n_rows, n_cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        col = A[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = mt[inv[A[r, c]], A[r]]
        col_all = A[:, c].copy()
        col_all[r] = 0
        rows = np.nonzero(col_all)[0]
        if rows.size:
            A[rows] ^= mt[col_all[rows][:, None], A[r][None, :]]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return A, pivots


def encode(
    spec: CodeSpec, message: Sequence[int], generator: np.ndarray | None = None
) -> np.ndarray:
    """Codeword = message * G over GF(256), symbols indexed by label - 1."""
    G = spec.generator_matrix if generator is None else generator
    msg = np.asarray(message, dtype=np.uint8)
    if msg.ndim != 1 or msg.shape[0] != G.shape[0]:
        raise ValueError(f"message must have {G.shape[0]} symbols, got {msg.shape}")
    mt = spec.field.mul_table
    return np.bitwise_xor.reduce(mt[msg[:, None], G], axis=0)


def side_words(spec: CodeSpec, word: np.ndarray, side: str) -> np.ndarray:
    """Component words of one side as a (63, 31) array, vertex id order."""
    idx = spec.graph.point_edge_idx if side == POINT_SIDE else spec.graph.hpl_edge_idx
    return word[idx]


def component_syndromes(spec: CodeSpec, word: np.ndarray, side: str) -> np.ndarray:
    return spec.rs.batch_syndromes(side_words(spec, word, side))


def all_components_valid(spec: CodeSpec, word: np.ndarray) -> bool:
    """True iff every vertex on both sides sees zero syndromes."""
    return not (
        component_syndromes(spec, word, POINT_SIDE).any()
        or component_syndromes(spec, word, HYPERPLANE_SIDE).any()
    )


def iterative_decode(
    spec: CodeSpec,
    received: Sequence[int] | np.ndarray,
    erasures: Iterable[int] = (),
    max_iterations: int | None = None,
) -> DecodeReport:
    """Alternating per-vertex decoding with skip-on-failure.

    Each iteration decodes the point side, then the hyperplane side. A
    component whose decoder reports failure is left untouched. The decoder
    stops early as soon as all components on both sides have zero syndromes
    (a clean state is a fixed point of skip-on-failure decoding, so early
    exit cannot change the outcome) and otherwise runs the full iteration
    budget; success is judged by the state at exit.

    Erasures are given as 1-based symbol labels. They are forwarded to the
    component decoders until some component containing them decodes
    successfully, which resolves them; a component with more usable erasures
    than the code can absorb is treated as a failed (skipped) component.
    Decoding never raises on bad data: failure is a report state.
    """
    graph = spec.graph
    rs = spec.rs
    word = np.array(received, dtype=np.uint8).reshape(-1).copy()
    if word.shape[0] != spec.n_symbols:
        raise ValueError(f"received word must have {spec.n_symbols} symbols")
    pending = set()
    for label in erasures:
        if not 1 <= label <= spec.n_symbols:
            raise ValueError(f"erasure label out of range: {label}")
        pending.add(int(label))

    limit = spec.max_iterations if max_iterations is None else max_iterations
    if limit < 1:
        raise ValueError(f"need at least one iteration, got {limit}")
    reports: list[SideReport] = []
    success = False
    iterations_used = limit

    for iteration in range(1, limit + 1):
        for side in (POINT_SIDE, HYPERPLANE_SIDE):
            idx = graph.point_edge_idx if side == POINT_SIDE else graph.hpl_edge_idx
            words = word[idx]
            synd = rs.batch_syndromes(words)
            dirty = np.nonzero(synd.any(axis=1))[0]
            erased_local: dict[int, list[int]] = {}
            if pending:
                for label in pending:
                    v, k = graph.position_of(label)
                    if side == HYPERPLANE_SIDE:
                        p, h = graph.edge_endpoints(label)
                        v = h
                        k = int(np.nonzero(graph.hpl_edge_idx[h - 1] == label - 1)[0][0]) + 1
                    erased_local.setdefault(v - 1, []).append(k - 1)
            failures = 0
            changed = 0
            todo = sorted(set(dirty.tolist()) | set(erased_local))
            for v in todo:
                locs = erased_local.get(v, [])
                if not synd[v].any():
                    # Already a valid codeword: erasure values were right.
                    for k in locs:
                        pending.discard(int(idx[v, k]) + 1)
                    continue
                if len(locs) > rs.two_t:
                    failures += 1
                    continue
                outcome = rs_decode(
                    rs,
                    words[v].tolist(),
                    erasures=locs,
                    syndromes=None if locs else synd[v],
                )
                if outcome.ok:
                    new = np.array(outcome.word, dtype=np.uint8)
                    changed += int(np.count_nonzero(new != words[v]))
                    words[v] = new
                    for k in locs:
                        pending.discard(int(idx[v, k]) + 1)
                else:
                    failures += 1
            word[idx] = words
            reports.append(SideReport(side, failures, changed))
        if all_components_valid(spec, word):
            success = True
            iterations_used = iteration
            break

    return DecodeReport(success, iterations_used, reports, word)


def plant_failure_config(spec: CodeSpec, plane: Flat, rng) -> tuple[tuple[int, int], ...]:
    """Minimal locked error pattern built on a plane.

    Picks (epsilon+1)/2 points of the plane and (epsilon+1)/2 hyperplanes
    through it and corrupts every edge between them with a random nonzero
    value: each chosen vertex then sees one error more than its component
    can correct, so all of them skip and the errors oscillate between the
    sides forever. Valid for epsilon <= 13, where (epsilon+1)/2 <= 7 fits
    inside a single plane. rng must provide sample(n, k) and
    nonzero_symbol(q) (see pgcodes.prng.SplitMix64).
    """
    t_plus = (spec.rs.epsilon + 1) // 2
    if t_plus > 7:
        raise ValueError(
            f"plane-based construction needs (epsilon+1)/2 <= 7, got {t_plus}"
        )
    if plane.dimension != 2:
        raise ValueError(f"need a plane (dimension 2), got dimension {plane.dimension}")
    space = spec.graph.space
    hyperplanes = space.hyperplanes_through(plane)
    if len(hyperplanes) != 7:
        raise ValueError("flat is not a plane of this graph's geometry")
    pts = [plane.points[i] for i in sorted(rng.sample(7, t_plus))]
    hps = [hyperplanes[i] for i in sorted(rng.sample(7, t_plus))]
    pattern = []
    for p in pts:
        for h in hps:
            label = spec.graph.label_of_pair(p, h)
            pattern.append((label, rng.nonzero_symbol(spec.field.q)))
    return tuple(sorted(pattern))


def apply_pattern(
    spec: CodeSpec, word: np.ndarray, pattern: Iterable[tuple[int, int]]
) -> np.ndarray:
    """Add an error pattern of (label, value) pairs to a word."""
    out = np.array(word, dtype=np.uint8).copy()
    for label, value in pattern:
        out[label - 1] ^= value
    return out


# ----------------------------------------------------------------------
# serialization: hex words and matrix export

def word_to_hex(word: Sequence[int] | np.ndarray) -> str:
    """Two lowercase hex chars per symbol, label order 1..N."""
    return bytes(int(c) for c in word).hex()


def word_from_hex(text: str, n_symbols: int) -> np.ndarray:
    text = text.strip()
    if len(text) != 2 * n_symbols:
        raise ValueError(f"expected {2 * n_symbols} hex chars, got {len(text)}")
    return np.frombuffer(bytes.fromhex(text), dtype=np.uint8).copy()


def write_matrix_hex(fh: IO[str], matrix: np.ndarray, epsilon: int) -> None:
    """Row-major hex matrix with a 'rows cols epsilon' header line."""
    rows, cols = matrix.shape
    fh.write(f"{rows} {cols} {epsilon}\n")
    for row in matrix:
        fh.write(word_to_hex(row) + "\n")


def read_matrix_hex(fh: IO[str]) -> tuple[np.ndarray, int]:
    header = fh.readline().split()
    if len(header) != 3:
        raise ValueError("matrix header must be 'rows cols epsilon'")
    rows, cols, epsilon = (int(x) for x in header)
    data = np.zeros((rows, cols), dtype=np.uint8)
    for i in range(rows):
        data[i] = word_from_hex(fh.readline(), cols)
    return data, epsilon
