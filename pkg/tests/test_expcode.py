import io

import numpy as np
import pytest

from pgcodes.expcode import (
    CodeSpec,
    all_components_valid,
    apply_pattern,
    build_parity,
    component_syndromes,
    encode,
    iterative_decode,
    plant_failure_config,
    read_matrix_hex,
    word_from_hex,
    word_to_hex,
    write_matrix_hex,
)
from pgcodes.prng import SplitMix64, substream


def _random_word(spec, rng, weight):
    word = np.zeros(spec.n_symbols, dtype=np.uint8)
    for pos in rng.sample(spec.n_symbols, weight):
        word[pos] = rng.nonzero_symbol(spec.field.q)
    return word


def test_parity_shape_eps5(spec5):
    H = spec5.parity_matrix
    assert H.shape == (504, 1953)
    # every column is touched by exactly one point block and one hyperplane block
    col_nonzeros = (H != 0).sum(axis=0)
    assert np.all(col_nonzeros == 2 * 4)


def test_parity_block_entries(spec5):
    H = spec5.parity_matrix
    g = spec5.graph
    f = spec5.field
    v = 17  # point vertex, 1-based
    for i in range(1, 5):
        row = H[(v - 1) * 4 + (i - 1)]
        for j in range(31):
            col = g.point_edge_idx[v - 1, j]
            assert row[col] == f.exp_alpha(i * j)


def test_parity_shape_and_rank_eps7(spec7):
    assert spec7.parity_matrix.shape == (756, 1953)
    assert spec7.rank == 756
    assert spec7.k_overall == 1197


def test_rank_matches_transposed_elimination(field8):
    # independent elimination route over H^T must agree on the rank
    from pgcodes.expcode import _row_reduce

    spec3 = CodeSpec(3, field=field8)
    H = spec3.parity_matrix
    _, pivots = _row_reduce(field8, H)
    _, pivots_t = _row_reduce(field8, H.T.copy())
    assert len(pivots) == len(pivots_t)
    spec3._rank = None
    assert spec3.rank == len(pivots)


def test_generator_orthogonal_and_systematic(spec5):
    G = spec5.generator_matrix
    assert G.shape == (spec5.k_overall, 1953)
    # each generator row satisfies every component constraint
    pt = spec5.rs.batch_syndromes(G[:, spec5.graph.point_edge_idx].reshape(-1, 31))
    hp = spec5.rs.batch_syndromes(G[:, spec5.graph.hpl_edge_idx].reshape(-1, 31))
    assert not pt.any() and not hp.any()
    # systematic: an identity sits on the message (non-pivot) columns
    single = np.nonzero((G != 0).sum(axis=0) == 1)[0]
    unit_cols = [c for c in single if G[:, c].max() == 1]
    owners = {int(np.nonzero(G[:, c])[0][0]) for c in unit_cols}
    assert owners == set(range(G.shape[0]))


def test_rate_meets_lower_bound(spec5, spec7):
    # k >= N(2r - 1) with r the component rate
    for spec in (spec5, spec7):
        n = spec.rs.n
        bound = spec.n_symbols * (2 * spec.rs.k - n)
        assert spec.k_overall * n >= bound


def test_encode_zero_and_linearity(spec5):
    rng = SplitMix64(41)
    zero = encode(spec5, np.zeros(spec5.k_overall, dtype=np.uint8))
    assert not zero.any()
    m1 = np.array([rng.below(256) for _ in range(spec5.k_overall)], dtype=np.uint8)
    m2 = np.array([rng.below(256) for _ in range(spec5.k_overall)], dtype=np.uint8)
    assert np.array_equal(encode(spec5, m1 ^ m2), encode(spec5, m1) ^ encode(spec5, m2))


def test_encode_outputs_satisfy_all_components(spec5):
    rng = SplitMix64(43)
    msg = np.array([rng.below(256) for _ in range(spec5.k_overall)], dtype=np.uint8)
    cw = encode(spec5, msg)
    assert all_components_valid(spec5, cw)
    assert not component_syndromes(spec5, cw, "points").any()


def test_encode_wrong_length(spec5):
    with pytest.raises(ValueError):
        encode(spec5, np.zeros(10, dtype=np.uint8))


def test_decode_clean_word(spec5):
    report = iterative_decode(spec5, np.zeros(1953, dtype=np.uint8))
    assert report.success
    assert report.iterations_used == 1
    assert report.per_iteration[0].symbols_changed == 0
    assert report.per_iteration[0].component_failures == 0


def test_decode_eight_errors_and_roundtrip(spec5):
    rng = SplitMix64(47)
    msg = np.array([rng.below(256) for _ in range(spec5.k_overall)], dtype=np.uint8)
    cw = encode(spec5, msg)
    rec = cw.copy()
    for pos in rng.sample(1953, 8):
        rec[pos] ^= rng.nonzero_symbol(256)
    report = iterative_decode(spec5, rec)
    assert report.success
    assert np.array_equal(report.final_word, cw)


def test_decode_deterministic(spec5):
    rng = SplitMix64(53)
    word = _random_word(spec5, rng, 40)
    a = iterative_decode(spec5, word)
    b = iterative_decode(spec5, word)
    assert a.success == b.success
    assert a.iterations_used == b.iterations_used
    assert np.array_equal(a.final_word, b.final_word)
    assert a.per_iteration == b.per_iteration


def test_decode_respects_max_iterations(spec5):
    planes = spec5.graph.space.planes()
    pat = plant_failure_config(spec5, planes[0], SplitMix64(3))
    word = apply_pattern(spec5, np.zeros(1953, dtype=np.uint8), pat)
    report = iterative_decode(spec5, word, max_iterations=2)
    assert not report.success
    assert report.iterations_used == 2
    assert len(report.per_iteration) == 4


def test_planted_config_shape_and_oscillation(spec5):
    planes = spec5.graph.space.planes()
    plane = planes[0]
    pat = plant_failure_config(spec5, plane, SplitMix64(3))
    assert len(pat) == 9
    labels = [lab for lab, _ in pat]
    assert len(set(labels)) == 9
    pts = {spec5.graph.edge_endpoints(lab)[0] for lab in labels}
    hps = {spec5.graph.edge_endpoints(lab)[1] for lab in labels}
    assert len(pts) == 3 and len(hps) == 3
    assert pts <= set(plane.points)
    word = apply_pattern(spec5, np.zeros(1953, dtype=np.uint8), pat)
    report = iterative_decode(spec5, word)
    assert not report.success
    assert report.failure_counts() == [(3, 3)] * 4
    # skip semantics: nothing ever changes
    assert all(r.symbols_changed == 0 for r in report.per_iteration)
    assert np.array_equal(report.final_word, word)


def test_planted_config_eps7_is_4x4(spec7):
    plane = spec7.graph.space.planes()[100]
    pat = plant_failure_config(spec7, plane, SplitMix64(9))
    assert len(pat) == 16
    word = apply_pattern(spec7, np.zeros(1953, dtype=np.uint8), pat)
    assert not iterative_decode(spec7, word).success


def test_planted_config_rejects_eps15(field8):
    spec15 = CodeSpec(15, field=field8)
    plane = spec15.graph.space.planes()[0]
    with pytest.raises(ValueError):
        plant_failure_config(spec15, plane, SplitMix64(1))


def test_plant_rejects_non_plane(spec5):
    from pgcodes.projgeom import span

    with pytest.raises(ValueError):
        plant_failure_config(spec5, span([1, 2]), SplitMix64(1))


def test_burst_of_126_decodes_in_one_iteration(spec5):
    for start, seed in ((0, 1), (911, 2), (1827, 3)):
        rng = SplitMix64(seed)
        word = np.zeros(1953, dtype=np.uint8)
        for off in range(126):
            word[start + off] = rng.nonzero_symbol(256)
        report = iterative_decode(spec5, word)
        assert report.success and report.iterations_used == 1
        assert not report.final_word.any()


def test_erasure_decoding(spec5):
    rng = SplitMix64(61)
    msg = np.array([rng.below(256) for _ in range(spec5.k_overall)], dtype=np.uint8)
    cw = encode(spec5, msg)
    labels = [i + 1 for i in rng.sample(1953, 50)]
    rec = cw.copy()
    for lab in labels:
        rec[lab - 1] = rng.below(256)
    report = iterative_decode(spec5, rec, erasures=labels)
    assert report.success
    assert np.array_equal(report.final_word, cw)
    with pytest.raises(ValueError):
        iterative_decode(spec5, rec, erasures=[0])


def test_decode_input_validation(spec5):
    with pytest.raises(ValueError):
        iterative_decode(spec5, np.zeros(100, dtype=np.uint8))
    with pytest.raises(ValueError):
        iterative_decode(spec5, np.zeros(1953, dtype=np.uint8), max_iterations=0)


def test_word_hex_round_trip(spec5):
    rng = SplitMix64(67)
    word = _random_word(spec5, rng, 100)
    text = word_to_hex(word)
    assert len(text) == 3906
    assert np.array_equal(word_from_hex(text, 1953), word)
    with pytest.raises(ValueError):
        word_from_hex(text[:-2], 1953)


def test_matrix_hex_round_trip(spec5):
    H = spec5.parity_matrix
    buf = io.StringIO()
    write_matrix_hex(buf, H[:8], spec5.epsilon)
    buf.seek(0)
    M, eps = read_matrix_hex(buf)
    assert eps == 5
    assert np.array_equal(M, H[:8])
    assert buf.getvalue().splitlines()[0] == "8 1953 5"


def test_build_parity_function_matches_property(spec5):
    assert np.array_equal(build_parity(spec5), spec5.parity_matrix)


def test_successful_decode_is_orthogonal_to_parity(spec5):
    # recheck success against H itself, not the decoder's own syndrome view
    rng = SplitMix64(73)
    word = _random_word(spec5, rng, 30)
    report = iterative_decode(spec5, word)
    assert report.success
    H = spec5.parity_matrix
    mt = spec5.field.mul_table
    syndrome = np.bitwise_xor.reduce(mt[H, report.final_word[None, :]], axis=1)
    assert not syndrome.any()


@pytest.mark.parametrize("epsilon", [3, 7, 9, 11, 13])
def test_guaranteed_weight_always_decodes(field8, epsilon):
    # 1000 random patterns at the guaranteed weight for every other epsilon
    # (epsilon=5 is exercised at this scale by the acceptance suite)
    from pgcodes.bounds import guaranteed_errors

    spec = CodeSpec(epsilon, field=field8)
    weight = guaranteed_errors(epsilon)
    for rnd in range(1000):
        rng = substream(86000 + epsilon, rnd)
        word = np.zeros(spec.n_symbols, dtype=np.uint8)
        for pos in rng.sample(spec.n_symbols, weight):
            word[pos] = rng.nonzero_symbol(256)
        report = iterative_decode(spec, word)
        assert report.success and not report.final_word.any(), (epsilon, rnd)


def test_higher_dimension_variant_burst_guarantee(field8):
    # PG(8, GF(2)) with the full-length (255, 239, 17) component code:
    # a burst of floor(17/2) * 511 symbols is corrected in one iteration
    spec = CodeSpec(17, d=8, field=field8)
    assert spec.graph.n_side == 511
    assert spec.rs.n == 255 and spec.rs.k == 239
    assert spec.n_symbols == 130305
    rng = SplitMix64(83)
    word = np.zeros(spec.n_symbols, dtype=np.uint8)
    start = 12000
    for off in range(8 * 511):
        word[start + off] = rng.nonzero_symbol(256)
    report = iterative_decode(spec, word)
    assert report.success and report.iterations_used == 1
    assert not report.final_word.any()


def test_component_constraint_equals_parity_row(spec5):
    # codeword restricted to any vertex's ordered edges is a component codeword
    rng = SplitMix64(71)
    msg = np.array([rng.below(256) for _ in range(spec5.k_overall)], dtype=np.uint8)
    cw = encode(spec5, msg)
    for v in (0, 30, 62):
        w = cw[spec5.graph.point_edge_idx[v]].tolist()
        assert spec5.rs.syndromes(w) == [0] * 4
