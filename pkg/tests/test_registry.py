import random
from fractions import Fraction

import pytest

from bettibound import catalog as cat
from bettibound.errors import HypothesisError, UnknownBoundError
from bettibound.registry import REGISTRY, evaluate, get_entry


def test_every_entry_has_a_sampler_and_documented_parameters():
    for id, entry in REGISTRY.items():
        assert entry.id == id
        assert entry.summary
        assert entry.param_names
        params = entry.sampler(random.Random(0))
        assert set(params) <= set(entry.param_names)


def test_unknown_id_lists_known_ids():
    with pytest.raises(UnknownBoundError) as err:
        get_entry("no-such-bound")
    assert "optm" in str(err.value)


def test_missing_required_parameter():
    with pytest.raises(HypothesisError, match="k"):
        evaluate("optm", d=2)


def test_evaluate_matches_direct_calls():
    assert evaluate("optm", d=2, k=3).value == 18
    assert evaluate("total-degree", d=1, k=4, l=2).value == 1
    assert evaluate("refined-two-degree", d1=2, d2=2, k=2).value == 25
    assert evaluate("g-min", degrees=[2, 3], blocks=[1, 1], l=1).value == cat.g_min([2, 3], [1, 1], 1).value


def test_exact_entries_are_flagged():
    exact = {id for id, e in REGISTRY.items() if e.kind == "exact"}
    assert {"ci-total-distinct", "one-multi", "quadrics-projective"} <= exact


def test_sampled_points_are_valid_and_positive():
    rng = random.Random(123)
    for _ in range(3):
        for id, entry in sorted(REGISTRY.items()):
            r = evaluate(id, **entry.sampler(rng))
            assert isinstance(r.value, Fraction) and r.value > 0, id
            if entry.kind == "exact":
                assert r.value.denominator == 1


def test_per_index_entries_are_nonincreasing():
    rng = random.Random(9)
    for id, entry in sorted(REGISTRY.items()):
        if not entry.per_i:
            continue
        for _ in range(5):
            params = entry.sampler(rng)
            values = [evaluate(id, **{**params, "i": i}).value for i in entry.index_range(params)]
            assert values == sorted(values, reverse=True), (id, params)
