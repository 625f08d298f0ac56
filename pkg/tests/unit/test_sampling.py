"""Tests for the element sampler and the sampled oracle checks."""

import pytest

from ctower.config import Config
from ctower.ring.elements import Frac, Integer
from ctower.sampling import ElementSampler, brute_force_inverse, surrogate_checks
from tests.conftest import SEED
from tests.strategies import mixed_tower


class TestElementSampler:
    def test_samples_are_canonical_at_every_level(self):
        tower = mixed_tower()
        sampler = ElementSampler(tower, SEED, budget=2)
        for level in range(len(tower)):
            for _ in range(25):
                e = sampler.sample(level)
                assert e.level == level
                assert tower.is_canonical(e)

    def test_same_seed_same_samples(self):
        tower = mixed_tower()
        first = [ElementSampler(tower, 7).sample() for _ in range(3)]
        second = [ElementSampler(tower, 7).sample() for _ in range(3)]
        assert first == second

    def test_nonzero(self, base_tower):
        sampler = ElementSampler(base_tower, SEED, coefficient_bound=1)
        for _ in range(20):
            assert not base_tower.is_zero(sampler.nonzero(0))


class TestBruteForceInverse:
    def test_inverse_found_in_localization(self, loc2):
        inverse = brute_force_inverse(loc2, loc2.int_const(1, -8))
        assert inverse == Frac(1, loc2.int_const(0, -1), 3)

    def test_non_unit_has_none(self, base_tower):
        assert brute_force_inverse(base_tower, Integer(0, 3), bound=50) is None

    def test_bound_comes_from_config(self, loc2):
        short = Config(sampling={"brute_force_bound": 3})
        assert brute_force_inverse(loc2, loc2.int_const(1, -8), config=short) is None


class TestSurrogateChecks:
    def test_clean_stage_tower(self, even_build):
        config = Config(sampling={"budget": 2, "coefficient_bound": 5})
        assert surrogate_checks(even_build.tower, 60, SEED, config) == []

    def test_clean_mixed_tower(self):
        config = Config(sampling={"budget": 2})
        assert surrogate_checks(mixed_tower(), 80, SEED, config) == []

    @pytest.mark.parametrize("samples", [0, 1])
    def test_few_samples(self, fac5, samples):
        assert surrogate_checks(fac5, samples, SEED) == []

    @pytest.mark.parametrize("configured,drawn", [(0, False), (8, True)])
    def test_sample_count_comes_from_config(self, monkeypatch, fac5, configured, drawn):
        calls = []
        original = ElementSampler.sample

        def counting(self, *args, **kwargs):
            calls.append(args)
            return original(self, *args, **kwargs)

        monkeypatch.setattr(ElementSampler, "sample", counting)
        config = Config(sampling={"samples": configured})
        assert surrogate_checks(fac5, seed=SEED, config=config) == []
        assert bool(calls) is drawn

    def test_units_disagreeing_with_brute_force(self, monkeypatch, loc2):
        monkeypatch.setattr(loc2, "is_unit", lambda e: False)
        config = Config(sampling={"coefficient_bound": 1})
        violations = surrogate_checks(loc2, 20, SEED, config)
        assert any(v.check == "units" for v in violations)
