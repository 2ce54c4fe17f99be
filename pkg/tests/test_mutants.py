import itertools
import json

import pytest

from javamorph import (
    BaseSample, ComboSpec, DegenerateMutant, MrId, MutantStore, ParseFatal, PerturbationList,
    RangeError, detect_applicable, enumerate_combos, generate_mutant, perturbation_distance,
    text_differs,
)
from javamorph.mutants import generate_family, mutant_id
from support.oracles import factorial_comb
from support.samples import INTERACTING, MAXIMAL, NON_INTERACTING


def plist(n, sample_id="s"):
    return PerturbationList(sample_id, tuple(MrId(i) for i in range(1, n + 1)))


class TestEnumerateCombos:
    @pytest.mark.parametrize("l", range(1, 10))
    def test_sizes_match_factorial_oracle(self, l):
        for pd in range(1, l + 1):
            combos = enumerate_combos(plist(l), pd, cap=20, seed=3)
            assert len(combos) == min(factorial_comb(l, pd), 20)
            assert len({c.mr_ids for c in combos}) == len(combos)
            assert all(len(c) == pd for c in combos)

    def test_worked_example_l3(self):
        lst = PerturbationList("s", (MrId(5), MrId(1), MrId(3)))
        assert lst.applicable == (MrId(1), MrId(3), MrId(5))
        multi = [c for pd in (2, 3) for c in enumerate_combos(lst, pd)]
        assert len(multi) == 4
        assert [c.code for c in multi] == ["m1m3", "m1m5", "m3m5", "m1m3m5"]

    def test_no_cap_hit(self):
        assert len(enumerate_combos(plist(9), 1)) == 9

    def test_cap_hit(self):
        combos = enumerate_combos(plist(9), 4, cap=20, seed=1)
        assert len(combos) == 20
        assert factorial_comb(9, 4) == 126

    def test_all_subsets_below_cap(self):
        combos = enumerate_combos(plist(5), 2, cap=20)
        expected = [tuple(MrId(i) for i in c) for c in itertools.combinations(range(1, 6), 2)]
        assert [c.mr_ids for c in combos] == expected

    def test_deterministic_and_seed_sensitive(self):
        a = enumerate_combos(plist(9), 4, seed=7)
        assert a == enumerate_combos(plist(9), 4, seed=7)
        assert a != enumerate_combos(plist(9), 4, seed=8)

    def test_canonical_order(self):
        combos = enumerate_combos(plist(9), 5, seed=2)
        keys = [tuple(int(m) for m in c.mr_ids) for c in combos]
        assert keys == sorted(keys)

    def test_sampling_covers_the_space(self):
        seen = set()
        for seed in range(200):
            seen.update(c.mr_ids for c in enumerate_combos(plist(9), 4, seed=seed))
        assert len(seen) == 126

    @pytest.mark.parametrize("pd", [0, 4, -1])
    def test_range_error(self, pd):
        with pytest.raises(RangeError):
            enumerate_combos(plist(3), pd)

    def test_cap_must_be_positive(self):
        with pytest.raises(ValueError):
            enumerate_combos(plist(3), 1, cap=0)


class TestDetect:
    def test_loop_local_method(self):
        sample = BaseSample("a", "int f(){ int s = 0; for (int i = 0; i < 3; i++) { s += i; } return s; }")
        found = set(detect_applicable(sample).applicable)
        assert {MrId(1), MrId(2), MrId(9)} <= found

    def test_empty_method(self):
        found = detect_applicable(BaseSample("b", "void m(){}")).applicable
        assert found == (MrId(2), MrId(6), MrId(7))

    def test_unparsable(self):
        with pytest.raises(ParseFatal):
            detect_applicable(BaseSample("c", ""))

    def test_maximal(self):
        assert len(detect_applicable(BaseSample("d", MAXIMAL)).applicable) == 9


class TestGenerate:
    def test_pd_four(self):
        sample = BaseSample("max", MAXIMAL)
        m = generate_mutant(sample, ComboSpec((MrId(1), MrId(4), MrId(5), MrId(9))), seed=0)
        assert m.pd == 4 and not m.interacting and not m.degenerate
        assert text_differs(sample.source, m.text)

    def test_single_mr3(self):
        m = generate_mutant(BaseSample("x", "x = x + y;"), ComboSpec((MrId(3),)))
        assert "x += y;" in m.text and m.pd == 1

    def test_non_interacting_pd_equals_size(self):
        sample = BaseSample("plain", NON_INTERACTING)
        lst = detect_applicable(sample, seed=4)
        assert len(lst) >= 6
        for pd in range(1, len(lst) + 1):
            for combo in enumerate_combos(lst, pd, seed=4):
                m = generate_mutant(sample, combo, seed=4)
                assert m.pd == len(combo), combo.code
                assert not m.interacting

    def test_interacting_fixture_flagged(self):
        sample = BaseSample("inter", INTERACTING)
        lst = detect_applicable(sample)
        assert {MrId(3), MrId(5)} <= set(lst.applicable)
        m = generate_mutant(sample, ComboSpec((MrId(3), MrId(5))))
        assert m.pd == 1 < len(m.combo)
        assert m.interacting
        assert m.flags == (True, False)
        assert m.meta()["interacting"] is True

    def test_reproducible(self):
        sample = BaseSample("max", MAXIMAL)
        combo = ComboSpec((MrId(6), MrId(7)))
        assert generate_mutant(sample, combo, 9) == generate_mutant(sample, combo, 9)

    def test_renames_merged(self):
        m = generate_mutant(BaseSample("max", MAXIMAL), ComboSpec((MrId(1), MrId(2))))
        assert m.rename_map.variable_renames and m.rename_map.method_renames

    def test_degenerate_flagged_and_raised(self):
        sample = BaseSample("flat", "int f(){ return 1; }")
        combo = ComboSpec((MrId(9),))
        m = generate_mutant(sample, combo)
        assert m.degenerate and m.pd == 0
        with pytest.raises(DegenerateMutant) as info:
            generate_mutant(sample, combo, raise_degenerate=True)
        assert info.value.mutant.degenerate

    def test_id_shape(self):
        combo = ComboSpec((MrId(4), MrId(1)))
        mid = mutant_id("s1", combo, 5)
        assert mid.startswith("s1-m1m4-") and mid.endswith("-s5")


@pytest.mark.parametrize("flags,expected", [
    ((False,) * 9, 0),
    ((True, True, True, True), 4),
    ((True, False, False, True, False, True, False, False, False), 3),
])
def test_perturbation_distance(flags, expected):
    assert perturbation_distance(flags) == expected


def test_combo_spec_rules():
    with pytest.raises(ValueError):
        ComboSpec(())
    assert ComboSpec((MrId(9), MrId(1))).code == "m1m9"
    assert ComboSpec.from_code("m1m4m5m9").mr_ids == (MrId(1), MrId(4), MrId(5), MrId(9))


def test_store_round_trip(tmp_path):
    sample = BaseSample("max", MAXIMAL, dataset="fx", repair_pattern="guard", oracle_ref="t")
    lst = detect_applicable(sample)
    family = generate_family(sample, lst, [1, 2], cap=5, seed=1)
    store = MutantStore(tmp_path / "mutants")
    store.write_base(sample)
    for m in family:
        path = store.write(m)
        assert path.parent.name == f"pd{m.pd}"
        assert path.name == f"{m.combo.code}-1.java"
        meta = json.loads(path.with_name(path.name[:-5] + ".meta.json").read_text())
        assert {"base_id", "combo", "pd", "rename_map", "seed", "flags"} <= meta.keys()
    assert store.mutants() == family
    assert store.base("max") == sample
    assert store.sample_ids() == ["max"]


def test_family_excludes_degenerates_by_default():
    sample = BaseSample("inter", INTERACTING)
    lst = PerturbationList("inter", (MrId(3), MrId(5), MrId(9)))
    kept = generate_family(sample, lst, [1, 2, 3], seed=0)
    everything = generate_family(sample, lst, [1, 2, 3], seed=0, include_degenerate=True)
    assert all(not m.degenerate for m in kept)
    assert len(everything) > len(kept)
    assert [m.id for m in kept] == sorted(m.id for m in kept)
