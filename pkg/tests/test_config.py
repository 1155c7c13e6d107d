import pytest

from burniat.config import (BOUNDARY, CURVE_CLASS, GENERATORS, INTERNAL,
                            InvalidBuildingData, all_standard_configs,
                            BurniatConfig, config_from_text, config_to_text,
                            curve_record, is_canonical_ample, make_config,
                            minus_two_curves, ramification_span_index,
                            standard_config, validate_building_data)
from burniat.lattice import canonical_class
from burniat.picard import MEET


def test_standard_point_lists():
    assert standard_config(6).points == ()
    assert standard_config(5).points == (("A1", "B1", "C1"),)
    assert standard_config(2).k == 4
    assert standard_config(3).points == (
        ("A1", "B1", "C2"), ("A1", "B2", "C1"), ("A2", "B1", "C1"))
    with pytest.raises(ValueError):
        standard_config(4)  # needs nodal / non-nodal
    with pytest.raises(ValueError):
        standard_config(7)


def test_curve_roles_and_squares():
    for label in GENERATORS:
        rec = curve_record(label)
        sq = rec.cls.dot(rec.cls)
        if label in BOUNDARY:
            assert rec.role == "boundary" and sq == -1
        else:
            assert rec.role == "internal" and sq == 0


def test_incidence_oracle():
    # pairwise intersections of the twelve classes realise the marked-point
    # incidences: each boundary curve meets exactly the four curves of its
    # meeting table, boundary self-intersections are -1, and internal curves
    # are disjoint from the same-letter boundary curves
    for f in BOUNDARY:
        fc = CURVE_CLASS[f]
        for g in GENERATORS:
            got = CURVE_CLASS[g].dot(fc)
            if g == f:
                assert got == -1
            elif g in MEET[f]:
                assert got == 1, (g, f)
            elif g in BOUNDARY or g in INTERNAL:
                if g[0] == f[0] and g != f:
                    assert got == 0  # same letter never meets
                if g not in MEET[f]:
                    assert got == 0, (g, f)


def test_building_data_k6():
    l1, l2, l3 = validate_building_data(standard_config(6))
    lat = standard_config(6).lattice
    assert l1 == lat.cls(3, -2, 0, -1)  # 3h - 2e1 - e3
    # fundamental relations at class level
    a = standard_config(6).branch_total("A")
    assert l2 + l3 == l1 + a


def test_building_data_all_configs():
    for cfg in all_standard_configs():
        validate_building_data(cfg)
        assert (cfg.branch_total("A") + cfg.branch_total("B")
                + cfg.branch_total("C")) == -3 * canonical_class(cfg.lattice)


def test_building_data_corruption_detected():
    # dropping C3 from the configuration breaks 2-divisibility
    class Broken(BurniatConfig):
        def strict_transform(self, label):
            if label == "C3":
                return self.lattice.zero()
            return super().strict_transform(label)

    with pytest.raises(InvalidBuildingData):
        validate_building_data(Broken(6, "plain", ()))


def test_minus_two_curves():
    cfg = standard_config(4, "nodal")
    curves = minus_two_curves(cfg)
    assert curves == [cfg.pullback(CURVE_CLASS["A1"])
                      - cfg.exceptional(0) - cfg.exceptional(1)]
    assert minus_two_curves(standard_config(5)) == []
    three = minus_two_curves(standard_config(3))
    assert len(three) == 3
    assert {str(c) for c in three} == {
        str(standard_config(3).strict_transform(lab)) for lab in ("A1", "B1", "C1")}
    counts = [len(minus_two_curves(c)) for c in all_standard_configs()]
    assert counts == [0, 0, 1, 0, 3, 6]


def test_k2_lines_contain_two_points_each():
    cfg = standard_config(2)
    assert all(len(cfg.points_on(lab)) == 2 for lab in INTERNAL)


def test_is_canonical_ample():
    assert is_canonical_ample(standard_config(4, "non-nodal"))
    assert not is_canonical_ample(standard_config(4, "nodal"))
    assert not is_canonical_ample(standard_config(2))
    assert not is_canonical_ample(standard_config(3))


def test_ramification_span_indices():
    got = [ramification_span_index(c) for c in all_standard_configs()]
    assert got == [1, 1, 1, 1, 1, 2]


@pytest.mark.parametrize("ksq,variant,named", [
    (5, "plain", {0: "A1"}),
    (4, "nodal", {0: "B1", 1: "B2"}),
    (4, "non-nodal", {0: "B1", 1: "B2"}),
    (3, "plain", {0: "C2", 1: "B2", 2: "A2"}),
])
def test_exceptional_spanned_by_named_curve(ksq, variant, named):
    # for each point the named internal curve passes through that point only,
    # so E_s = pullback(curve) - strict(curve) lies in its span with Pic Y
    cfg = standard_config(ksq, variant)
    for s, label in named.items():
        diff = cfg.pullback(CURVE_CLASS[label]) - cfg.strict_transform(label)
        assert diff == cfg.exceptional(s)


def test_config_text_round_trip():
    for cfg in all_standard_configs():
        text = config_to_text(cfg)
        back = config_from_text(text)
        assert back.points == cfg.points and back.ksq == cfg.ksq


def test_config_text_rejects_garbage():
    with pytest.raises(ValueError):
        config_from_text("ksq = 5\npoint = A1 B1\n")
    with pytest.raises(ValueError):
        config_from_text("ksq = 5\nnonsense = 1\n")
    with pytest.raises(ValueError):
        config_from_text("ksq = 4\npoint = A1 B1 C1\n")  # ksq mismatch


def test_make_config_validation():
    with pytest.raises(ValueError):
        make_config([("A0", "B1", "C1")])  # boundary curve in a point
    with pytest.raises(ValueError):
        make_config([("A1", "A2", "C1")])  # two curves of one letter
