import pytest

import wreathlab as wl


def test_d4_from_c2_wreath_c2():
    c2 = wl.Group("C:2")
    w = wl.build_wreath(c2, c2, "regular")
    assert w.order == 8
    assert w.group.identify() == "D:4"
    x = w.encode([0, 1], 1)
    assert w.format(x) == "(0,1; 1)"
    assert w.parse("(0,1; 1)") == x
    assert w.decode(x) == ([0, 1], 1)


def test_group_basics_and_json_round_trip():
    s3 = wl.Group("S:3")
    assert len(s3) == 6
    assert s3.label(s3.identity) == "123"
    a = s3.element("231")
    assert s3.mul(a, s3.inverse(a)) == s3.identity
    back = wl.Group.from_json(s3.to_json())
    assert back.order == 6 and back.identify() == "S:3"


def test_tower_example():
    out = wl.tower_embedding("5,7", "5", "7", section="eta:rho1")
    assert out["phi"] == {
        "id_L": "(id_L,id_L; id_K)",
        "rho1": "(id_L,id_L; eta)",
        "rho2": "(rho2,rho2; id_K)",
        "rho3": "(rho2,rho2; eta)",
    }
    report = out["report"]
    assert report["is_injective"] and report["is_homomorphism"]
    assert report["image_order"] == 4 and not report["image_is_full"]
    assert wl.chi("5,7", "5", "7", 2, 0) in (0, 1)


def test_kk_and_omega():
    kk = wl.kk_embedding("S:3", "A:3")
    assert kk["report"]["wreath_order"] == 18
    om = wl.omega_embedding("S:4", "stab:4")
    assert om["report"]["wreath_order"] == 31104
    assert om["report"]["is_injective"]


def test_sizes():
    assert wl.regular_size(12, 6) == 384
    assert wl.omega_size(432, 6, 72) == 10030613004288
    assert wl.kummer_size(6, 6, 72) == 3359232
    d = wl.degree432()
    assert d["ratio"] == 2985984
    rows = wl.figure_data(3, "S3", 12)
    assert rows[1]["log_regular"] == pytest.approx(5.950642552587727, abs=1e-12)
    assert wl.table1(2) == [{"group": "C2", "k": 2, "kc": 2, "regular": "m²/2", "omega": "m²/2"}]


def test_verify_and_errors():
    res = wl.verify("cocycle")
    assert res["passed"] and res["results"][0]["checked"] == 320
    with pytest.raises(wl.ParseError):
        wl.Group("Nope")
    with pytest.raises(wl.SizeLimitError):
        s4 = wl.Group("S:4")
        wl.build_wreath(s4, s4, "regular")
    with pytest.raises(wl.WreathlabError):
        wl.kk_embedding("S:3", "stab:1")
