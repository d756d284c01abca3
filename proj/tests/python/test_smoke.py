import stonework as sw


def test_chain_factories():
    three = sw.three_pseudo()
    assert three.size == 3
    assert three.names == ["0", "a", "1"]
    assert three.is_stone and three.has_pseudo and not three.has_dual

    four = sw.four_chain()
    assert four.names == ["f", "u2", "u1", "t"]
    assert four.is_double_stone


def test_interval_power_and_boolean():
    b2 = sw.boolean_algebra(2)
    assert b2.size == 4 and b2.is_double_stone

    ip = sw.interval_power(2, 2)
    assert ip.size == 9
    assert ip.is_stone and ip.is_dual_stone
    assert "(0,x)" in ip.names
    bottom = ip.names.index("(0,0)")
    top = ip.names.index("(1,1)")
    assert ip.leq(bottom, top) and not ip.leq(top, bottom)
    assert ip.meet(top, bottom) == bottom
    assert ip.pseudo(top) == bottom


def test_formula_parsing():
    f = sw.parse_formula("~(p | q) & T")
    assert f.variables == ["p", "q"]
    assert f.depth == 3
    s = sw.parse_sequent("~~p|-p")
    assert str(s) == "~~p |- p"


def test_order_validity():
    three = sw.three_pseudo()
    valid, countermodel = sw.order_valid("p |- ~~p", three)
    assert valid and countermodel == {}

    valid, countermodel = sw.order_valid("~~p |- p", three)
    assert not valid
    assert countermodel == {"p": "a"}

    four = sw.four_chain()
    valid, countermodel = sw.order_valid("p & !p |- q | ~q", four)
    assert not valid
    assert countermodel == {"p": "u1", "q": "u2"}
    valid, _ = sw.preserve_valid("p & !p |- q | ~q", four, "both")
    assert valid


def test_rough_sets():
    pairs = sw.rough_sets(["a", "b", "c"], [["a", "b"], ["c"]])
    assert len(pairs) == 6
    assert ([], []) in pairs
    assert (["c"], ["c"]) in pairs

    valid, countermodel = sw.rs_valid("~~p |- p", ["u", "u'"], [["u", "u'"]], "pseudo")
    assert not valid
    assert countermodel == {"p": ["u"]}

    rs = sw.rs_algebra(["a", "b", "c"], [["a", "b"], ["c"]], "pseudo")
    assert rs.size == 6 and rs.is_stone


def test_audit_and_derivations():
    clean, text = sw.audit("LDBS", sw.four_chain())
    assert clean and "pass" in text

    clean, text = sw.audit("LDBS", sw.four_chain(), variant="as-written")
    assert not clean
    assert "Excluded-Middle" in text and "A=T" in text

    ok, step, reason = sw.check_derivation("LS", "1: p |- p ; Reflexivity\n")
    assert ok and step == 0 and reason == ""

    ok, step, reason = sw.check_derivation("LS", "1: p |- q ; Reflexivity\n")
    assert not ok and step == 1 and "conclusion" in reason


def test_canonical_iso():
    pairs = sw.canonical_iso(1, 2)
    assert pairs == [("(0)", "(0,0)"), ("(a)", "(0,1)"), ("(1)", "(1,1)")]
