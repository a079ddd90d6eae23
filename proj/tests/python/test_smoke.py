import levelalg as la


def test_growth_bounds():
    assert la.binomial_expand(10, 3) == [(5, 3)]
    assert la.binomial_expand(7, 3) == [(4, 3), (3, 2)]
    assert la.macaulay_upper(10, 3) == 15
    assert la.is_o_sequence([1, 3, 6, 10, 9, 7, 5, 2])
    assert not la.is_o_sequence([1, 2, 4])
    assert la.lex_growth_oracle(2, 1, 2) == 3


def test_hvector_algebra():
    assert la.first_difference([1, 3, 5]) == [1, 2, 2]
    assert la.is_si_sequence([1, 3, 4, 4, 3, 1])
    assert la.is_gorenstein_hvector([1, 3, 4, 5, 5, 4, 3, 1]) == "Yes"
    assert la.is_gorenstein_hvector([1, 5, 5, 1]) == "Unknown"
    pairs = la.two_part_decompositions([1, 3, 6, 10, 9, 7, 5, 2])
    assert {"g": [1, 3, 4, 5, 5, 4, 3, 1], "tail": [0, 0, 2, 5, 4, 3, 2, 1]} in pairs


def test_inverse_systems():
    module = "y1*y3^3\ny2*y3^3\n"
    assert la.hvector_of_module(module) == [1, 3, 3, 3, 2]
    assert la.socle_vector(module) == [0, 0, 0, 0, 2]
    assert len(la.annihilator_component(module, 2)) == 3
    parts = la.three_part_decomposition(module)
    assert parts["overlap"] == [1, 1, 1, 1, 0]
    ranks = la.pencil_derivative_rank("\n".join(la.remark26_witness(4, 5)))
    assert (ranks["certified_max"], ranks["rank_at_g"]) == (3, 2)


def test_decide_and_census():
    cert = la.decide([1, 3, 6, 10, 9, 7, 5, 2])
    assert cert["verdict"] == "NotLevel"
    assert cert["stage"] == "thm23-screen"

    cert = la.decide([1, 3, 4, 4, 3, 2])
    assert cert["verdict"] == "Level"
    assert la.hvector_of_module("\n".join(cert["witness"])) == [1, 3, 4, 4, 3, 2]

    census = la.enumerate_rrr2(3, 4)
    assert [1, 3, 3, 2] in census and [1, 3, 4, 3, 2] in census


def test_bounds_and_witness():
    assert la.max_hvector(5, 5, 8)["hvector"] == [1, 5, 11, 21, 36, 21, 11, 5, 2]
    assert la.entry_upper(3, 6, 7, 2) == 12
    module = la.realize_max(3, 4, 7)
    assert la.hvector_of_module("\n".join(module)) == [1, 3, 6, 10, 11, 7, 4, 2]


def test_resolution_side():
    table = la.koszul_betti("x1^2\nx1*x2\nx2^2\nx3^4\n", is_module=False, cap=8)
    beta1 = sorted(j for (i, j, mult) in table["entries"] for _ in range(mult) if i == 1)
    assert beta1 == [2, 2, 2, 4]
    assert table["socle"] == [0, 0, 0, 0, 2]
    assert la.thm44_first_module([1, 3, 4, 4, 3, 2]) == [[2, 2, 3, 4, 6]]
    assert la.third_difference([1, 3, 3, 3, 1]) == [1, 0, -3, 2, -2, 3, 0, -1]
    assert la.diesel_check([1, 3, 3, 3, 1], [2, 2, 2, 4, 4])["admissible"]
    assert la.gotzmann_check(3, 2, 6, 10)
