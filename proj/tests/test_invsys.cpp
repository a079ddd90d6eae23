#include "doctest.h"

#include "levelalg/invsys.hpp"

using namespace levelalg;

namespace {

Form mono(int r, const Exponent& e, const Rat& c = 1) {
  int d = 0;
  for (int v : e) d += v;
  Form f(r, d);
  f.add_term(e, c);
  return f;
}

HVector hv(std::vector<long long> v) { return HVector(std::move(v)); }

// Algebra-side socle oracle: s_i = dim ker(A_i -> (A_{i+1})^r) under
// multiplication by every variable, with A_d presented by the annihilator.
SocleVector socle_by_multiplication(const InverseModule& m) {
  const int r = m.num_vars();
  const int e = m.max_degree();
  SocleVector s;
  s.entries.assign(e + 1, 0);
  for (int d = 0; d <= e; ++d) {
    QMat rows_d, rows_d1;
    for (const auto& f : annihilator_component(m, d)) rows_d.push_back(coefficient_row(f));
    for (const auto& f : annihilator_component(m, d + 1)) rows_d1.push_back(coefficient_row(f));
    Rref rr_d = rows_d.empty() ? Rref{} : rref(rows_d);
    Rref rr_d1 = rows_d1.empty() ? Rref{} : rref(rows_d1);

    const auto& basis_d = monomial_basis(r, d);
    const auto& basis_d1 = monomial_basis(r, d + 1);
    std::vector<int> std_d, std_d1;
    std::vector<int> pos_d1(basis_d1.size(), -1);
    {
      std::vector<bool> piv(basis_d.size(), false);
      for (int p : rr_d.pivots) piv[p] = true;
      for (size_t c = 0; c < basis_d.size(); ++c)
        if (!piv[c]) std_d.push_back(static_cast<int>(c));
    }
    std::map<int, int> pivot_row;
    {
      std::vector<bool> piv(basis_d1.size(), false);
      for (size_t k = 0; k < rr_d1.pivots.size(); ++k) {
        piv[rr_d1.pivots[k]] = true;
        pivot_row[rr_d1.pivots[k]] = static_cast<int>(k);
      }
      for (size_t c = 0; c < basis_d1.size(); ++c)
        if (!piv[c]) {
          pos_d1[c] = static_cast<int>(std_d1.size());
          std_d1.push_back(static_cast<int>(c));
        }
    }
    // stacked multiplication matrix: rows indexed by (variable, std monomial
    // of degree d+1), columns by std monomials of degree d
    QMat mult(static_cast<size_t>(r) * std_d1.size(), QVec(std_d.size(), Rat(0)));
    for (size_t uc = 0; uc < std_d.size(); ++uc) {
      for (int v = 0; v < r; ++v) {
        Exponent exp = basis_d[std_d[uc]];
        ++exp[v];
        int col = monomial_index(r, exp);
        if (pos_d1[col] >= 0) {
          mult[v * std_d1.size() + pos_d1[col]][uc] += 1;
        } else {
          const auto& row = rr_d1.rows[pivot_row.at(col)];
          for (size_t c2 = 0; c2 < std_d1.size(); ++c2)
            if (!row[std_d1[c2]].is_zero())
              mult[v * std_d1.size() + c2][uc] -= row[std_d1[c2]];
        }
      }
    }
    long long kernel = static_cast<long long>(std_d.size()) - (mult.empty() ? 0 : rank(mult));
    s.entries[d] = kernel;
  }
  return s;
}

} // namespace

TEST_CASE("module h-vectors") {
  InverseModule m({mono(3, {1, 0, 3}), mono(3, {0, 1, 3})});
  CHECK(hvector_of_module(m) == hv({1, 3, 3, 3, 2}));

  InverseModule single({mono(1, {5})});
  CHECK(hvector_of_module(single) == hv({1, 1, 1, 1, 1, 1}));

  // Remark 2.6 construction with r = 4, e = 5
  InverseModule rem26 = remark26_witness(4, 5);
  CHECK(hvector_of_module(rem26) == hv({1, 4, 4, 4, 4, 2}));
}

TEST_CASE("module construction rejects dependent generators") {
  CHECK_THROWS_AS(InverseModule({mono(2, {1, 1}), mono(2, {1, 1}, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(InverseModule({Form(2, 3)}), std::invalid_argument); // zero generator
}

TEST_CASE("annihilator components span the documented ideals") {
  auto span_rows = [](const std::vector<Form>& fs) {
    QMat rows;
    for (const auto& f : fs) rows.push_back(coefficient_row(f));
    return rows;
  };

  InverseModule m1({mono(3, {1, 0, 3}), mono(3, {0, 1, 3})});
  auto i2 = annihilator_component(m1, 2);
  CHECK(same_span(span_rows(i2),
                  span_rows({mono(3, {2, 0, 0}), mono(3, {1, 1, 0}), mono(3, {0, 2, 0})})));

  InverseModule m2({mono(3, {3, 1, 0}), mono(3, {0, 0, 4})});
  auto j2 = annihilator_component(m2, 2);
  CHECK(same_span(span_rows(j2),
                  span_rows({mono(3, {1, 0, 1}), mono(3, {0, 1, 1}), mono(3, {0, 2, 0})})));

  InverseModule m3({mono(4, {3, 0, 0, 0})});
  auto k1 = annihilator_component(m3, 1);
  CHECK(same_span(span_rows(k1), span_rows({mono(4, {0, 1, 0, 0}), mono(4, {0, 0, 1, 0}),
                                            mono(4, {0, 0, 0, 1})})));
}

TEST_CASE("rank-nullity of the apolarity pairing") {
  InverseModule m({mono(3, {1, 0, 3}), mono(3, {0, 1, 3}) + mono(3, {0, 4, 0}).scaled(Rat(Int(1), Int(3)))});
  HVector h = hvector_of_module(m);
  for (int d = 0; d <= m.max_degree(); ++d) {
    Int dim_i = Int(annihilator_component(m, d).size());
    CHECK(dim_i + Int(h[d]) == ring_dim(3, d));
  }
}

TEST_CASE("socle vectors, both routes") {
  InverseModule level({mono(3, {1, 0, 3}), mono(3, {0, 1, 3})});
  SocleVector s1 = socle_vector(level);
  CHECK(s1.entries == std::vector<long long>{0, 0, 0, 0, 2});
  CHECK(s1.is_level());
  CHECK(s1.type() == 2);
  CHECK(socle_by_multiplication(level).entries == s1.entries);

  InverseModule gor({mono(1, {3})});
  CHECK(socle_vector(gor).entries == std::vector<long long>{0, 0, 0, 1});

  InverseModule mixed({mono(2, {2, 0}), mono(2, {0, 3})});
  SocleVector s3 = socle_vector(mixed);
  CHECK(s3.entries == std::vector<long long>{0, 0, 1, 1});
  CHECK_FALSE(s3.is_level());
  CHECK(socle_by_multiplication(mixed).entries == s3.entries);

  // top degree counts generators outside the derivative closure of the rest
  InverseModule pair({mono(2, {4, 0}), mono(2, {0, 4})});
  CHECK(socle_vector(pair).entries == std::vector<long long>{0, 0, 0, 0, 2});
}

TEST_CASE("three-part decompositions (worked examples)") {
  auto parts = three_part_decomposition(mono(3, {1, 0, 3}), mono(3, {0, 1, 3}));
  CHECK(parts.overlap == std::vector<long long>{1, 1, 1, 1, 0});
  CHECK(parts.h_f_only == std::vector<long long>{0, 1, 1, 1, 1});
  CHECK(parts.h_g_only == std::vector<long long>{0, 1, 1, 1, 1});

  auto parts2 = three_part_decomposition(mono(2, {4, 0}), mono(2, {0, 4}));
  CHECK(parts2.overlap == std::vector<long long>{1, 0, 0, 0, 0});
  CHECK(parts2.h_f_only == std::vector<long long>{0, 1, 1, 1, 1});

  // degenerate pair: full overlap below the top degree, both survive at the top
  auto parts3 = three_part_decomposition(mono(2, {4, 0}) + mono(2, {0, 4}), mono(2, {0, 4}));
  CHECK(parts3.overlap == std::vector<long long>{1, 1, 1, 1, 0});
  CHECK(parts3.h_f_only == std::vector<long long>{0, 1, 1, 1, 1});
  CHECK(parts3.h_g_only == std::vector<long long>{0, 0, 0, 0, 1});

  CHECK_THROWS_AS(three_part_decomposition(mono(2, {2, 0}), mono(2, {0, 3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(three_part_decomposition(mono(2, {2, 0}), mono(2, {2, 0}, 5)),
                  std::invalid_argument);
}

TEST_CASE("three-part identities over seeded random pairs") {
  Sampler sampler(20240 /* fixed */);
  int done = 0;
  for (int trial = 0; done < 25 && trial < 200; ++trial) {
    int r = static_cast<int>(sampler.integer(2, 4));
    int e = static_cast<int>(sampler.integer(2, 5));
    Form f(r, e), g(r, e);
    for (const auto& m : monomial_basis(r, e)) {
      if (sampler.integer(0, 2) == 0) f.add_term(m, sampler.rational());
      if (sampler.integer(0, 2) == 0) g.add_term(m, sampler.rational());
    }
    if (f.is_zero() || g.is_zero()) continue;
    QMat rows{coefficient_row(f), coefficient_row(g)};
    if (rank(rows) != 2) continue;
    ++done;

    auto parts = three_part_decomposition(f, g);
    HVector hf = hvector_of_module(InverseModule({f}));
    HVector hg = hvector_of_module(InverseModule({g}));
    HVector hm = hvector_of_module(InverseModule({f, g}));
    for (int d = 0; d <= e; ++d) {
      CHECK(parts.h_f_only[d] + parts.overlap[d] == hf[d]);
      CHECK(parts.overlap[d] + parts.h_g_only[d] == hg[d]);
      CHECK(parts.h_f_only[d] + parts.overlap[d] + parts.h_g_only[d] == hm[d]);
    }
    CHECK(is_o_sequence_raw(parts.overlap));
    CHECK(is_o_sequence_raw(reverse_window(parts.h_f_only)));
    CHECK(is_o_sequence_raw(reverse_window(parts.h_g_only)));
    CHECK(is_o_sequence(hm));
  }
  CHECK(done == 25);
}

TEST_CASE("expected generic h-vectors (closed form)") {
  CHECK(expected_generic_hvector(4, 35, 8) == hv({1, 4, 10, 20, 35, 20, 10, 4, 1}));
  CHECK(expected_generic_hvector(3, 100, 4) == hv({1, 3, 6, 3, 1}));
  CHECK(expected_generic_hvector(5, 1, 7) == hv({1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(expected_generic_hvector(1, 9, 4) == hv({1, 1, 1, 1, 1}));
}

TEST_CASE("certified generic power sums") {
  Form f = generic_power_sum(3, 4, 7, 11);
  CHECK(hvector_of_module(InverseModule({f})) == hv({1, 3, 4, 4, 4, 4, 3, 1}));

  Form f8 = generic_power_sum(3, 4, 8, 11);
  CHECK(hvector_of_module(InverseModule({f8})) == hv({1, 3, 4, 4, 4, 4, 4, 3, 1}));

  Form g = generic_power_sum(2, 3, 5, 17);
  CHECK(hvector_of_module(InverseModule({g})) == hv({1, 2, 3, 3, 2, 1}));

  Form one = generic_power_sum(1, 1, 6, 0);
  CHECK(hvector_of_module(InverseModule({one})) == hv({1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("augmented level h-vectors") {
  CHECK(augmented_level_hvector(hv({1, 4, 10, 20, 35, 20, 10, 4, 1}), 5, 1, 8) ==
        hv({1, 5, 11, 21, 36, 21, 11, 5, 2}));
  CHECK(augmented_level_hvector(hv({1, 1, 1, 1, 1, 1, 1, 1}), 3, 10, 7) ==
        hv({1, 3, 6, 10, 11, 7, 4, 2}));
  CHECK_THROWS_AS(augmented_level_hvector(hv({1, 1}), 1, 1, 1), std::invalid_argument);
}

TEST_CASE("Remark 2.6 witnesses match the printed generators") {
  InverseModule w3 = remark26_witness(3, 5);
  CHECK(w3.generators()[0] == mono(3, {4, 1, 0}));
  CHECK(w3.generators()[1] == mono(3, {4, 0, 1}));
  CHECK(hvector_of_module(w3) == hv({1, 3, 3, 3, 3, 2}));

  InverseModule w4 = remark26_witness(4, 5);
  CHECK(w4.generators()[0] == mono(4, {4, 1, 0, 0}) + mono(4, {0, 0, 0, 5}));
  CHECK(w4.generators()[1] == mono(4, {4, 0, 1, 0}));

  InverseModule w5 = remark26_witness(5, 4);
  CHECK(w5.generators()[0] == mono(5, {3, 1, 0, 0, 0}) + mono(5, {0, 0, 0, 4, 0}));
  CHECK(w5.generators()[1] == mono(5, {3, 0, 1, 0, 0}) + mono(5, {0, 0, 0, 0, 4}));
  CHECK(hvector_of_module(w5) == hv({1, 5, 5, 5, 2}));

  InverseModule w2 = remark26_witness(2, 6);
  CHECK(hvector_of_module(w2) == hv({1, 2, 2, 2, 2, 2, 2}));
}

TEST_CASE("pencil derivative ranks") {
  InverseModule w3 = remark26_witness(3, 5);
  auto p3 = pencil_derivative_rank(w3.generators()[0], w3.generators()[1]);
  CHECK(p3.generic_rank == 2);
  CHECK(p3.certified_max == 2);
  CHECK(p3.certificate_checked);
  CHECK(p3.rank_at_f == 2);
  CHECK(p3.rank_at_g == 2);

  InverseModule w4 = remark26_witness(4, 5);
  auto p4 = pencil_derivative_rank(w4.generators()[0], w4.generators()[1]);
  CHECK(p4.generic_rank == 3);
  CHECK(p4.certified_max == 3);
  CHECK(p4.rank_at_g == 2); // the exceptional member [0:1]
  CHECK(p4.rank_at_f == 3);

  auto cubes = pencil_derivative_rank(mono(2, {3, 0}), mono(2, {0, 3}));
  CHECK(cubes.generic_rank == 2);
  CHECK(cubes.certified_max == 2);
  CHECK(cubes.rank_at_f == 1);
  CHECK(cubes.rank_at_g == 1);

  // certificate dominates every sampled point
  CHECK(cubes.certified_max >= cubes.rank_at_f);
  CHECK(p4.certified_max >= p4.rank_at_g);
}
