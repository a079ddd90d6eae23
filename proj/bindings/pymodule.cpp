// Python bindings: the main operations, with forms and modules passed as
// text in the generator grammar (one form per line, '#' comments).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "levelalg/betti.hpp"
#include "levelalg/level2.hpp"

#include <sstream>

namespace py = pybind11;
using namespace levelalg;

namespace {

py::int_ big(const Int& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

HVector hv(const std::vector<long long>& entries) { return HVector(entries); }

InverseModule module_from_text(const std::string& text) {
  return InverseModule(parse_form_lines(text));
}

std::vector<std::string> module_lines(const InverseModule& m) {
  std::vector<std::string> out;
  for (const auto& g : m.generators()) out.push_back(g.to_string());
  return out;
}

py::dict certificate_dict(const Certificate& cert) {
  py::dict out;
  out["verdict"] = to_string(cert.verdict);
  out["stage"] = cert.stage;
  out["trace"] = cert.trace;
  out["witness"] = cert.witness ? py::cast(module_lines(*cert.witness)) : py::none();
  return out;
}

py::list table_entries(const BettiTable& t) {
  py::list out;
  for (const auto& [key, mult] : t.entries)
    out.append(py::make_tuple(key.first, key.second, mult));
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact h-vector computations for artinian level algebras of type 2";

  py::register_exception<GenericityFailure>(m, "GenericityFailure");

  // growth bounds
  m.def("binomial_expand", [](long long n, long long i) {
    py::list out;
    for (const auto& t : binomial_expand(Int(n), i).terms)
      out.append(py::make_tuple(t.top, t.bottom));
    return out;
  }, py::arg("n"), py::arg("i"));
  m.def("macaulay_upper", [](long long n, long long i) { return big(macaulay_upper(Int(n), i)); },
        py::arg("n"), py::arg("i"));
  m.def("is_o_sequence", [](const std::vector<long long>& s) { return is_o_sequence_raw(s); },
        py::arg("h"));
  m.def("lex_growth_oracle", &lex_growth_oracle, py::arg("codim"), py::arg("d"), py::arg("dim_v"));

  // h-vector algebra
  m.def("first_difference", &first_difference, py::arg("v"));
  m.def("reverse_window", &reverse_window, py::arg("v"));
  m.def("is_differentiable", &is_differentiable, py::arg("v"));
  m.def("is_si_sequence", [](const std::vector<long long>& v) { return is_si_sequence(hv(v)); },
        py::arg("h"));
  m.def("is_gorenstein_hvector",
        [](const std::vector<long long>& v) { return to_string(is_gorenstein_hvector(hv(v))); },
        py::arg("h"));
  m.def("two_part_decompositions", [](const std::vector<long long>& v) {
    py::list out;
    for (const auto& p : two_part_decompositions(hv(v))) {
      py::dict rec;
      rec["g"] = p.g.entries();
      rec["tail"] = p.tail;
      out.append(rec);
    }
    return out;
  }, py::arg("h"));

  // inverse systems (modules as grammar text)
  m.def("hvector_of_module", [](const std::string& text) {
    return hvector_of_module(module_from_text(text)).entries();
  }, py::arg("module_text"));
  m.def("socle_vector", [](const std::string& text) {
    return socle_vector(module_from_text(text)).entries;
  }, py::arg("module_text"));
  m.def("annihilator_component", [](const std::string& text, int d) {
    std::vector<std::string> out;
    for (const auto& f : annihilator_component(module_from_text(text), d))
      out.push_back(f.to_string('x'));
    return out;
  }, py::arg("module_text"), py::arg("d"));
  m.def("three_part_decomposition", [](const std::string& text) {
    InverseModule mod = module_from_text(text);
    if (mod.generators().size() != 2)
      throw std::invalid_argument("three_part_decomposition: need exactly two generators");
    auto parts = three_part_decomposition(mod.generators()[0], mod.generators()[1]);
    py::dict out;
    out["h_f_only"] = parts.h_f_only;
    out["overlap"] = parts.overlap;
    out["h_g_only"] = parts.h_g_only;
    return out;
  }, py::arg("module_text"));
  m.def("pencil_derivative_rank", [](const std::string& text, unsigned long long seed) {
    InverseModule mod = module_from_text(text);
    if (mod.generators().size() != 2)
      throw std::invalid_argument("pencil_derivative_rank: need exactly two generators");
    auto r = pencil_derivative_rank(mod.generators()[0], mod.generators()[1], seed);
    py::dict out;
    out["generic_rank"] = r.generic_rank;
    out["certified_max"] = r.certified_max;
    out["rank_at_f"] = r.rank_at_f;
    out["rank_at_g"] = r.rank_at_g;
    out["certificate_checked"] = r.certificate_checked;
    return out;
  }, py::arg("module_text"), py::arg("seed") = 0);
  m.def("expected_generic_hvector", [](int r, long long mm, int d) {
    return expected_generic_hvector(r, mm, d).entries();
  }, py::arg("r"), py::arg("m"), py::arg("d"));
  m.def("generic_power_sum", [](int r, long long mm, int d, unsigned long long seed) {
    return generic_power_sum(r, mm, d, seed).to_string();
  }, py::arg("r"), py::arg("m"), py::arg("d"), py::arg("seed") = 0);
  m.def("augmented_level_hvector", [](const std::vector<long long>& h, int r, long long mm, int d) {
    return augmented_level_hvector(hv(h), r, mm, d).entries();
  }, py::arg("h"), py::arg("r"), py::arg("m"), py::arg("d"));
  m.def("remark26_witness", [](int r, int e) {
    return module_lines(remark26_witness(r, e));
  }, py::arg("r"), py::arg("e"));

  // level-2 decision procedures
  m.def("iarrobino_bound", [](const std::vector<long long>& h, int u) {
    auto b = iarrobino_bound(hv(h), u);
    py::dict out;
    out["u"] = b.u;
    out["delta"] = b.delta_u;
    out["guaranteed_entry"] = b.guaranteed_entry;
    return out;
  }, py::arg("h"), py::arg("u"));
  m.def("check_a_lower_bound", &check_a_lower_bound, py::arg("r"));
  m.def("thm29_check", [](const std::vector<long long>& h, unsigned long long seed) {
    RunConfig cfg;
    cfg.seed = seed;
    return certificate_dict(thm29_check(hv(h), cfg));
  }, py::arg("h"), py::arg("seed") = 0);
  m.def("screen_cor22", [](const std::vector<long long>& h) {
    return certificate_dict(screen_cor22(hv(h)));
  }, py::arg("h"));
  m.def("screen_thm23", [](const std::vector<long long>& h) {
    return certificate_dict(screen_thm23(hv(h)));
  }, py::arg("h"));
  m.def("decide", [](const std::vector<long long>& h, unsigned long long seed) {
    RunConfig cfg;
    cfg.seed = seed;
    return certificate_dict(decide(hv(h), cfg));
  }, py::arg("h"), py::arg("seed") = 0);
  m.def("enumerate_rrr2", [](int r, int e_max) {
    py::list out;
    for (const auto& h : enumerate_rrr2(r, e_max)) out.append(h.entries());
    return out;
  }, py::arg("r"), py::arg("e_max"));
  m.def("gorenstein_hvectors", [](int codim, int e) {
    py::list out;
    for (const auto& g : gorenstein_hvectors(codim, e)) out.append(g.entries());
    return out;
  }, py::arg("codim"), py::arg("e"));

  // bounds
  m.def("lemma34_max", [](int r, int a, int i) { return big(lemma34_max(r, a, i)); },
        py::arg("r"), py::arg("a"), py::arg("i"));
  m.def("lemma34_bruteforce", [](int r, int a, int i) { return big(lemma34_bruteforce(r, a, i)); },
        py::arg("r"), py::arg("a"), py::arg("i"));
  m.def("a_range", [](int r) {
    auto rep = a_range(r);
    py::dict out;
    out["upper"] = big(rep.upper);
    out["lower"] = rep.lower ? py::object(big(*rep.lower)) : py::none();
    return out;
  }, py::arg("r"));
  m.def("b_bound", [](int r, int a, int e) {
    auto rep = b_bound(r, a, e);
    py::dict out;
    out["upper"] = big(rep.upper);
    out["attainable"] = py::make_tuple(big(rep.attainable_range->first),
                                       big(rep.attainable_range->second));
    out["recipe"] = rep.recipe.note;
    return out;
  }, py::arg("r"), py::arg("a"), py::arg("e"));
  m.def("entry_upper", [](int r, int a, int e, int i) { return big(entry_upper(r, a, e, i)); },
        py::arg("r"), py::arg("a"), py::arg("e"), py::arg("i"));
  m.def("max_hvector", [](int r, int a, int e) {
    auto [H, recipe] = max_hvector(r, a, e);
    py::dict out;
    out["hvector"] = H.entries();
    out["recipe"] = recipe.to_string();
    return out;
  }, py::arg("r"), py::arg("a"), py::arg("e"));
  m.def("realize_max", [](int r, int a, int e, unsigned long long seed) {
    return module_lines(realize_max(r, a, e, seed));
  }, py::arg("r"), py::arg("a"), py::arg("e"), py::arg("seed") = 0);

  // resolution side
  m.def("third_difference", [](const std::vector<long long>& t) {
    return third_difference(hv(t));
  }, py::arg("h"));
  m.def("diesel_params", [](const std::vector<long long>& t) {
    auto p = diesel_params(hv(t));
    py::dict out;
    out["k"] = p.k;
    out["mu"] = p.mu;
    out["forced_generators"] = p.forced_generators;
    out["degenerate_codim"] = p.degenerate_codim;
    return out;
  }, py::arg("h"));
  m.def("diesel_check", [](const std::vector<long long>& t, std::vector<int> q,
                           std::optional<std::vector<int>> p) {
    HVector T = hv(t);
    GorensteinShape shape;
    shape.e = T.socle_degree();
    shape.q = std::move(q);
    std::sort(shape.q.begin(), shape.q.end());
    if (p) shape.p = *p;
    else for (int qq : shape.q) shape.p.push_back(shape.e + 3 - qq);
    std::sort(shape.p.rbegin(), shape.p.rend());
    auto res = diesel_check(T, shape);
    py::dict out;
    out["admissible"] = res.ok;
    py::list conds;
    for (const auto& [name, ok] : res.conditions) conds.append(py::make_tuple(name, ok));
    out["conditions"] = conds;
    return out;
  }, py::arg("h"), py::arg("q"), py::arg("p") = py::none());
  m.def("thm44_first_module", [](const std::vector<long long>& h) {
    return thm44_first_module(hv(h));
  }, py::arg("h"));
  m.def("koszul_betti", [](const std::string& text, bool is_module, int cap) {
    py::dict out;
    BettiTable table;
    if (is_module) {
      InverseModule mod = module_from_text(text);
      int c = cap > 0 ? cap : mod.max_degree() + 4;
      std::vector<std::vector<Form>> ideal(c + 1);
      for (int d = 0; d <= c; ++d) ideal[d] = annihilator_component(mod, d);
      table = koszul_betti(ideal, mod.num_vars(), c);
    } else {
      auto gens = parse_form_lines(text);
      int nvars = gens.at(0).num_vars();
      int maxdeg = 0;
      for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
      int c = cap > 0 ? cap : 2 * maxdeg + nvars + 1;
      table = koszul_betti(ideal_spans_from_generators(gens, c), nvars, c);
    }
    out["codim"] = table.codim;
    out["entries"] = table_entries(table);
    out["hvector"] = table.companion->entries();
    out["socle"] = socle_from_table(table).entries;
    return out;
  }, py::arg("text"), py::arg("is_module") = false, py::arg("cap") = -1);
  m.def("gotzmann_check", &gotzmann_check, py::arg("codim"), py::arg("d"), py::arg("dim_v"),
        py::arg("dim_r1v"));
}
