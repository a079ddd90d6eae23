// levelalg: exact computations with Hilbert functions of artinian level
// algebras of type 2. Subcommands cover binomial expansions, O-sequence and
// SI tests, inverse-system modules, level certificates, entry bounds,
// Betti tables and resolution shapes.
#include "CLI11.hpp"
#include "json.hpp"

#include "levelalg/betti.hpp"
#include "levelalg/level2.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace levelalg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitInternal = 70;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw ParseError("trailing characters in integer list");
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("malformed integer list: '" + text + "'");
    }
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

HVector parse_hvector(const std::string& text) {
  try {
    return HVector(parse_int_list(text));
  } catch (const std::invalid_argument& err) {
    throw ParseError(std::string("bad h-vector: ") + err.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

InverseModule load_module(const std::string& path) {
  try {
    return InverseModule(parse_form_lines(read_file(path)));
  } catch (const std::invalid_argument& err) {
    throw ParseError("module file '" + path + "': " + err.what());
  }
}

json to_json(const std::vector<long long>& v) { return json(v); }

json to_json(const HVector& h) { return json(h.entries()); }

std::string join_ll(const std::vector<long long>& v, char sep = ',') {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

std::string write_witness_file(const std::string& name, const InverseModule& m,
                               unsigned long long seed) {
  std::ofstream out(name);
  out << "# levelalg witness (seed " << seed << ")\n";
  for (const auto& g : m.generators()) out << g.to_string() << "\n";
  return name;
}

// Printer for the two output formats of the run configuration.
class Report {
 public:
  Report(std::string subcommand, bool plain) : plain_(plain) {
    doc_["subcommand"] = std::move(subcommand);
    doc_["inputs"] = json::object();
  }
  void input(const std::string& key, const json& value) { doc_["inputs"][key] = value; }
  void set(const std::string& key, const json& value) { doc_[key] = value; }
  void print() const {
    if (!plain_) {
      std::cout << doc_.dump() << "\n";
      return;
    }
    for (const auto& [key, value] : doc_.items()) {
      if (key == "subcommand" || key == "inputs") continue;
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    }
  }

 private:
  json doc_;
  bool plain_;
};

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Level: return kExitOk;
    case Verdict::NotLevel: return kExitNegative;
    default: return kExitUnknown;
  }
}

json certificate_json(const Certificate& cert) {
  json out;
  out["verdict"] = to_string(cert.verdict);
  out["stage"] = cert.stage;
  out["trace"] = cert.trace;
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact h-vector computations for artinian level algebras of type 2"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  auto subcommand = [&](const char* name, const char* desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "print help"); // frees -h / --h for h-vectors
    return cmd;
  };

  std::string opt_h, opt_module, opt_ideal, opt_format = "structured-json";
  std::string opt_q, opt_p;
  long long opt_n = 0, opt_m = 0;
  int opt_r = 0, opt_a = 0, opt_e = 0, opt_i = 0, opt_d = 0, opt_cap = -1;
  unsigned long long opt_seed = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt_format, "structured-json or plain-table");
    cmd->add_option("--seed", opt_seed, "random seed (default 0)");
  };

  auto* c_expand = subcommand("expand", "i-binomial expansion and Macaulay upper bound");
  c_expand->add_option("--n", opt_n)->required();
  c_expand->add_option("--i", opt_i)->required();
  add_common(c_expand);

  auto* c_oseq = subcommand("oseq", "Macaulay growth test");
  c_oseq->add_option("--h", opt_h)->required();
  add_common(c_oseq);

  auto* c_si = subcommand("si", "SI-sequence test");
  c_si->add_option("--h", opt_h)->required();
  add_common(c_si);

  auto* c_gor = subcommand("gor", "Gorenstein h-vector test (codim <= 3, codim 4 with h2 <= 7)");
  c_gor->add_option("--h", opt_h)->required();
  add_common(c_gor);

  auto* c_hv = subcommand("hvector", "h-vector of an inverse-system module");
  c_hv->add_option("--module", opt_module)->required();
  add_common(c_hv);

  auto* c_ann = subcommand("ann", "annihilator component I_d");
  c_ann->add_option("--module", opt_module)->required();
  c_ann->add_option("--d", opt_d)->required();
  add_common(c_ann);

  auto* c_socle = subcommand("socle", "socle vector of an inverse-system module");
  c_socle->add_option("--module", opt_module)->required();
  add_common(c_socle);

  auto* c_dec2 = subcommand("decompose2", "two-part decompositions h = g + tail");
  c_dec2->add_option("--h", opt_h)->required();
  add_common(c_dec2);

  auto* c_dec3 = subcommand("decompose3", "three-part decomposition from two generators");
  c_dec3->add_option("--module", opt_module)->required();
  add_common(c_dec3);

  auto* c_level2 = subcommand("level2", "decide levelness of a type-2 h-vector");
  c_level2->add_option("--h", opt_h)->required();
  add_common(c_level2);

  auto* c_enum = subcommand("enumerate", "level h-vectors of shape (1,r,...,r,2)");
  c_enum->add_option("--r", opt_r)->required();
  c_enum->add_option("--e", opt_e)->required();
  add_common(c_enum);

  auto* c_bounds = subcommand("bounds", "a-range, b-bound and per-entry maxima");
  c_bounds->add_option("--r", opt_r)->required();
  c_bounds->add_option("--a", opt_a);
  c_bounds->add_option("--e", opt_e);
  c_bounds->add_option("--i", opt_i);
  add_common(c_bounds);

  auto* c_maxh = subcommand("maxh", "entrywise-maximal level h-vector (1,r,...,a,2)");
  c_maxh->add_option("--r", opt_r)->required();
  c_maxh->add_option("--a", opt_a)->required();
  c_maxh->add_option("--e", opt_e)->required();
  add_common(c_maxh);

  auto* c_wit = subcommand("witness", "construct and certify the maximal witness module");
  c_wit->add_option("--r", opt_r)->required();
  c_wit->add_option("--a", opt_a)->required();
  c_wit->add_option("--e", opt_e)->required();
  add_common(c_wit);

  auto* c_pencil = subcommand("pencil", "first-derivative ranks across a pencil");
  c_pencil->add_option("--module", opt_module)->required();
  add_common(c_pencil);

  auto* c_betti = subcommand("betti", "graded Betti numbers via the Koszul oracle");
  c_betti->add_option("--ideal", opt_ideal);
  c_betti->add_option("--module", opt_module);
  c_betti->add_option("--cap", opt_cap);
  add_common(c_betti);

  auto* c_diesel = subcommand("diesel", "codim-3 Gorenstein resolution admissibility");
  c_diesel->add_option("--h", opt_h)->required();
  c_diesel->add_option("--q", opt_q)->required();
  c_diesel->add_option("--p", opt_p);
  add_common(c_diesel);

  auto* c_mfr = subcommand("mfr-f1", "first syzygy module for level (1,3,...,3,2)");
  c_mfr->add_option("--h", opt_h)->required();
  add_common(c_mfr);

  auto* c_gotz = subcommand("gotzmann", "Gotzmann defining equality");
  c_gotz->add_option("--r", opt_r)->required();
  c_gotz->add_option("--d", opt_d)->required();
  c_gotz->add_option("--n", opt_n, "dim V")->required();
  c_gotz->add_option("--m", opt_m, "dim R_1 V")->required();
  add_common(c_gotz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return kExitUsage;
  }

  if (opt_format != "structured-json" && opt_format != "plain-table") {
    std::cerr << "unknown --format (use structured-json or plain-table)\n";
    return kExitUsage;
  }
  const bool plain = opt_format == "plain-table";
  RunConfig config;
  config.seed = opt_seed;

  try {
    if (c_expand->parsed()) {
      Report rep("expand", plain);
      rep.input("n", opt_n);
      rep.input("i", opt_i);
      if (opt_n < 1 || opt_i < 1) throw UsageError("expand: need n >= 1 and i >= 1");
      auto exp = binomial_expand(Int(opt_n), opt_i);
      rep.set("expansion", exp.to_string());
      rep.set("upper", macaulay_upper(Int(opt_n), opt_i).str());
      rep.print();
      return kExitOk;
    }
    if (c_oseq->parsed()) {
      Report rep("oseq", plain);
      rep.input("h", opt_h);
      bool ok = is_o_sequence(parse_hvector(opt_h));
      rep.set("verdict", ok ? "o-sequence" : "not-an-o-sequence");
      rep.print();
      return ok ? kExitOk : kExitNegative;
    }
    if (c_si->parsed()) {
      Report rep("si", plain);
      rep.input("h", opt_h);
      bool ok = is_si_sequence(parse_hvector(opt_h));
      rep.set("verdict", ok ? "si-sequence" : "not-an-si-sequence");
      rep.print();
      return ok ? kExitOk : kExitNegative;
    }
    if (c_gor->parsed()) {
      Report rep("gor", plain);
      rep.input("h", opt_h);
      GorVerdict v = is_gorenstein_hvector(parse_hvector(opt_h));
      rep.set("verdict", to_string(v));
      rep.print();
      return v == GorVerdict::Yes ? kExitOk
                                  : (v == GorVerdict::No ? kExitNegative : kExitUnknown);
    }
    if (c_hv->parsed()) {
      Report rep("hvector", plain);
      rep.input("module", opt_module);
      InverseModule m = load_module(opt_module);
      rep.set("hvector", to_json(hvector_of_module(m)));
      rep.print();
      return kExitOk;
    }
    if (c_ann->parsed()) {
      Report rep("ann", plain);
      rep.input("module", opt_module);
      rep.input("d", opt_d);
      if (opt_d < 0) throw UsageError("ann: d >= 0 required");
      InverseModule m = load_module(opt_module);
      json basis = json::array();
      for (const auto& f : annihilator_component(m, opt_d)) basis.push_back(f.to_string('x'));
      rep.set("dimension", basis.size());
      rep.set("basis", basis);
      rep.print();
      return kExitOk;
    }
    if (c_socle->parsed()) {
      Report rep("socle", plain);
      rep.input("module", opt_module);
      InverseModule m = load_module(opt_module);
      SocleVector s = socle_vector(m);
      rep.set("socle", to_json(s.entries));
      rep.set("type", s.type());
      rep.set("level", s.is_level());
      rep.print();
      return kExitOk;
    }
    if (c_dec2->parsed()) {
      Report rep("decompose2", plain);
      rep.input("h", opt_h);
      HVector h = parse_hvector(opt_h);
      if (h[h.socle_degree()] != 2) throw UsageError("decompose2: h_e = 2 required");
      auto pairs = two_part_decompositions(h);
      json list = json::array();
      for (const auto& p : pairs) {
        json rec;
        rec["g"] = to_json(p.g);
        rec["tail"] = to_json(p.tail);
        list.push_back(rec);
      }
      rep.set("count", pairs.size());
      rep.set("decompositions", list);
      rep.print();
      return pairs.empty() ? kExitNegative : kExitOk;
    }
    if (c_dec3->parsed()) {
      Report rep("decompose3", plain);
      rep.input("module", opt_module);
      InverseModule m = load_module(opt_module);
      if (m.generators().size() != 2)
        throw UsageError("decompose3: module must have exactly two generators");
      auto parts = three_part_decomposition(m.generators()[0], m.generators()[1]);
      rep.set("h_f_only", to_json(parts.h_f_only));
      rep.set("overlap", to_json(parts.overlap));
      rep.set("h_g_only", to_json(parts.h_g_only));
      rep.print();
      return kExitOk;
    }
    if (c_level2->parsed()) {
      Report rep("level2", plain);
      rep.input("h", opt_h);
      rep.input("seed", opt_seed);
      HVector h = parse_hvector(opt_h);
      if (h[h.socle_degree()] != 2) throw UsageError("level2: h_e = 2 required");
      Certificate cert = decide(h, config);
      json c = certificate_json(cert);
      json artifacts = json::object();
      if (cert.witness) {
        std::string path = "level2-witness-" + join_ll(h.entries(), '-') + ".forms";
        artifacts["witness_file"] = write_witness_file(path, *cert.witness, opt_seed);
        artifacts["witness_hvector"] = to_json(hvector_of_module(*cert.witness));
        artifacts["witness_socle"] = to_json(socle_vector(*cert.witness).entries);
      }
      rep.set("certificate", c);
      rep.set("artifacts", artifacts);
      rep.print();
      return verdict_exit(cert.verdict);
    }
    if (c_enum->parsed()) {
      Report rep("enumerate", plain);
      rep.input("r", opt_r);
      rep.input("e", opt_e);
      if (opt_r < 2 || opt_r > 4 || opt_e < 2) throw UsageError("enumerate: 2 <= r <= 4, e >= 2");
      json list = json::array();
      for (const auto& h : enumerate_rrr2(opt_r, opt_e, config)) list.push_back(to_json(h));
      rep.set("count", list.size());
      rep.set("level_hvectors", list);
      rep.print();
      return kExitOk;
    }
    if (c_bounds->parsed()) {
      Report rep("bounds", plain);
      rep.input("r", opt_r);
      if (opt_r < 2) throw UsageError("bounds: r >= 2 required");
      auto arep = a_range(opt_r);
      json aj;
      aj["upper"] = arep.upper.str();
      if (arep.lower) aj["lower"] = arep.lower->str();
      else aj["lower"] = "open (r > 7)";
      rep.set("a_range", aj);
      if (c_bounds->count("--a") && c_bounds->count("--e")) {
        rep.input("a", opt_a);
        rep.input("e", opt_e);
        auto brep = b_bound(opt_r, opt_a, opt_e);
        json bj;
        bj["upper"] = brep.upper.str();
        bj["attainable"] = {brep.attainable_range->first.str(),
                            brep.attainable_range->second.str()};
        bj["recipe"] = brep.recipe.note;
        rep.set("b_bound", bj);
        if (c_bounds->count("--i")) {
          rep.input("i", opt_i);
          rep.set("entry_upper", entry_upper(opt_r, opt_a, opt_e, opt_i).str());
        }
      }
      rep.print();
      return kExitOk;
    }
    if (c_maxh->parsed()) {
      Report rep("maxh", plain);
      rep.input("r", opt_r);
      rep.input("a", opt_a);
      rep.input("e", opt_e);
      auto [H, recipe] = max_hvector(opt_r, opt_a, opt_e);
      rep.set("hvector", to_json(H));
      rep.set("recipe", recipe.to_string());
      rep.print();
      return kExitOk;
    }
    if (c_wit->parsed()) {
      Report rep("witness", plain);
      rep.input("r", opt_r);
      rep.input("a", opt_a);
      rep.input("e", opt_e);
      rep.input("seed", opt_seed);
      auto [H, recipe] = max_hvector(opt_r, opt_a, opt_e);
      InverseModule m = realize_max(opt_r, opt_a, opt_e, opt_seed);
      std::string path = "witness-r" + std::to_string(opt_r) + "-a" + std::to_string(opt_a) +
                         "-e" + std::to_string(opt_e) + ".forms";
      json artifacts;
      artifacts["witness_file"] = write_witness_file(path, m, opt_seed);
      rep.set("hvector", to_json(hvector_of_module(m)));
      rep.set("socle", to_json(socle_vector(m).entries));
      rep.set("expected", to_json(H));
      rep.set("artifacts", artifacts);
      rep.print();
      return kExitOk;
    }
    if (c_pencil->parsed()) {
      Report rep("pencil", plain);
      rep.input("module", opt_module);
      InverseModule m = load_module(opt_module);
      if (m.generators().size() != 2)
        throw UsageError("pencil: module must have exactly two generators");
      auto ranks = pencil_derivative_rank(m.generators()[0], m.generators()[1], opt_seed);
      rep.set("generic_rank", ranks.generic_rank);
      rep.set("certified_max", ranks.certified_max);
      rep.set("rank_at_f", ranks.rank_at_f);
      rep.set("rank_at_g", ranks.rank_at_g);
      rep.set("certificate_checked", ranks.certificate_checked);
      rep.print();
      return kExitOk;
    }
    if (c_betti->parsed()) {
      Report rep("betti", plain);
      if (opt_ideal.empty() == opt_module.empty())
        throw UsageError("betti: pass exactly one of --ideal or --module");
      BettiTable table;
      if (!opt_ideal.empty()) {
        rep.input("ideal", opt_ideal);
        std::vector<Form> gens;
        try {
          gens = parse_form_lines(read_file(opt_ideal));
        } catch (const std::invalid_argument& err) {
          throw ParseError("ideal file '" + opt_ideal + "': " + err.what());
        }
        int nvars = gens.at(0).num_vars();
        int maxdeg = 0;
        for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
        int cap = opt_cap > 0 ? opt_cap : 2 * maxdeg + nvars + 1;
        table = koszul_betti(ideal_spans_from_generators(gens, cap), nvars, cap);
      } else {
        rep.input("module", opt_module);
        InverseModule m = load_module(opt_module);
        int cap = opt_cap > 0 ? opt_cap : m.max_degree() + 4;
        std::vector<std::vector<Form>> ideal(cap + 1);
        for (int d = 0; d <= cap; ++d) ideal[d] = annihilator_component(m, d);
        table = koszul_betti(ideal, m.num_vars(), cap);
      }
      rep.set("table", table.to_text());
      rep.set("beta1", json(table.degree_multiset(1)));
      rep.set("socle", to_json(socle_from_table(table).entries));
      rep.print();
      return kExitOk;
    }
    if (c_diesel->parsed()) {
      Report rep("diesel", plain);
      rep.input("h", opt_h);
      rep.input("q", opt_q);
      HVector t = parse_hvector(opt_h);
      auto qs = parse_int_list(opt_q);
      GorensteinShape shape;
      shape.e = t.socle_degree();
      for (long long q : qs) shape.q.push_back(static_cast<int>(q));
      if (!opt_p.empty()) {
        rep.input("p", opt_p);
        for (long long p : parse_int_list(opt_p)) shape.p.push_back(static_cast<int>(p));
      } else {
        for (int q : shape.q) shape.p.push_back(shape.e + 3 - q);
      }
      std::sort(shape.q.begin(), shape.q.end());
      std::sort(shape.p.rbegin(), shape.p.rend());
      auto res = diesel_check(t, shape);
      json conds = json::array();
      for (const auto& [name, ok] : res.conditions) {
        json c;
        c["condition"] = name;
        c["ok"] = ok;
        conds.push_back(c);
      }
      auto params = diesel_params(t);
      json pj;
      pj["k"] = params.k;
      pj["mu"] = params.mu;
      pj["forced_generators"] = json::object();
      for (const auto& [deg, cnt] : params.forced_generators)
        pj["forced_generators"][std::to_string(deg)] = cnt;
      rep.set("params", pj);
      rep.set("conditions", conds);
      rep.set("admissible", res.ok);
      rep.print();
      return res.ok ? kExitOk : kExitNegative;
    }
    if (c_mfr->parsed()) {
      Report rep("mfr-f1", plain);
      rep.input("h", opt_h);
      HVector h = parse_hvector(opt_h);
      std::vector<std::vector<int>> mods;
      try {
        mods = thm44_first_module(h);
      } catch (const std::invalid_argument& err) {
        rep.set("verdict", std::string("rejected: ") + err.what());
        rep.print();
        return kExitNegative;
      }
      json list = json::array();
      for (const auto& m : mods) list.push_back(json(m));
      rep.set("first_syzygy_degrees", list);
      rep.print();
      return kExitOk;
    }
    if (c_gotz->parsed()) {
      Report rep("gotzmann", plain);
      rep.input("r", opt_r);
      rep.input("d", opt_d);
      rep.input("dimV", opt_n);
      rep.input("dimR1V", opt_m);
      bool ok = gotzmann_check(opt_r, opt_d, opt_n, opt_m);
      rep.set("verdict", ok ? "gotzmann-equality-holds" : "gotzmann-equality-fails");
      rep.print();
      return ok ? kExitOk : kExitNegative;
    }
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kExitParse;
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const GenericityFailure& err) {
    std::cerr << "internal failure: " << err.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& err) {
    std::cerr << "internal failure: " << err.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
