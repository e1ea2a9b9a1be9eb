#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cm/cluster_seed.hpp"
#include "cm/minors.hpp"
#include "cm/monomial_crystal.hpp"
#include "cm/verify.hpp"

using namespace cm;
using nlohmann::json;

namespace {

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string family = "A";
  int rank = 2;
  std::string word;
  int n = 0;
  int k = 0;
  bool k_set = false;
  std::string format = "text";
  std::string output;
  std::string seed;
  bool upper = false;
  bool force = false;
  bool parallel = false;
  bool bind = false;
  bool twice = false;
};

GroupType group_of(const Config &c) {
  if (c.family.size() != 1) throw Usage("family must be one of A, B, C, D");
  try {
    return make_group(c.family[0], c.rank);
  } catch (const std::invalid_argument &e) {
    throw Usage(e.what());
  }
}

Word word_of(const Config &c, const GroupType &g) {
  if (!c.word.empty() && c.n) throw Usage("give either --word or --n");
  if (c.n) {
    try {
      return left_factor(g, c.n).word;
    } catch (const std::exception &e) {
      throw Usage(e.what());
    }
  }
  if (c.word.empty()) return i0(g);
  try {
    Word w = parse_word(c.word);
    for (int a : w)
      if (a < 1 || a > g.rank) throw Usage("letter out of range");
    return w;
  } catch (const Usage &) {
    throw;
  } catch (const std::exception &) {
    throw Usage("malformed --word");
  }
}

Monomial seed_of(const Config &c, const GroupType &g) {
  if (c.seed.empty()) throw Usage("--seed is required");
  Poly p;
  try {
    p = Poly::parse(c.seed);
  } catch (const std::exception &e) {
    throw Usage(e.what());
  }
  if (!p.is_monomial() || p.terms().begin()->second != 1) throw Usage("seed must be a single monomial");
  Monomial m = p.terms().begin()->first;
  for (auto &[v, x] : m.exponents())
    if (v.i < 1 || v.i > g.rank) throw Usage("seed variable index out of range");
  return m;
}

void emit(const Config &c, const std::string &text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw std::runtime_error("cannot open " + c.output);
  f << text;
}

void need_format(const Config &c, std::initializer_list<const char *> allowed) {
  for (auto a : allowed)
    if (c.format == a) return;
  throw Usage("unsupported --format " + c.format);
}

int cmd_minor(const Config &c) {
  need_format(c, {"text", "json"});
  GroupType g = group_of(c);
  if (!c.k_set) throw Usage("--k is required");
  MinorRequest req{g, word_of(c, g), c.k};
  try {
    validate(req);
  } catch (const std::invalid_argument &e) {
    throw Usage(e.what());
  }
  Poly p = delta_L(req, c.parallel ? Exec::Parallel : Exec::Serial);
  if (c.format == "json") {
    json j = p.to_json();
    j["request"] = to_json(req);
    emit(c, j.dump(2) + "\n");
  } else {
    emit(c, p.str() + "\n");
  }
  return 0;
}

int cmd_crystal(const Config &c) {
  need_format(c, {"text", "json", "dot"});
  GroupType g = group_of(c);
  MonomialCrystal crys(g);
  CrystalGraph gr = component(crys, seed_of(c, g));
  if (c.format == "dot") {
    emit(c, to_dot(gr));
  } else if (c.format == "json") {
    emit(c, to_json(gr).dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (auto &e : gr.edges)
      os << gr.vertices[e.src].str() << " -" << e.color << "-> " << gr.vertices[e.dst].str() << "\n";
    os << gr.vertices.size() << " vertices, " << gr.edges.size() << " edges\n";
    emit(c, os.str());
  }
  return 0;
}

int cmd_demazure(const Config &c) {
  need_format(c, {"text", "json"});
  GroupType g = group_of(c);
  MonomialCrystal crys(g);
  Word w = c.word.empty() && !c.n ? Word{} : word_of(c, g);
  std::set<Monomial> S;
  try {
    S = c.upper ? upper_demazure(crys, seed_of(c, g), w) : lower_demazure(crys, seed_of(c, g), w);
  } catch (const PreconditionError &e) {
    throw Usage(e.what());
  }
  if (c.format == "json") {
    json arr = json::array();
    for (auto &m : S) arr.push_back(m.str());
    emit(c, json{{"word", w}, {"upper", c.upper}, {"monomials", arr}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (auto &m : S) os << m.str() << "\n";
    emit(c, os.str());
  }
  return 0;
}

int cmd_verify(const Config &c) {
  need_format(c, {"text", "json"});
  GroupType g = group_of(c);
  if (!c.k_set) {
    auto recs = verify_grid(g, c.parallel ? Exec::Parallel : Exec::Serial);
    bool all = true;
    json arr = json::array();
    std::ostringstream os;
    for (auto &r : recs) {
      all = all && r.ok();
      arr.push_back(to_json(r));
      os << group_name(g) << " m=" << r.m << " d=" << r.d << " k=" << r.thm1.req.k << " terms=" << r.thm1.minor_terms
         << " demazure=" << r.thm1.demazure_size << " thm1=" << (r.thm1.match ? "match" : "MISMATCH")
         << " closed=" << (r.closed_match ? "match" : "MISMATCH");
      if (r.path_match) os << " paths=" << (*r.path_match ? "match" : "MISMATCH");
      os << " character=" << (r.character_match ? "match" : "MISMATCH");
      if (!r.error.empty()) os << " error=" << r.error;
      for (auto &[m, k] : r.thm1.multiplicities)
        if (k != 1) os << " [" << m.str() << " x" << k << "]";
      os << "\n";
    }
    os << (all ? "all match" : "mismatch found") << "\n";
    emit(c, c.format == "json" ? json{{"group", group_name(g)}, {"match", all}, {"records", arr}}.dump(2) + "\n"
                               : os.str());
    return all ? 0 : 1;
  }
  MinorRequest req{g, word_of(c, g), c.k};
  try {
    validate(req);
  } catch (const std::invalid_argument &e) {
    throw Usage(e.what());
  }
  Thm1Report rep;
  try {
    rep = verify_thm1(req, c.force);
  } catch (const ScopeError &e) {
    throw Usage(std::string(e.what()) + "; pass --force to run anyway");
  }
  json j = to_json(rep);
  std::ostringstream os;
  os << "in_scope=" << rep.in_scope << " match=" << rep.match << " minor_terms=" << rep.minor_terms
     << " demazure_size=" << rep.demazure_size << "\n";
  if (!rep.in_scope) {
    Poly p;
    for (auto &[m, k] : rep.multiplicities) p.add_term(m, k);
    auto diag = demazure_diagnostic(g, p);
    j["diagnostic"] = to_json(diag);
    for (auto &part : diag.parts) {
      os << "component with lowest " << part.lowest.str() << ": " << part.terms.size() << " terms, ";
      if (part.demazure_word)
        os << "equals the lower Demazure crystal of " << word_str(*part.demazure_word);
      else
        os << "equals no lower Demazure crystal (" << part.weyl_elements_checked << " Weyl elements checked)";
      os << "\n";
    }
  }
  emit(c, c.format == "json" ? j.dump(2) + "\n" : os.str());
  return rep.match ? 0 : 1;
}

int cmd_mutate(const Config &c) {
  need_format(c, {"text", "json"});
  GroupType g = group_of(c);
  Word w = word_of(c, g);
  Seed s = c.bind ? bound_seed(g, w) : initial_seed(g, w);
  json j;
  j["word"] = w;
  j["initial"] = to_json(s);
  if (auto d = find_skew_symmetrizer(g, w, s.matrix)) j["symmetrizer"] = *d;
  bool ok = true;
  if (c.k_set) {
    Seed m;
    try {
      m = mutate_seed(s, c.k);
    } catch (const std::invalid_argument &e) {
      throw Usage(e.what());
    }
    j["mutated"] = to_json(m);
    if (c.twice) {
      Seed back = mutate_seed(m, c.k);
      bool same = back.matrix == s.matrix && back.values == s.values;
      j["double_mutation_identity"] = same;
      ok = same;
    }
  }
  if (c.format == "json") {
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    auto dump = [&](const ExchangeMatrix &B) {
      os << "rows " << json(B.rows).dump() << " cols " << json(B.cols).dump() << "\n";
      for (size_t i = 0; i < B.rows.size(); ++i) os << B.rows[i] << ": " << json(B.b[i]).dump() << "\n";
    };
    dump(s.matrix);
    if (j.contains("mutated")) {
      os << "after mutation at " << c.k << ":\n";
      Seed m = mutate_seed(s, c.k);
      dump(m.matrix);
      os << "x[" << c.k << "]' = " << m.symbols[m.matrix.row_index(c.k)] << "\n";
      if (m.values[m.matrix.row_index(c.k)]) os << "  = " << m.values[m.matrix.row_index(c.k)]->str() << "\n";
    }
    if (j.contains("double_mutation_identity")) os << "double mutation identity: " << (ok ? "yes" : "no") << "\n";
    emit(c, os.str());
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"crystal-minors: generalized minors, monomial crystals and cluster seeds"};
  app.require_subcommand(1);
  Config c;
  auto common = [&](CLI::App *s) {
    s->add_option("--family", c.family, "A, B, C or D")->required();
    s->add_option("--rank", c.rank, "rank r")->required();
    s->add_option("--word", c.word, "comma separated reduced word");
    s->add_option("--n", c.n, "use the left factor of length n of the fixed reduced word");
    s->add_option("--format", c.format, "text, json or dot");
    s->add_option("--output", c.output, "write to a file instead of stdout");
  };
  auto add_k = [&](CLI::App *s) { s->add_option("--k", c.k, "index k")->each([&](const std::string &) { c.k_set = true; }); };

  auto *minor = app.add_subcommand("minor", "compute Delta^L(k; i)");
  common(minor);
  add_k(minor);
  minor->add_flag("--parallel", c.parallel, "parallel kernels");
  auto *crystal = app.add_subcommand("crystal", "connected component of a monomial");
  common(crystal);
  crystal->add_option("--seed", c.seed, "monomial such as Y[0,2]");
  auto *dem = app.add_subcommand("demazure", "Demazure subset generated from an extremal monomial");
  common(dem);
  dem->add_option("--seed", c.seed, "lowest (or highest with --upper) monomial");
  dem->add_flag("--upper", c.upper, "upper Demazure crystal");
  auto *ver = app.add_subcommand("verify", "check the theorem grid, or one request with --k");
  common(ver);
  add_k(ver);
  ver->add_flag("--force", c.force, "run out-of-scope requests with diagnostics");
  ver->add_flag("--parallel", c.parallel, "fan out across the grid");
  auto *mut = app.add_subcommand("mutate", "exchange matrix and seed mutation");
  common(mut);
  add_k(mut);
  mut->add_flag("--bind", c.bind, "bind cluster variables to the minors");
  mut->add_flag("--twice", c.twice, "mutate twice and check the identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }
  try {
    if (*minor) return cmd_minor(c);
    if (*crystal) return cmd_crystal(c);
    if (*dem) return cmd_demazure(c);
    if (*ver) return cmd_verify(c);
    if (*mut) return cmd_mutate(c);
  } catch (const Usage &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
