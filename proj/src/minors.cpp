#include "cm/minors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cm {

void validate(const MinorRequest &req) {
  int r = req.group.rank, n = static_cast<int>(req.word.size());
  for (int a : req.word)
    if (a < 1 || a > r) throw std::invalid_argument("letter out of range");
  if (req.k == 0 || req.k < -r || req.k > n) throw std::invalid_argument("k out of range");
  if (!is_reduced(req.group, req.word)) throw std::invalid_argument("word is not reduced");
}

int minor_index(const MinorRequest &req) {
  validate(req);
  return req.k > 0 ? req.word[req.k - 1] : -req.k;
}

nlohmann::json to_json(const MinorRequest &req) {
  return {{"family", std::string(1, family_char(req.group.family))},
          {"rank", req.group.rank},
          {"word", req.word},
          {"k", req.k}};
}

namespace {

struct Evaluated {
  const Module *module;
  RepVector extremal;
};

Evaluated extremal(const MinorRequest &req, Exec ex) {
  int d = minor_index(req);
  const Module &mod = module_cached(module_for(req.group, d));
  RepVector u = mod.basis(mod.highest());
  return {&mod, mod.sbar_word(u_leq(req.word, req.k, req.group.rank), u, ex)};
}

}  // namespace

Poly delta_L(const MinorRequest &req, Exec ex) {
  auto [mod, w] = extremal(req, ex);
  RepVector x = mod->xL_apply(req.word, mod->basis(mod->highest()), ex);
  Poly num = mod->gram(x, w), den = mod->gram(w, w);
  if (den.size() != 1 || !den.terms().begin()->first.is_one())
    throw std::logic_error("extremal vector norm is not a constant");
  Integer c = den.terms().begin()->second;
  Poly out;
  for (auto &[m, a] : num.terms()) {
    if (a % c != 0) throw std::logic_error("minor normalization is not integral");
    out.add_term(m, a / c);
  }
  return out;
}

TorusScaledMinor delta_G(const MinorRequest &req, Exec ex) {
  int d = minor_index(req);
  Word u = u_leq(req.word, req.k, req.group.rank);
  return {weyl_apply(req.group, u, fundamental(req.group, d)), delta_L(req, ex)};
}

Weight extremal_vector_weight(const MinorRequest &req) {
  auto [mod, w] = extremal(req, Exec::Serial);
  std::optional<size_t> at;
  for (size_t b = 0; b < w.size(); ++b) {
    if (w[b].is_zero()) continue;
    if (at) throw std::logic_error("extremal vector is not a multiple of a basis vector");
    at = b;
  }
  if (!at) throw std::logic_error("extremal vector vanished");
  return mod->weight(*at);
}

GmlemReport check_gmlem(const MinorRequest &req, int extra_letter) {
  int d = minor_index(req);
  if (extra_letter < 1 || extra_letter > req.group.rank) throw PreconditionError("letter out of range");
  if (extra_letter == d) throw PreconditionError("appended letter equals i_k");
  Word w2 = req.word;
  w2.push_back(extra_letter);
  if (length(req.group, w2) != static_cast<int>(w2.size()))
    throw PreconditionError("appending the letter does not increase the length");
  auto [s, i] = word_variables(w2).back();
  GmlemReport rep;
  rep.new_variable = {s, i};
  Poly a = delta_L(req), b = delta_L({req.group, w2, req.k});
  rep.variable_absent = !b.uses(rep.new_variable);
  rep.equal = a == b;
  return rep;
}

MinorRequest thm1_request(const GroupType &g, int m, int d) {
  int r = g.rank, n, k;
  if (g.family == Family::A) {
    if (m < 2 || m > r || d < 1 || d > r - m + 1) throw std::invalid_argument("(m, d) out of range");
    auto start = [&](int j) {
      int s = 0;
      for (int c = 1; c < j; ++c) s += r - c + 1;
      return s;
    };
    n = start(m) + d;
    k = start(m - 1) + d;
  } else {
    int mmax = g.family == Family::D ? r - 1 : r;
    if (m < 2 || m > mmax || d < 1 || d > r) throw std::invalid_argument("(m, d) out of range");
    n = (m - 1) * r + d;
    k = (m - 2) * r + d;
  }
  return {g, left_factor(g, n).word, k};
}

std::vector<GridPoint> thm1_grid(const GroupType &g) {
  std::vector<GridPoint> out;
  int r = g.rank;
  int mmax = g.family == Family::D ? r - 1 : r;
  for (int m = 2; m <= mmax; ++m) {
    int dmax = g.family == Family::A ? r - m + 1 : r;
    for (int d = 1; d <= dmax; ++d) out.push_back({m, d, thm1_request(g, m, d)});
  }
  return out;
}

ScopeInfo scope_of(const MinorRequest &req) {
  validate(req);
  ScopeInfo s;
  Word full = i0(req.group);
  s.left_factor = req.word.size() <= full.size() && std::equal(req.word.begin(), req.word.end(), full.begin());
  s.m = cycle_count(req.word);
  if (req.k > 0) {
    s.cycle_of_k = word_variables(req.word)[req.k - 1].first;
    s.last_matches = !req.word.empty() && req.word.back() == req.word[req.k - 1];
  }
  return s;
}

Thm1Report verify_thm1(const MinorRequest &req, bool force, Exec ex) {
  Thm1Report rep;
  rep.req = req;
  ScopeInfo sc = scope_of(req);
  rep.in_scope = sc.in_scope();
  if (!rep.in_scope && !force)
    throw ScopeError("request is outside the theorem's scope (i_k must lie in the (m-1)th cycle and i_n = i_k)");
  int d = minor_index(req), r = req.group.rank;
  MonomialCrystal crys(req.group);
  rep.seed = Monomial::var(sc.m, d, r, -1);
  Poly p = delta_L(req, ex);
  auto S = lower_demazure(crys, rep.seed, u_leq(req.word, req.k, r));
  rep.demazure_size = S.size();
  rep.minor_terms = p.size();
  rep.positive = true;
  rep.support_subset = true;
  for (auto &[m, c] : p.terms()) {
    rep.multiplicities.push_back({m, c});
    if (c <= 0) rep.positive = false;
    if (!S.count(m)) rep.support_subset = false;
  }
  rep.match = rep.positive && rep.support_subset && p.size() == S.size();
  return rep;
}

nlohmann::json to_json(const Thm1Report &r) {
  nlohmann::json mult = nlohmann::json::array();
  for (auto &[m, c] : r.multiplicities) mult.push_back({{"monomial", m.str()}, {"coeff", c.str()}});
  return {{"request", to_json(r.req)},
          {"in_scope", r.in_scope},
          {"match", r.match},
          {"multiplicities", mult},
          {"demazure_size", r.demazure_size},
          {"minor_terms", r.minor_terms}};
}

DemazureDiagnostic demazure_diagnostic(const GroupType &g, const Poly &minor) {
  MonomialCrystal crys(g);
  DemazureDiagnostic out;
  out.minor = minor;
  std::map<Monomial, DemazurePart> parts;
  for (auto &[m, c] : minor.terms()) {
    Monomial low = crys.descend_to_lowest(m);
    auto &part = parts[low];
    part.lowest = low;
    part.terms.push_back({m, c});
  }
  auto weights = [&](const auto &monos) {
    std::multiset<Weight> w;
    for (auto &m : monos) w.insert(crys.wt(m));
    return w;
  };
  auto elements = weyl_elements(g);
  for (auto &[low, part] : parts) {
    part.highest_weight = crys.wt(crys.ascend_to_highest(low));
    std::set<Monomial> support;
    for (auto &t : part.terms) support.insert(t.first);
    auto target = weights(support);
    for (auto &w : elements) {
      auto S = lower_demazure(crys, low, w);
      ++part.weyl_elements_checked;
      if (!part.demazure_word && S == support) part.demazure_word = w;
      if (!part.weight_multiset_word && weights(S) == target) part.weight_multiset_word = w;
    }
    out.parts.push_back(std::move(part));
  }
  return out;
}

nlohmann::json to_json(const DemazureDiagnostic &d) {
  nlohmann::json parts = nlohmann::json::array();
  for (auto &p : d.parts) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto &[m, c] : p.terms) terms.push_back({{"monomial", m.str()}, {"coeff", c.str()}});
    parts.push_back({{"lowest", p.lowest.str()},
                     {"highest_weight", p.highest_weight},
                     {"terms", terms},
                     {"demazure_word", p.demazure_word ? nlohmann::json(*p.demazure_word) : nlohmann::json()},
                     {"weight_multiset_word",
                      p.weight_multiset_word ? nlohmann::json(*p.weight_multiset_word) : nlohmann::json()},
                     {"weyl_elements_checked", p.weyl_elements_checked}});
  }
  return {{"minor_terms", d.minor.size()}, {"parts", parts}};
}

}  // namespace cm
