#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cm/closed_forms.hpp"
#include "cm/cluster_seed.hpp"
#include "cm/minors.hpp"
#include "cm/monomial_crystal.hpp"
#include "cm/path_model.hpp"

using namespace cm;

namespace {

Monomial Y(int s, int i, int r, int e = 1) { return Monomial::var(s, i, r, e); }

std::vector<GroupType> groups(int a_max, int d_min, int d_max) {
  std::vector<GroupType> gs;
  for (char f : {'A', 'B', 'C'})
    for (int r = 2; r <= a_max; ++r) gs.push_back(make_group(f, r));
  for (int r = d_min; r <= d_max; ++r) gs.push_back(make_group('D', r));
  return gs;
}

struct Check {
  bool ok = true;
  std::string why;
  void require(bool c, const std::string &what) {
    if (!c && ok) {
      ok = false;
      why = what;
    }
  }
};

bool run(int id, const char *name, double limit, const std::function<void(Check &)> &body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception &e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0) c.require(sec < limit, "runtime limit exceeded");
  std::printf("%s criterion %d: %s (%.3fs)%s%s\n", c.ok ? "PASS" : "FAIL", id, name, sec, c.ok ? "" : " - ",
              c.why.c_str());
  std::fflush(stdout);
  return c.ok;
}

bool has_edge(const CrystalGraph &g, const Monomial &a, int col, const Monomial &b) {
  auto s = g.index_of(a), d = g.index_of(b);
  if (!s || !d) return false;
  for (auto &e : g.edges)
    if (e.src == *s && e.color == col && e.dst == *d) return true;
  return false;
}

void c1(Check &c) {
  int r = 2;
  Poly p = delta_L({make_group('C', r), {1, 2, 1, 2}, 2});
  Poly expect = Poly(Y(1, 1, r, 2) * Y(1, 2, r, -1)) + Poly(Y(1, 1, r) * Y(2, 1, r, -1), 2) +
                Poly(Y(1, 2, r) * Y(2, 1, r, -2)) + Poly(Y(2, 2, r, -1));
  c.require(p == expect, "C2 minor differs: " + p.str());
}

void c2(Check &c) {
  int r = 3;
  auto b3 = make_group('B', r);
  Poly p = delta_L({b3, {1, 2, 3, 1, 2, 3, 1, 2, 3}, 6});
  Poly expect = Poly(Y(1, 2, r) * Y(1, 3, r, -1)) + Poly(Y(1, 3, r) * Y(2, 1, r) * Y(2, 2, r, -1)) +
                Poly(Y(1, 3, r) * Y(3, 1, r, -1)) + Poly(Y(2, 1, r) * Y(2, 3, r, -1)) +
                Poly(Y(2, 2, r) * Y(2, 3, r, -1) * Y(3, 1, r, -1)) + Poly(Y(2, 3, r) * Y(3, 2, r, -1)) +
                Poly(Y(3, 3, r, -1));
  c.require(p == expect, "B3 minor differs: " + p.str());
}

void c3(Check &c) {
  {
    int r = 2;
    MonomialCrystal mc(make_group('C', r));
    auto g = component(mc, Y(0, 2, r));
    c.require(g.vertices.size() == 5 && g.edges.size() == 4, "C2 component size");
    std::vector<Monomial> chain{Y(0, 2, r), Y(1, 1, r, 2) * Y(1, 2, r, -1), Y(1, 1, r) * Y(2, 1, r, -1),
                                Y(1, 2, r) * Y(2, 1, r, -2), Y(2, 2, r, -1)};
    std::vector<int> colors{2, 1, 1, 2};
    for (size_t k = 0; k < 4; ++k) c.require(has_edge(g, chain[k], colors[k], chain[k + 1]), "C2 chain edge");
  }
  int r = 3;
  MonomialCrystal mc(make_group('B', r));
  auto g = component(mc, Y(0, 3, r));
  c.require(g.vertices.size() == 8 && g.edges.size() == 8, "B3 component size");
  Monomial v1 = Y(0, 3, r), v2 = Y(1, 2, r) * Y(1, 3, r, -1), v3 = Y(1, 3, r) * Y(2, 1, r) * Y(2, 2, r, -1),
           v4 = Y(1, 3, r) * Y(3, 1, r, -1), v5 = Y(2, 1, r) * Y(2, 3, r, -1),
           v6 = Y(2, 2, r) * Y(2, 3, r, -1) * Y(3, 1, r, -1), v7 = Y(2, 3, r) * Y(3, 2, r, -1), v8 = Y(3, 3, r, -1);
  std::vector<std::tuple<Monomial, int, Monomial>> edges{{v1, 3, v2}, {v2, 2, v3}, {v3, 1, v4}, {v3, 3, v5},
                                                         {v4, 3, v6}, {v5, 1, v6}, {v6, 2, v7}, {v7, 3, v8}};
  for (auto &[a, col, b] : edges) c.require(has_edge(g, a, col, b), "B3 graph edge");
}

void c4(Check &c) {
  for (auto &g : groups(4, 3, 4))
    for (auto &pt : thm1_grid(g)) {
      auto rep = verify_thm1(pt.req, false, Exec::Parallel);
      std::string at = group_name(g) + " m=" + std::to_string(pt.m) + " d=" + std::to_string(pt.d);
      c.require(rep.in_scope && rep.match, "no match at " + at);
      c.require(!rep.multiplicities.empty(), "empty minor at " + at);
      for (auto &[m, k] : rep.multiplicities) c.require(k > 0, "non-positive multiplicity at " + at);
    }
}

void c5(Check &c) {
  bool spin_b = false, spin_d = false;
  for (auto &g : groups(4, 3, 4))
    for (auto &pt : thm1_grid(g)) {
      std::string at = group_name(g) + " m=" + std::to_string(pt.m) + " d=" + std::to_string(pt.d);
      Poly minor = delta_L(pt.req, Exec::Parallel);
      c.require(closed_form(g, pt.m, pt.d) == minor, "closed form differs at " + at);
      if (g.family == Family::B && pt.d == g.rank) spin_b = true;
      if (g.family == Family::D) {
        if (pt.d >= g.rank - 1) spin_d = true;
        c.require(path_sum(pt.m, pt.d, g.rank) == minor, "path sum differs at " + at);
      }
    }
  c.require(spin_b && spin_d, "spin cases missing from the grid");
}

void c6(Check &c) {
  int r = 3;
  auto c3g = make_group('C', r);
  Poly p = delta_L({c3g, {1, 2, 3, 1, 2, 3, 1, 2, 3}, 3});
  c.require(p.size() == 27, "C3 minor term count");
  std::vector<Monomial> second{Y(1, 2, r) * Y(2, 1, r, -1) * Y(3, 1, r, -1) * Y(3, 2, r, -1),
                               Y(1, 1, r) * Y(3, 1, r, -1) * Y(3, 2, r, -1),
                               Y(1, 1, r) * Y(2, 1, r) * Y(2, 2, r, -1) * Y(3, 2, r, -1),
                               Y(1, 1, r) * Y(1, 2, r) * Y(1, 3, r, -1) * Y(3, 2, r, -1),
                               Y(1, 1, r) * Y(1, 2, r) * Y(2, 2, r) * Y(1, 3, r, -1) * Y(2, 3, r, -1) * Y(3, 1, r, -1)};
  std::vector<std::pair<Monomial, int>> first_shown{
      {Y(2, 3, r, -1) * Y(3, 3, r, -1), 1},
      {Y(1, 3, r) * Y(2, 2, r, -2) * Y(3, 3, r, -1), 1},
      {Y(1, 3, r) * Y(2, 3, r) * Y(2, 2, r, -2) * Y(3, 2, r, -2), 1},
      {Y(1, 2, r) * Y(2, 1, r, -1) * Y(2, 2, r, -1) * Y(3, 3, r, -1), 2},
      {Y(1, 2, r, 2) * Y(1, 3, r, -1) * Y(2, 1, r, -2) * Y(3, 3, r, -1), 1},
      {Y(1, 1, r, 2) * Y(1, 3, r, -1) * Y(2, 1, r, 2) * Y(2, 3, r, -1), 1}};
  for (auto &[m, k] : first_shown) c.require(p.coeff(m) == k, "displayed first-group term " + m.str());
  for (auto &m : second) c.require(p.coeff(m) == 2, "second-group term " + m.str());

  auto diag = demazure_diagnostic(c3g, p);
  c.require(diag.parts.size() == 2, "expected two groups");
  if (diag.parts.size() != 2) return;
  const DemazurePart *first = nullptr, *other = nullptr;
  for (auto &part : diag.parts) (part.terms.size() == 5 ? other : first) = &part;
  c.require(first && other, "group sizes");
  if (!first || !other) return;
  c.require(first->terms.size() == 22, "first group size");
  c.require(first->highest_weight == Weight{0, 0, 2}, "first group highest weight 2 Lambda_3");
  c.require(first->demazure_word && *first->demazure_word == Word{1, 2, 3}, "first group is B(2 Lambda_3)_{s1 s2 s3}");
  std::vector<Monomial> got;
  for (auto &[m, k] : other->terms) {
    c.require(k == 2, "second group coefficient");
    got.push_back(m);
  }
  std::sort(got.begin(), got.end());
  std::sort(second.begin(), second.end());
  c.require(got == second, "second group monomials");
  c.require(other->highest_weight == Weight{0, 2, 0}, "second group highest weight 2 Lambda_2");
  c.require(!other->demazure_word.has_value(), "second group matched a Demazure crystal");
  c.require(other->weyl_elements_checked == 48 && weyl_elements(c3g).size() == 48, "48 Weyl elements not enumerated");
}

void c7(Check &c) {
  auto small = groups(4, 3, 4);
  for (auto &grp : small) {
    MonomialCrystal mc(grp);
    for (int d = 1; d <= grp.rank; ++d) {
      auto g = component(mc, Y(0, d, grp.rank));
      for (auto &y : g.vertices)
        for (int i = 1; i <= grp.rank; ++i) {
          c.require(mc.phi(i, y) - mc.eps(i, y) == pairing(mc.wt(y), i), "phi - eps != <h_i, wt>");
          auto al = simple_root(grp, i);
          if (auto z = mc.f(i, y)) {
            c.require(mc.e(i, *z) == y, "e f != id");
            Weight w = mc.wt(y);
            for (int j = 0; j < grp.rank; ++j) w[j] -= al[j];
            c.require(mc.wt(*z) == w, "wt(f y) != wt(y) - alpha_i");
          }
          if (auto z = mc.e(i, y)) c.require(mc.f(i, *z) == y, "f e != id");
        }
    }
  }

  for (char f : {'A', 'B', 'C', 'D'})
    for (int r = f == 'D' ? 3 : 2; r <= 4; ++r) {
      auto g = make_group(f, r);
      std::vector<ModuleSpec> specs{{g, 1, Realization::Vector}};
      for (int d = 1; d <= r; ++d) specs.push_back(module_for(g, d));
      Scalar t = Scalar::of(Y(1, 1, r) * Y(2, r, r, -1));
      for (auto &s : specs) {
        const Module &m = module_cached(s);
        for (int i = 1; i <= r; ++i)
          for (size_t u = 0; u < m.dim(); ++u) {
            RepVector yu = m.y_op(i, t, m.basis(u));
            for (size_t v = 0; v < m.dim(); ++v)
              c.require(m.gram(yu, m.basis(v)) == m.gram(m.basis(u), m.x_op(i, t, m.basis(v))),
                        "invariance fails in " + group_name(g));
          }
      }
    }

  std::mt19937 rng(715);
  for (char f : {'A', 'B', 'C', 'D'}) {
    int done = 0;
    while (done < 50) {
      int r = std::uniform_int_distribution<int>(f == 'D' ? 3 : 2, 4)(rng);
      auto g = make_group(f, r);
      Word full = i0(g);
      int n = std::uniform_int_distribution<int>(1, static_cast<int>(full.size()) - 1)(rng);
      Word w(full.begin(), full.begin() + n);
      int k = std::uniform_int_distribution<int>(1, n)(rng);
      int extra = std::uniform_int_distribution<int>(1, r)(rng);
      Word longer = w;
      longer.push_back(extra);
      if (extra == w[k - 1] || !is_reduced(g, longer)) continue;
      c.require(check_gmlem({g, w, k}, extra).ok(), "appended-letter independence fails in " + group_name(g));
      ++done;
    }
  }

  for (auto &g : small) {
    Word full = i0(g);
    auto sym = symmetrizer(g);
    for (size_t n = 1; n <= full.size(); ++n) {
      Word w(full.begin(), full.begin() + n);
      auto B = b_tilde(g, w);
      std::vector<int> dvec;
      for (int col : B.cols) dvec.push_back(sym[w[col - 1] - 1]);
      c.require(is_skew_symmetrizable(B, dvec), "not skew-symmetrizable: " + group_name(g) + " " + word_str(w));
      for (int k : B.cols) c.require(mutate_matrix(mutate_matrix(B, k), k) == B, "mu mu != id");
    }
  }
}

void c8(Check &c) {
  for (auto &g : groups(4, 3, 4))
    for (auto &pt : thm1_grid(g)) {
      auto x = delta_G(pt.req, Exec::Parallel);
      c.require(x.character == weyl_apply(g, u_leq(pt.req.word, pt.req.k, g.rank), fundamental(g, pt.d)),
                "character differs in " + group_name(g));
      c.require(x.poly == delta_L(pt.req), "delta_G polynomial differs from delta_L");
    }
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "C2 minor", 1.0, c1);
  ok &= run(2, "B3 spin minor", 1.0, c2);
  ok &= run(3, "crystal graphs", 0, c3);
  ok &= run(4, "theorem grid", 300.0, c4);
  ok &= run(5, "route equivalence", 0, c5);
  ok &= run(6, "C3 counterexample", 60.0, c6);
  ok &= run(7, "property suites", 120.0, c7);
  ok &= run(8, "torus characters", 0, c8);
  return ok ? 0 : 1;
}
