#include "cm/monomial_crystal.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>

namespace cm {

MonomialCrystal::MonomialCrystal(GroupType g) : g_(g), a_(cartan_matrix(g)) {}

Weight MonomialCrystal::wt(const Monomial &y) const {
  Weight w(g_.rank, 0);
  for (auto &[v, x] : y.exponents())
    if (v.i >= 1 && v.i <= g_.rank) w[v.i - 1] += x;
  return w;
}

MonomialCrystal::Scan MonomialCrystal::scan(int i, const Monomial &y) const {
  std::vector<std::pair<int, int>> items;
  for (auto &[v, x] : y.exponents())
    if (v.i == i) items.push_back({v.s, x});
  Scan sc;
  int sum = 0, last = -1;  // last item index where the partial sum equals phi
  for (size_t k = 0; k < items.size(); ++k) {
    sum += items[k].second;
    if (sum > sc.phi) {
      sc.phi = sum;
      sc.n_f = items[k].first;
    }
  }
  sc.total = sum;
  sum = 0;
  for (size_t k = 0; k < items.size(); ++k) {
    sum += items[k].second;
    if (sum == sc.phi) last = static_cast<int>(k);
  }
  if (last + 1 < static_cast<int>(items.size())) sc.n_e = items[last + 1].first - 1;
  return sc;
}

int MonomialCrystal::phi(int i, const Monomial &y) const { return scan(i, y).phi; }

int MonomialCrystal::eps(int i, const Monomial &y) const {
  auto sc = scan(i, y);
  return sc.phi - sc.total;
}

Monomial MonomialCrystal::a_var(int s, int i) const {
  int r = g_.rank;
  Monomial m = Monomial::var(s, i, r) * Monomial::var(s + 1, i, r);
  for (int j = 1; j <= r; ++j) {
    if (j == i || a_[j - 1][i - 1] == 0) continue;
    m = m * Monomial::var(s + (j < i ? 1 : 0), j, r, a_[j - 1][i - 1]);
  }
  return m;
}

std::optional<Monomial> MonomialCrystal::f(int i, const Monomial &y) const {
  auto sc = scan(i, y);
  if (sc.phi <= 0) return std::nullopt;
  return y * a_var(sc.n_f, i).inverse();
}

std::optional<Monomial> MonomialCrystal::e(int i, const Monomial &y) const {
  auto sc = scan(i, y);
  if (sc.phi - sc.total <= 0) return std::nullopt;
  return y * a_var(sc.n_e, i);
}

bool MonomialCrystal::is_lowest(const Monomial &y) const {
  for (int i = 1; i <= g_.rank; ++i)
    if (phi(i, y) != 0) return false;
  return true;
}

bool MonomialCrystal::is_highest(const Monomial &y) const {
  for (int i = 1; i <= g_.rank; ++i)
    if (eps(i, y) != 0) return false;
  return true;
}

Monomial MonomialCrystal::descend_to_lowest(Monomial y, size_t max_steps) const {
  for (size_t step = 0; step < max_steps; ++step) {
    bool moved = false;
    for (int i = 1; i <= g_.rank && !moved; ++i)
      if (auto n = f(i, y)) {
        y = *n;
        moved = true;
      }
    if (!moved) return y;
  }
  throw VertexCapExceeded("no lowest element within step limit");
}

Monomial MonomialCrystal::ascend_to_highest(Monomial y, size_t max_steps) const {
  for (size_t step = 0; step < max_steps; ++step) {
    bool moved = false;
    for (int i = 1; i <= g_.rank && !moved; ++i)
      if (auto n = e(i, y)) {
        y = *n;
        moved = true;
      }
    if (!moved) return y;
  }
  throw VertexCapExceeded("no highest element within step limit");
}

std::optional<size_t> CrystalGraph::index_of(const Monomial &y) const {
  auto it = std::find(vertices.begin(), vertices.end(), y);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<size_t>(it - vertices.begin());
}

size_t default_vertex_cap() {
  if (const char *s = std::getenv("CRYSTAL_MINORS_MAX_VERTICES")) {
    try {
      long long v = std::stoll(s);
      if (v > 0) return static_cast<size_t>(v);
    } catch (...) {
    }
  }
  return 1000000;
}

CrystalGraph component(const MonomialCrystal &c, const Monomial &seed, size_t cap) {
  CrystalGraph g;
  std::map<Monomial, size_t> index;
  std::vector<Weight> tracked;
  std::deque<size_t> todo;
  auto visit = [&](const Monomial &y, const Weight &w) {
    auto [it, fresh] = index.emplace(y, g.vertices.size());
    if (fresh) {
      if (g.vertices.size() >= cap) throw VertexCapExceeded("crystal closure exceeded vertex cap");
      g.vertices.push_back(y);
      tracked.push_back(w);
      todo.push_back(it->second);
    } else if (tracked[it->second] != w) {
      ++g.collisions;
    }
    return it->second;
  };
  visit(seed, c.wt(seed));
  std::set<CrystalEdge> edges;
  while (!todo.empty()) {
    size_t v = todo.front();
    todo.pop_front();
    Monomial y = g.vertices[v];
    Weight w = tracked[v];
    for (int i = 1; i <= c.rank(); ++i) {
      Weight a = simple_root(c.group(), i);
      if (auto n = c.f(i, y)) {
        Weight w2 = w;
        for (int j = 0; j < c.rank(); ++j) w2[j] -= a[j];
        edges.insert({v, i, visit(*n, w2)});
      }
      if (auto n = c.e(i, y)) {
        Weight w2 = w;
        for (int j = 0; j < c.rank(); ++j) w2[j] += a[j];
        edges.insert({visit(*n, w2), i, v});
      }
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

namespace {

template <class Step>
std::set<Monomial> demazure(const Word &w, const Monomial &seed, size_t cap, Step step) {
  std::set<Monomial> cur{seed};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    std::set<Monomial> next;
    for (auto &b : cur) {
      std::optional<Monomial> x = b;
      while (x) {
        if (!next.insert(*x).second) break;
        if (next.size() > cap) throw VertexCapExceeded("Demazure closure exceeded vertex cap");
        x = step(*it, *x);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

void check_word(const MonomialCrystal &c, const Word &w) {
  for (int a : w)
    if (a < 1 || a > c.rank()) throw PreconditionError("letter out of range");
  if (!is_reduced(c.group(), w)) throw PreconditionError("word is not reduced");
}

}  // namespace

std::set<Monomial> lower_demazure(const MonomialCrystal &c, const Monomial &seed, const Word &w, size_t cap) {
  if (!c.is_lowest(seed)) throw PreconditionError("seed is not a lowest weight monomial");
  check_word(c, w);
  return demazure(w, seed, cap, [&](int i, const Monomial &y) { return c.e(i, y); });
}

std::set<Monomial> upper_demazure(const MonomialCrystal &c, const Monomial &seed, const Word &w, size_t cap) {
  if (!c.is_highest(seed)) throw PreconditionError("seed is not a highest weight monomial");
  check_word(c, w);
  return demazure(w, seed, cap, [&](int i, const Monomial &y) { return c.f(i, y); });
}

std::string to_dot(const CrystalGraph &g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (size_t v = 0; v < g.vertices.size(); ++v)
    os << "  n" << v << " [label=\"" << g.vertices[v].str() << "\"];\n";
  for (auto &e : g.edges) os << "  n" << e.src << " -> n" << e.dst << " [label=\"i=" << e.color << "\"];\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const CrystalGraph &g) {
  nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array();
  for (auto &v : g.vertices) vs.push_back(v.str());
  for (auto &e : g.edges) es.push_back({{"src", e.src}, {"color", e.color}, {"dst", e.dst}});
  return {{"vertices", vs}, {"edges", es}, {"collisions", g.collisions}};
}

}  // namespace cm
