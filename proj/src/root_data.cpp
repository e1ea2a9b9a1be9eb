#include "cm/root_data.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cm {

GroupType make_group(char family, int rank) {
  GroupType g;
  switch (family) {
    case 'A': case 'a': g.family = Family::A; break;
    case 'B': case 'b': g.family = Family::B; break;
    case 'C': case 'c': g.family = Family::C; break;
    case 'D': case 'd': g.family = Family::D; break;
    default: throw std::invalid_argument(std::string("unknown family ") + family);
  }
  int lo = g.family == Family::D ? 3 : 2;
  if (rank < lo) throw std::invalid_argument("rank too small for family");
  g.rank = rank;
  return g;
}

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

std::string group_name(const GroupType &g) {
  return std::string(1, family_char(g.family)) + std::to_string(g.rank);
}

Matrix cartan_matrix(const GroupType &g) {
  int r = g.rank;
  Matrix a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < r; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  switch (g.family) {
    case Family::A: break;
    case Family::C: a[r - 2][r - 1] = -2; break;
    case Family::B: a[r - 1][r - 2] = -2; break;
    case Family::D:
      a[r - 2][r - 1] = a[r - 1][r - 2] = 0;
      a[r - 3][r - 1] = a[r - 1][r - 3] = -1;
      break;
  }
  return a;
}

int cartan(const GroupType &g, int i, int j) {
  return cartan_matrix(g)[i - 1][j - 1];
}

Weight fundamental(const GroupType &g, int i) {
  Weight w(g.rank, 0);
  w[i - 1] = 1;
  return w;
}

Weight simple_root(const GroupType &g, int i) {
  Matrix a = cartan_matrix(g);
  Weight w(g.rank);
  for (int j = 0; j < g.rank; ++j) w[j] = a[j][i - 1];
  return w;
}

int pairing(const Weight &lambda, int i) { return lambda[i - 1]; }

Weight weyl_apply(const GroupType &g, const Word &w, Weight lambda) {
  Matrix a = cartan_matrix(g);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int i = *it;
    if (i < 1 || i > g.rank) throw std::invalid_argument("letter out of range");
    int c = lambda[i - 1];
    for (int j = 0; j < g.rank; ++j) lambda[j] -= c * a[j][i - 1];
  }
  return lambda;
}

static std::vector<int> reflect_root(const Matrix &a, std::vector<int> beta, int i) {
  int c = 0;
  for (size_t j = 0; j < beta.size(); ++j) c += beta[j] * a[i - 1][j];
  beta[i - 1] -= c;
  return beta;
}

std::vector<std::vector<int>> positive_roots(const GroupType &g) {
  Matrix a = cartan_matrix(g);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> todo;
  for (int i = 1; i <= g.rank; ++i) {
    std::vector<int> e(g.rank, 0);
    e[i - 1] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    auto b = todo.back();
    todo.pop_back();
    for (int i = 1; i <= g.rank; ++i) {
      auto c = reflect_root(a, b, i);
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  std::vector<std::vector<int>> pos;
  for (auto &b : seen)
    if (std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; })) pos.push_back(b);
  return pos;
}

int length(const GroupType &g, const Word &w) {
  Matrix a = cartan_matrix(g);
  int n = 0;
  for (auto beta : positive_roots(g)) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) beta = reflect_root(a, beta, *it);
    if (std::any_of(beta.begin(), beta.end(), [](int x) { return x < 0; })) ++n;
  }
  return n;
}

bool is_reduced(const GroupType &g, const Word &w) {
  return length(g, w) == static_cast<int>(w.size());
}

Word i0(const GroupType &g) {
  int r = g.rank;
  Word w;
  if (g.family == Family::A) {
    for (int c = r; c >= 1; --c)
      for (int i = 1; i <= c; ++i) w.push_back(i);
    return w;
  }
  int cycles = g.family == Family::D ? r - 1 : r;
  for (int c = 0; c < cycles; ++c)
    for (int i = 1; i <= r; ++i) w.push_back(i);
  return w;
}

LeftFactor left_factor(const GroupType &g, int n) {
  Word full = i0(g);
  if (n < 1 || n > static_cast<int>(full.size()))
    throw std::out_of_range("left factor length out of range");
  LeftFactor lf;
  lf.word.assign(full.begin(), full.begin() + n);
  lf.m = cycle_count(lf.word);
  lf.last = lf.word.back();
  return lf;
}

Word u_leq(const Word &w, int k, int rank) {
  if (k >= 1 && k <= static_cast<int>(w.size())) return Word(w.begin(), w.begin() + k);
  if (k <= -1 && k >= -rank) return {};
  throw std::out_of_range("k out of range");
}

std::vector<std::pair<int, int>> word_variables(const Word &w) {
  std::vector<std::pair<int, int>> out;
  int s = 1, prev = 0;
  for (int a : w) {
    if (a <= prev) ++s;
    out.push_back({s, a});
    prev = a;
  }
  return out;
}

int cycle_count(const Word &w) {
  auto v = word_variables(w);
  return v.empty() ? 0 : v.back().first;
}

std::vector<int> symmetrizer(const GroupType &g) {
  int r = g.rank;
  std::vector<int> d(r, 1);
  if (g.family == Family::B)
    for (int i = 0; i + 1 < r; ++i) d[i] = 2;
  if (g.family == Family::C) d[r - 1] = 2;
  return d;
}

std::vector<Word> weyl_elements(const GroupType &g) {
  Weight rho(g.rank, 1);
  std::map<Weight, Word> seen;
  std::vector<Word> out, frontier{{}};
  seen[rho] = {};
  out.push_back({});
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (auto &w : frontier)
      for (int i = 1; i <= g.rank; ++i) {
        Word v = w;
        v.push_back(i);
        Weight x = weyl_apply(g, v, rho);
        if (seen.emplace(x, v).second) {
          next.push_back(v);
          out.push_back(v);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

Word parse_word(const std::string &s) {
  Word w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad letter '" + tok + "'");
    w.push_back(v);
  }
  return w;
}

std::string word_str(const Word &w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

}  // namespace cm
