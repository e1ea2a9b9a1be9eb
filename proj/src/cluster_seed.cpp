#include "cm/cluster_seed.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

#include "cm/minors.hpp"

namespace cm {

namespace {

int letter(const Word &w, int k) { return k < 0 ? -k : w[k - 1]; }

void check_label(const Word &w, int k, int rank) {
  if (k == 0 || k < -rank || k > static_cast<int>(w.size())) throw std::invalid_argument("index out of range");
}

}  // namespace

std::optional<int> k_plus(const Word &w, int k, int rank) {
  check_label(w, k, rank);
  int a = letter(w, k);
  for (int l = std::max(k + 1, 1); l <= static_cast<int>(w.size()); ++l)
    if (w[l - 1] == a) return l;
  return std::nullopt;
}

std::vector<int> e_set(const Word &w, int rank) {
  std::vector<int> e;
  for (int k = 1; k <= static_cast<int>(w.size()); ++k)
    if (k_plus(w, k, rank)) e.push_back(k);
  return e;
}

std::vector<int> row_labels(const Word &w, int rank) {
  std::vector<int> rows;
  for (int k = -1; k >= -rank; --k) rows.push_back(k);
  for (int k = 1; k <= static_cast<int>(w.size()); ++k) rows.push_back(k);
  return rows;
}

std::vector<Arrow> quiver(const GroupType &g, const Word &w) {
  int r = g.rank, n = static_cast<int>(w.size());
  // an undefined successor sits after n
  auto plus = [&](int k) { return k_plus(w, k, r).value_or(n + 1); };
  auto a = [&](int p, int q) { return cartan(g, letter(w, p), letter(w, q)); };
  std::vector<Arrow> out;
  auto rows = row_labels(w, r);
  for (int p : rows)
    for (int q : rows) {
      if (q > 0 && p < q) {
        if (k_plus(w, p, r) == q) out.push_back({p, q});
        if (q < plus(p) && plus(p) < plus(q) && a(p, q) < 0) out.push_back({q, p});
      } else if (p < 0 && q < 0 && p != q) {
        if (plus(q) < plus(p) && a(p, q) < 0) out.push_back({p, q});
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

int ExchangeMatrix::row_index(int label) const {
  auto it = std::find(rows.begin(), rows.end(), label);
  if (it == rows.end()) throw std::invalid_argument("unknown row label");
  return static_cast<int>(it - rows.begin());
}

int ExchangeMatrix::col_index(int label) const {
  auto it = std::find(cols.begin(), cols.end(), label);
  if (it == cols.end()) throw std::invalid_argument("column " + std::to_string(label) + " is not mutable");
  return static_cast<int>(it - cols.begin());
}

int ExchangeMatrix::at(int row_label, int col_label) const { return b[row_index(row_label)][col_index(col_label)]; }

ExchangeMatrix b_tilde(const GroupType &g, const Word &w) {
  int r = g.rank;
  ExchangeMatrix B;
  B.rows = row_labels(w, r);
  B.cols = e_set(w, r);
  B.b.assign(B.rows.size(), std::vector<int>(B.cols.size(), 0));
  auto arrows = quiver(g, w);
  std::set<Arrow> aset(arrows.begin(), arrows.end());
  for (size_t ri = 0; ri < B.rows.size(); ++ri)
    for (size_t ci = 0; ci < B.cols.size(); ++ci) {
      int k = B.rows[ri], l = B.cols[ci];
      int ik = letter(w, k), il = letter(w, l);
      if (aset.count({k, l}))
        B.b[ri][ci] = ik == il ? 1 : -cartan(g, ik, il);
      else if (aset.count({l, k}))
        B.b[ri][ci] = ik == il ? -1 : cartan(g, ik, il);
    }
  return B;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix &B, int k) {
  int c = B.col_index(k);
  int rk = B.row_index(k);
  ExchangeMatrix out = B;
  for (size_t i = 0; i < B.rows.size(); ++i)
    for (size_t j = 0; j < B.cols.size(); ++j) {
      if (static_cast<int>(i) == rk || static_cast<int>(j) == c) {
        out.b[i][j] = -B.b[i][j];
        continue;
      }
      int bik = B.b[i][c], bkj = B.b[rk][j];
      int num = std::abs(bik) * bkj + bik * std::abs(bkj);
      if (num % 2 != 0) throw std::logic_error("mutation is not integral");
      out.b[i][j] = B.b[i][j] + num / 2;
    }
  return out;
}

bool is_skew_symmetrizable(const ExchangeMatrix &B, const std::vector<int> &d) {
  if (d.size() != B.cols.size()) return false;
  for (size_t i = 0; i < B.cols.size(); ++i) {
    int ri = B.row_index(B.cols[i]);
    for (size_t j = 0; j < B.cols.size(); ++j) {
      int rj = B.row_index(B.cols[j]);
      if (d[i] * B.b[ri][j] != -d[j] * B.b[rj][i]) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> find_skew_symmetrizer(const GroupType &g, const Word &w, const ExchangeMatrix &B) {
  auto sym = symmetrizer(g);
  std::vector<int> d;
  for (int c : B.cols) d.push_back(sym[letter(w, c) - 1]);
  if (is_skew_symmetrizable(B, d)) return d;
  // fallback: one value per letter, searched up to 6
  int r = g.rank;
  std::vector<int> per(r, 1);
  std::function<std::optional<std::vector<int>>(int)> rec = [&](int i) -> std::optional<std::vector<int>> {
    if (i == r) {
      std::vector<int> dd;
      for (int c : B.cols) dd.push_back(per[letter(w, c) - 1]);
      if (is_skew_symmetrizable(B, dd)) return dd;
      return std::nullopt;
    }
    for (int v = 1; v <= 6; ++v) {
      per[i] = v;
      if (auto x = rec(i + 1)) return x;
    }
    return std::nullopt;
  };
  return rec(0);
}

nlohmann::json to_json(const ExchangeMatrix &B) {
  return {{"rows", B.rows}, {"cols", B.cols}, {"entries", B.b}};
}

Seed initial_seed(const GroupType &g, const Word &w) {
  Seed s;
  s.matrix = b_tilde(g, w);
  for (int k : s.matrix.rows) s.symbols.push_back("x[" + std::to_string(k) + "]");
  s.values.assign(s.symbols.size(), std::nullopt);
  return s;
}

Seed bound_seed(const GroupType &g, const Word &w) {
  Seed s = initial_seed(g, w);
  for (size_t i = 0; i < s.matrix.rows.size(); ++i) s.values[i] = delta_L({g, w, s.matrix.rows[i]});
  return s;
}

Seed mutate_seed(const Seed &s, int k) {
  int c = s.matrix.col_index(k);
  int rk = s.matrix.row_index(k);
  Seed out = s;
  out.matrix = mutate_matrix(s.matrix, k);
  std::string pos, neg;
  bool bound = std::all_of(s.values.begin(), s.values.end(), [](auto &v) { return v.has_value(); });
  Poly ppos(1), pneg(1);
  for (size_t i = 0; i < s.matrix.rows.size(); ++i) {
    int b = s.matrix.b[i][c];
    if (b == 0) continue;
    std::string f = s.symbols[i] + (std::abs(b) == 1 ? "" : "^" + std::to_string(std::abs(b)));
    std::string &acc = b > 0 ? pos : neg;
    acc += (acc.empty() ? "" : "*") + f;
    if (bound) (b > 0 ? ppos : pneg) = (b > 0 ? ppos : pneg) * s.values[i]->pow(std::abs(b));
  }
  out.symbols[rk] = "(" + (pos.empty() ? "1" : pos) + " + " + (neg.empty() ? "1" : neg) + ")/" + s.symbols[rk];
  if (bound) {
    auto q = (ppos + pneg).divide_exact(*s.values[rk]);
    if (!q) throw std::domain_error("exchange relation does not divide exactly");
    out.values[rk] = *q;
  } else {
    out.values[rk] = std::nullopt;
  }
  return out;
}

nlohmann::json to_json(const Seed &s) {
  nlohmann::json cl = nlohmann::json::array();
  for (size_t i = 0; i < s.symbols.size(); ++i) {
    nlohmann::json e = {{"label", s.matrix.rows[i]}, {"symbol", s.symbols[i]}};
    if (s.values[i]) e["value"] = s.values[i]->str();
    cl.push_back(e);
  }
  return {{"cluster", cl}, {"matrix", to_json(s.matrix)}};
}

}  // namespace cm
