#include "cm/path_model.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cm/closed_forms.hpp"
#include "cm/fund_rep.hpp"

namespace cm {

namespace {

void check_range(int m, int r) {
  if (r < 3) throw std::invalid_argument("rank too small");
  if (m < 2 || m > r - 1) throw std::invalid_argument("m out of range");
}

std::vector<int> jd(int r) {
  std::vector<int> J;
  for (int j = 1; j <= r; ++j) J.push_back(j);
  for (int j = r; j >= 1; --j) J.push_back(-j);
  return J;
}

bool step_ok(const std::vector<int> &a, const std::vector<int> &b, int r) {
  size_t d = a.size();
  for (size_t z = 0; z < d; ++z) {
    int x = a[z], y = b[z];
    if (x > 0 && x <= r - 2) {
      if (y != x && y != x + 1) return false;
    } else if (!d_leq(x, y, r)) {
      return false;
    }
    if ((y == r || y < 0) && z + 1 < d && d_leq(a[z + 1], y, r)) return false;
  }
  return true;
}

}  // namespace

std::vector<DPath> enumerate_paths(int m, int d, int r) {
  check_range(m, r);
  if (d < 1 || d >= r - 1) throw std::invalid_argument("d out of range");
  std::vector<int> start, end;
  for (int i = 1; i <= d; ++i) start.push_back(i);
  if (m + d > r) {
    for (int i = m; i <= r - 1; ++i) end.push_back(i);
    for (int i = d - r + m; i >= 1; --i) end.push_back(-i);
  } else {
    for (int i = m; i <= m + d - 1; ++i) end.push_back(i);
  }
  std::vector<std::vector<int>> verts;
  auto J = jd(r);
  std::vector<int> cur;
  std::function<void()> build = [&] {
    if (static_cast<int>(cur.size()) == d) {
      verts.push_back(cur);
      return;
    }
    for (int k : J) {
      if (!cur.empty() && !d_less(cur.back(), k, r)) continue;
      cur.push_back(k);
      build();
      cur.pop_back();
    }
  };
  build();
  std::vector<DPath> out;
  DPath p{m, {start}};
  std::function<void(int)> rec = [&](int level) {
    if (level == 0) {
      if (p.vertices.back() == end) out.push_back(p);
      return;
    }
    for (auto &w : verts) {
      if (!step_ok(p.vertices.back(), w, r)) continue;
      p.vertices.push_back(w);
      rec(level - 1);
      p.vertices.pop_back();
    }
  };
  rec(m);
  return out;
}

Monomial edge_label(int i, int j, int s, int r) {
  auto Y = [&](int k, int e = 1) { return Monomial::var(s, k, r, e); };
  int b = std::abs(j);
  if (i > 0 && i <= r - 2) return j == i ? Y(i - 1) * Y(i, -1) : Monomial();
  if (i == r - 1) {
    if (j == i) return Y(r - 2) * Y(r - 1, -1) * Y(r, -1);
    if (j == r) return Y(r, -1);
    return Y(b - 1, -1);
  }
  if (i == r) return j == i ? Y(r - 1) * Y(r, -1) : Y(r - 1) * Y(b - 1, -1);
  if (i == -r) return Y(r) * Y(b - 1, -1);
  if (i == -(r - 1)) return Y(r) * Y(r - 1) * Y(b - 1, -1);
  return Y(-i) * Y(b - 1, -1);
}

Monomial label(const DPath &p, int r) {
  Monomial q;
  for (int s = p.m; s >= 1; --s) {
    auto &a = p.vertices[p.m - s], &b = p.vertices[p.m - s + 1];
    for (size_t z = 0; z < a.size(); ++z) q = q * edge_label(a[z], b[z], s, r);
  }
  return q;
}

PathIndices path_indices(const DPath &p, int r) {
  PathIndices out;
  size_t d = p.vertices[0].size();
  for (size_t z = 0; z < d; ++z) {
    bool found = false;
    for (int s = 0; s < p.m && !found; ++s) {
      int a = p.vertices[s][z], next = p.vertices[s + 1][z];
      if (a == r || a < 0 || (a <= r - 1 && a == next)) {
        out.K.push_back(a);
        out.L.push_back(s);
        found = true;
      }
    }
    if (!found) throw std::logic_error("path coordinate never settles");
  }
  return out;
}

std::vector<DPath> enumerate_spin_paths(int m, int r, int which) {
  check_range(m, r);
  if (which != r && which != r - 1) throw std::invalid_argument("spin column must be r or r-1");
  std::vector<int> start, end;
  if (which == r - 1) start.push_back(r);
  for (int i = 1; i <= m - 1; ++i) end.push_back(i);
  if ((m % 2 == 1) != (which == r)) end.push_back(r);
  auto successors = [&](const std::vector<int> &K) {
    std::vector<std::vector<int>> out;
    size_t t = K.size();
    for (size_t tp : {t, t + 2}) {
      if (static_cast<int>(tp) > r) continue;
      std::vector<int> J;
      std::function<void(int)> rec = [&](int from) {
        if (J.size() == tp) {
          if (tp == t + 2 && J.back() != r) return;
          for (size_t i = 0; i < t; ++i)
            if (J[i] > K[i] || (i + 1 < tp && K[i] >= J[i + 1])) return;
          out.push_back(J);
          return;
        }
        for (int k = from; k <= r; ++k) {
          J.push_back(k);
          rec(k + 1);
          J.pop_back();
        }
      };
      rec(1);
    }
    return out;
  };
  std::vector<DPath> out;
  DPath p{m, {start}};
  std::function<void(int)> rec = [&](int level) {
    if (level == 0) {
      if (p.vertices.back() == end) out.push_back(p);
      return;
    }
    for (auto &J : successors(p.vertices.back())) {
      p.vertices.push_back(J);
      rec(level - 1);
      p.vertices.pop_back();
    }
  };
  rec(m);
  return out;
}

Monomial spin_edge_label(const std::vector<int> &K, const std::vector<int> &J, int s, int r) {
  auto Y = [&](int k, int e = 1) { return Monomial::var(s, k, r, e); };
  Monomial q;
  size_t t = K.size();
  for (size_t i = 0; i < t; ++i) {
    int a = K[i], b = J[i];
    if (a <= r - 2)
      q = q * Y(a);
    else if (a == r - 1)
      q = q * Y(r - 1) * Y(r);
    else
      q = q * Y(r);
    q = q * Y(b - 1, -1);
  }
  return J.size() == t ? q * Y(r, -1) : q * Y(J[t] - 1, -1);
}

Monomial spin_label(const DPath &p, int r) {
  Monomial q;
  for (int s = p.m; s >= 1; --s) q = q * spin_edge_label(p.vertices[p.m - s], p.vertices[p.m - s + 1], s, r);
  return q;
}

Poly path_sum(int m, int d, int r) {
  Poly p;
  if (d >= r - 1) {
    for (auto &path : enumerate_spin_paths(m, r, d)) p.add_term(spin_label(path, r), 1);
  } else {
    for (auto &path : enumerate_paths(m, d, r)) p.add_term(label(path, r), 1);
  }
  return p;
}

std::string to_dot(const std::vector<DPath> &paths, int, bool spin) {
  auto name = [&](int level, const std::vector<int> &v) {
    std::string s = std::to_string(level) + ":(";
    for (size_t k = 0; k < v.size(); ++k)
      s += (k ? "," : "") + (spin ? std::to_string(v[k]) : (v[k] < 0 ? "bar" + std::to_string(-v[k]) : std::to_string(v[k])));
    return s + ")";
  };
  std::map<std::string, int> ids;
  std::set<std::pair<int, int>> edges;
  auto id = [&](const std::string &n) { return ids.emplace(n, static_cast<int>(ids.size())).first->second; };
  for (auto &p : paths)
    for (int s = 0; s < p.m; ++s)
      edges.insert({id(name(p.m - s, p.vertices[s])), id(name(p.m - s - 1, p.vertices[s + 1]))});
  std::ostringstream os;
  os << "digraph paths {\n";
  for (auto &[n, i] : ids) os << "  n" << i << " [label=\"" << n << "\"];\n";
  for (auto &[a, b] : edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cm
