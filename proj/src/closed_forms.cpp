#include "cm/closed_forms.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace cm {

int c_pos(int k, int r) { return k > 0 ? k : 2 * r + 1 + k; }

int b_pos(int k, int r) {
  if (k == 0) return r + 1;
  return k > 0 ? k : 2 * r + 2 + k;
}

int d_pos(int k, int r) {
  if (k > 0) return k;
  return -k == r ? r : 2 * r + k;
}

bool d_leq(int a, int b, int r) {
  if (a == b) return true;
  if ((a == r && b == -r) || (a == -r && b == r)) return false;
  return d_pos(a, r) < d_pos(b, r);
}

bool d_less(int a, int b, int r) { return a != b && d_leq(a, b, r); }

Monomial factor(const GroupType &g, int l, int k) {
  int r = g.rank;
  auto Y = [&](int s, int i, int e = 1) { return Monomial::var(s, i, r, e); };
  auto bad = [] { throw std::invalid_argument("illegal index for factor monomial"); };
  switch (g.family) {
    case Family::A:
      if (k < 1 || k > r + 1) bad();
      return Y(l, k - 1) * Y(l, k, -1);
    case Family::C:
      if (k == 0 || std::abs(k) > r) bad();
      if (k > 0) return Y(l, k - 1) * Y(l, k, -1);
      return Y(l, -k) * Y(l + 1, -k - 1, -1);
    case Family::B:
      if (k == r + 1) return Y(l, r, -1);
      if (k == 0) return Y(l, r) * Y(l + 1, r, -1);
      if (std::abs(k) > r) bad();
      if (k > 0 && k < r) return Y(l, k - 1) * Y(l, k, -1);
      if (k == r) return Y(l, r - 1) * Y(l, r, -2);
      if (k == -r) return Y(l, r, 2) * Y(l + 1, r - 1, -1);
      return Y(l, -k) * Y(l + 1, -k - 1, -1);
    case Family::D:
      if (k == r + 1) return Y(l, r, -1);
      if (k == 0 || std::abs(k) > r) bad();
      if (k > 0 && k <= r - 2) return Y(l, k - 1) * Y(l, k, -1);
      if (k == r - 1) return Y(l, r - 2) * Y(l, r - 1, -1) * Y(l, r, -1);
      if (k == r) return Y(l, r - 1) * Y(l + 1, r, -1);
      if (k == -(r - 1)) return Y(l, r) * Y(l, r - 1) * Y(l + 1, r - 2, -1);
      return Y(l, -k) * Y(l + 1, -k - 1, -1);
  }
  bad();
  return {};
}

namespace {

std::vector<int> j_list(Family f, int r) {
  std::vector<int> J;
  for (int j = 1; j <= r; ++j) J.push_back(j);
  if (f == Family::B) J.push_back(0);
  for (int j = r; j >= 1; --j) J.push_back(-j);
  return J;
}

// backtracking over J^d with a prefix predicate
void enumerate(const std::vector<int> &J, int d, const std::function<bool(const std::vector<int> &)> &ok,
               const std::function<void(const std::vector<int> &)> &emit) {
  std::vector<int> seq;
  std::function<void()> rec = [&] {
    if (static_cast<int>(seq.size()) == d) {
      emit(seq);
      return;
    }
    for (int k : J) {
      seq.push_back(k);
      if (ok(seq)) rec();
      seq.pop_back();
    }
  };
  rec();
}

ClosedTerm make_term(const GroupType &g, std::vector<int> seq, std::vector<int> ls, int coeff) {
  ClosedTerm t{std::move(seq), std::move(ls), coeff, Monomial()};
  for (size_t i = 0; i < t.seq.size(); ++i) t.mono = t.mono * factor(g, t.ls[i], t.seq[i]);
  return t;
}

void check_m(int m, int lo, int hi) {
  if (m < lo || m > hi) throw std::invalid_argument("m out of range");
}

std::vector<std::vector<int>> subsets(int r, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    for (int k = from; k <= r; ++k) {
      cur.push_back(k);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace

std::vector<ClosedTerm> closed_terms_A(int m, int d, int r) {
  check_m(m, 2, r);
  if (d < 1 || d > r - m + 1) throw std::invalid_argument("d out of range");
  GroupType g{Family::A, r};
  std::vector<ClosedTerm> out;
  std::vector<int> J;
  for (int k = 1; k <= m + d - 1; ++k) J.push_back(k);
  enumerate(
      J, d, [](const std::vector<int> &s) { return s.size() < 2 || s[s.size() - 2] < s.back(); },
      [&](const std::vector<int> &s) {
        std::vector<int> ls;
        for (int i = 1; i <= d; ++i) ls.push_back(m - s[i - 1] + i);
        out.push_back(make_term(g, s, ls, 1));
      });
  return out;
}

std::vector<ClosedTerm> closed_terms_C(int m, int d, int r) {
  check_m(m, 2, r);
  if (d < 1 || d > r) throw std::invalid_argument("d out of range");
  GroupType g{Family::C, r};
  std::vector<ClosedTerm> out;
  enumerate(
      j_list(Family::C, r), d,
      [&](const std::vector<int> &s) {
        int i = static_cast<int>(s.size()), p = c_pos(s.back(), r);
        if (i >= 2 && c_pos(s[i - 2], r) >= p) return false;
        if (i <= r - m + 1) return p <= m - 1 + i;
        return p <= c_pos(-(d - i + 1), r);
      },
      [&](const std::vector<int> &s) {
        std::vector<int> ls;
        for (int i = 1; i <= d; ++i) ls.push_back(s[i - 1] > 0 ? m - s[i - 1] + i : m - r - 1 + i);
        out.push_back(make_term(g, s, ls, 1));
      });
  return out;
}

std::vector<ClosedTerm> closed_terms_B(int m, int d, int r) {
  check_m(m, 2, r);
  if (d < 1 || d >= r) throw std::invalid_argument("d out of range");
  GroupType g{Family::B, r};
  std::vector<ClosedTerm> out;
  enumerate(
      j_list(Family::B, r), d,
      [&](const std::vector<int> &s) {
        int i = static_cast<int>(s.size()), k = s.back(), p = b_pos(k, r);
        if (i >= 2) {
          int q = b_pos(s[i - 2], r);
          if (q > p || (q == p && k != 0)) return false;
        }
        if (p < i) return false;
        if (i <= r - m + 1) return p <= m - 1 + i;
        return p <= b_pos(-(d - i + 1), r);
      },
      [&](const std::vector<int> &s) {
        std::vector<int> ls;
        int coeff = 1;
        for (int i = 1; i <= d; ++i) {
          ls.push_back(s[i - 1] > 0 ? m - s[i - 1] + i : m - r - 1 + i);
          if (s[i - 1] == 0) coeff = 2;
        }
        out.push_back(make_term(g, s, ls, coeff));
      });
  return out;
}

std::vector<ClosedTerm> closed_terms_B_spin(int m, int r) {
  check_m(m, 2, r);
  GroupType g{Family::B, r};
  std::vector<ClosedTerm> out;
  for (int s = 0; s <= m - 1; ++s)
    for (auto &ks : subsets(r, s)) {
      std::vector<int> seq, ls;
      for (int i = 1; i <= s; ++i) {
        seq.push_back(-ks[i - 1]);
        ls.push_back(m - i);
      }
      seq.push_back(r + 1);
      ls.push_back(m - s);
      out.push_back(make_term(g, seq, ls, 1));
    }
  return out;
}

std::vector<ClosedTerm> closed_terms_D(int m, int d, int r) {
  check_m(m, 2, r - 1);
  if (d < 1 || d >= r - 1) throw std::invalid_argument("d out of range");
  GroupType g{Family::D, r};
  std::vector<ClosedTerm> out;
  enumerate(
      j_list(Family::D, r), d,
      [&](const std::vector<int> &s) {
        int i = static_cast<int>(s.size()), k = s.back();
        if (i >= 2 && d_leq(k, s[i - 2], r)) return false;
        if (!d_leq(i, k, r)) return false;
        if (i <= r - m) return d_leq(k, m - 1 + i, r);
        return d_leq(k, -(d - i + 1), r);
      },
      [&](const std::vector<int> &s) {
        std::vector<int> ls;
        for (int i = 1; i <= d; ++i) ls.push_back(s[i - 1] > 0 && s[i - 1] <= r - 1 ? m - s[i - 1] + i : m - r + i);
        out.push_back(make_term(g, s, ls, 1));
      });
  return out;
}

namespace {

std::vector<ClosedTerm> d_spin(int m, int r, int which, bool literal) {
  check_m(m, 2, r - 1);
  if (which != r && which != r - 1) throw std::invalid_argument("spin column must be r or r-1");
  GroupType g{Family::D, r};
  std::vector<ClosedTerm> out;
  for (int s = 0; s <= m; ++s) {
    if ((s % 2 == 0) != (which == r)) continue;
    for (auto &ks : subsets(r, s)) {
      if (s == m && (literal || ks.back() != r)) continue;
      std::vector<int> seq, ls;
      for (int i = 1; i <= s; ++i) {
        seq.push_back(-ks[i - 1]);
        ls.push_back(m - i);
      }
      seq.push_back(r + 1);
      ls.push_back(m - s);
      out.push_back(make_term(g, seq, ls, 1));
    }
  }
  return out;
}

}  // namespace

std::vector<ClosedTerm> closed_terms_D_spin(int m, int r, int which) { return d_spin(m, r, which, false); }
std::vector<ClosedTerm> closed_terms_D_spin_literal(int m, int r, int which) { return d_spin(m, r, which, true); }

Poly sum_terms(const std::vector<ClosedTerm> &t) {
  Poly p;
  for (auto &x : t) p.add_term(x.mono, x.coeff);
  return p;
}

Poly closed_A(int m, int d, int r) { return sum_terms(closed_terms_A(m, d, r)); }
Poly closed_C(int m, int d, int r) { return sum_terms(closed_terms_C(m, d, r)); }
Poly closed_B(int m, int d, int r) { return sum_terms(closed_terms_B(m, d, r)); }
Poly closed_B_spin(int m, int r) { return sum_terms(closed_terms_B_spin(m, r)); }
Poly closed_D(int m, int d, int r) { return sum_terms(closed_terms_D(m, d, r)); }
Poly closed_D_spin(int m, int r, int which) { return sum_terms(closed_terms_D_spin(m, r, which)); }
Poly closed_D_spin_literal(int m, int r, int which) { return sum_terms(closed_terms_D_spin_literal(m, r, which)); }

std::vector<ClosedTerm> closed_form_terms(const GroupType &g, int m, int d) {
  int r = g.rank;
  switch (g.family) {
    case Family::A: return closed_terms_A(m, d, r);
    case Family::C: return closed_terms_C(m, d, r);
    case Family::B: return d < r ? closed_terms_B(m, d, r) : closed_terms_B_spin(m, r);
    case Family::D: return d < r - 1 ? closed_terms_D(m, d, r) : closed_terms_D_spin(m, r, d);
  }
  return {};
}

Poly closed_form(const GroupType &g, int m, int d) { return sum_terms(closed_form_terms(g, m, d)); }

}  // namespace cm
