#pragma once

#include <stdexcept>
#include <vector>

#include "cm/fund_rep.hpp"
#include "cm/root_data.hpp"

namespace oracle {

using namespace cm;
using Mat = std::vector<std::vector<Poly>>;

inline Mat identity(size_t n) {
  Mat m(n, std::vector<Poly>(n));
  for (size_t k = 0; k < n; ++k) m[k][k] = Poly(1);
  return m;
}

inline Mat matmul(const Mat &a, const Mat &b) {
  size_t n = a.size();
  Mat c(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline bool is_zero(const Mat &m) {
  for (auto &row : m)
    for (auto &x : row)
      if (!x.is_zero()) return false;
  return true;
}

// dense exp(t F_i) by the power series, dividing by k! exactly
inline Mat exp_f(const Module &mod, int i, const Monomial &t) {
  size_t n = mod.dim();
  Mat f(n, std::vector<Poly>(n));
  for (auto &e : mod.f_entries(i)) f[e.dst][e.src] += Poly(e.coeff);
  Mat out = identity(n), power = identity(n);
  Integer fact = 1;
  for (int k = 1; k <= static_cast<int>(n); ++k) {
    power = matmul(power, f);
    if (is_zero(power)) break;
    fact *= k;
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        for (auto &[m, c] : power[a][b].terms()) {
          if (c % fact != 0) throw std::logic_error("inexact exponential");
          out[a][b].add_term(m * t.pow(k), c / fact);
        }
  }
  return out;
}

inline Mat torus_inv(const Module &mod, int i, const Monomial &t) {
  Mat m(mod.dim(), std::vector<Poly>(mod.dim()));
  for (size_t b = 0; b < mod.dim(); ++b) m[b][b] = Poly(t.pow(-mod.pairing(b, i)));
  return m;
}

// x^L(Y) as a dense matrix in the given module
inline Mat xL_dense(const Module &mod, const Word &w) {
  Mat m = identity(mod.dim());
  auto vars = word_variables(w);
  for (size_t k = 0; k < w.size(); ++k) {
    Monomial t = Monomial::var(vars[k].first, vars[k].second, mod.group().rank);
    m = matmul(m, matmul(exp_f(mod, w[k], t), torus_inv(mod, w[k], t)));
  }
  return m;
}

inline Poly det(const Mat &m) {
  size_t n = m.size();
  if (n == 0) return Poly(1);
  if (n == 1) return m[0][0];
  Poly out;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    Mat minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Poly term = m[0][c] * det(minor);
    if (c % 2) out -= term;
    else out += term;
  }
  return out;
}

}  // namespace oracle
