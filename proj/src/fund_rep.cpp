#include "cm/fund_rep.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace cm {

namespace {

std::vector<int> vector_labels(const GroupType &g) {
  int r = g.rank;
  std::vector<int> b;
  if (g.family == Family::A) {
    for (int j = 1; j <= r + 1; ++j) b.push_back(j);
    return b;
  }
  for (int j = 1; j <= r; ++j) b.push_back(j);
  if (g.family == Family::B) b.push_back(0);
  for (int j = r; j >= 1; --j) b.push_back(-j);
  return b;
}

std::vector<std::pair<int, int>> vector_f(const GroupType &g, int i, int v) {
  int r = g.rank;
  std::vector<std::pair<int, int>> out;
  if (g.family == Family::A) {
    if (v == i) out.push_back({1, i + 1});
    return out;
  }
  if (i < r) {
    if (v == i) out.push_back({1, i + 1});
    if (v == -(i + 1)) out.push_back({1, -i});
    return out;
  }
  switch (g.family) {
    case Family::C:
      if (v == r) out.push_back({1, -r});
      break;
    case Family::B:
      if (v == r) out.push_back({1, 0});
      if (v == 0) out.push_back({2, -r});
      break;
    case Family::D:
      if (v == r) out.push_back({1, -(r - 1)});
      if (v == r - 1) out.push_back({1, -r});
      break;
    default: break;
  }
  return out;
}

std::vector<std::pair<int, int>> vector_e(const GroupType &g, int i, int v) {
  int r = g.rank;
  std::vector<std::pair<int, int>> out;
  if (g.family == Family::A) {
    if (v == i + 1) out.push_back({1, i});
    return out;
  }
  if (i < r) {
    if (v == i + 1) out.push_back({1, i});
    if (v == -i) out.push_back({1, -(i + 1)});
    return out;
  }
  switch (g.family) {
    case Family::C:
      if (v == -r) out.push_back({1, r});
      break;
    case Family::B:
      if (v == -r) out.push_back({1, 0});
      if (v == 0) out.push_back({2, r});
      break;
    case Family::D:
      if (v == -r) out.push_back({1, r - 1});
      if (v == -(r - 1)) out.push_back({1, r});
      break;
    default: break;
  }
  return out;
}

Weight vector_weight(const GroupType &g, int v) {
  int r = g.rank;
  Weight w(r, 0);
  auto add = [&](int j, int c) {
    if (j >= 1 && j <= r) w[j - 1] += c;
  };
  if (g.family == Family::A) {
    add(v, 1);
    add(v - 1, -1);
    return w;
  }
  if (v == 0) return w;
  int j = std::abs(v), s = v > 0 ? 1 : -1;
  if (g.family == Family::B && j == r) {
    add(r, 2 * s);
    add(r - 1, -s);
  } else if (g.family == Family::D && j == r - 1) {
    add(r, s);
    add(r - 1, s);
    add(r - 2, -s);
  } else {
    add(j, s);
    add(j - 1, -s);
  }
  return w;
}

int half(int x) {
  if (x % 2 != 0) throw std::logic_error("half-integral spin pairing");
  return x / 2;
}

// sign of the permutation sorting v, and v sorted
int sort_sign(std::vector<size_t> &v) {
  int sign = 1;
  for (size_t a = 0; a < v.size(); ++a)
    for (size_t b = a + 1; b < v.size(); ++b)
      if (v[a] > v[b]) sign = -sign;
  std::sort(v.begin(), v.end());
  return sign;
}

Integer int_pow(const Integer &c, int n) {
  if (n < 0) {
    if (c == 1) return 1;
    if (c == -1) return (-n) % 2 ? Integer(-1) : Integer(1);
    throw std::domain_error("non-invertible scalar raised to a negative power");
  }
  Integer r = 1;
  for (int k = 0; k < n; ++k) r *= c;
  return r;
}

}  // namespace

std::string vector_label_str(int j) {
  if (j < 0) return "vbar" + std::to_string(-j);
  return "v" + std::to_string(j);
}

void validate(const ModuleSpec &s) {
  int r = s.group.rank, d = s.d;
  auto fail = [&](const char *m) { throw std::invalid_argument(m); };
  switch (s.realization) {
    case Realization::Vector:
      if (d != 1) fail("vector module has highest weight Lambda_1");
      break;
    case Realization::Wedge: {
      int top = r;
      if (s.group.family == Family::B) top = r - 1;
      if (s.group.family == Family::D) top = r - 2;
      if (d < 1 || d > top) fail("wedge power not available for this family and d");
      break;
    }
    case Realization::SpinB:
      if (s.group.family != Family::B || d != r) fail("spin module of type B needs d = r");
      break;
    case Realization::SpinDPlus:
      if (s.group.family != Family::D || d != r) fail("spin+ module of type D needs d = r");
      break;
    case Realization::SpinDMinus:
      if (s.group.family != Family::D || d != r - 1) fail("spin- module of type D needs d = r-1");
      break;
  }
}

ModuleSpec module_for(const GroupType &g, int d) {
  int r = g.rank;
  if (d < 1 || d > r) throw std::invalid_argument("fundamental weight index out of range");
  ModuleSpec s{g, d, Realization::Wedge};
  if (g.family == Family::B && d == r) s.realization = Realization::SpinB;
  if (g.family == Family::D && d == r) s.realization = Realization::SpinDPlus;
  if (g.family == Family::D && d == r - 1) s.realization = Realization::SpinDMinus;
  validate(s);
  return s;
}

Module::Module(ModuleSpec spec) : spec_(spec) {
  validate(spec_);
  f_.assign(spec_.group.rank, {});
  e_.assign(spec_.group.rank, {});
  switch (spec_.realization) {
    case Realization::Vector: build_vector(); break;
    case Realization::Wedge:
      if (spec_.d == 1) {
        build_vector();
      } else {
        Module vec(ModuleSpec{spec_.group, 1, Realization::Wedge});
        build_wedge(vec);
      }
      break;
    default: build_spin(); break;
  }
  finish();
}

void Module::build_vector() {
  const GroupType &g = spec_.group;
  auto labs = vector_labels(g);
  std::map<int, size_t> idx;
  for (size_t k = 0; k < labs.size(); ++k) {
    idx[labs[k]] = k;
    labels_.push_back({labs[k]});
    weights_.push_back(vector_weight(g, labs[k]));
  }
  for (int i = 1; i <= g.rank; ++i)
    for (size_t k = 0; k < labs.size(); ++k) {
      for (auto [c, t] : vector_f(g, i, labs[k])) f_[i - 1].push_back({idx.at(t), k, c});
      for (auto [c, t] : vector_e(g, i, labs[k])) e_[i - 1].push_back({idx.at(t), k, c});
    }
  highest_ = 0;
  // invariance along single-term f-chains from the highest vector
  std::vector<std::optional<Rational>> gr(dim());
  gr[0] = Rational(1);
  std::deque<size_t> todo{0};
  while (!todo.empty()) {
    size_t b = todo.front();
    todo.pop_front();
    for (int i = 1; i <= g.rank; ++i)
      for (auto &fe : f_[i - 1]) {
        if (fe.src != b || gr[fe.dst]) continue;
        Integer back = 0;
        for (auto &ee : e_[i - 1])
          if (ee.src == fe.dst && ee.dst == b) back += ee.coeff;
        gr[fe.dst] = Rational(back) * *gr[b] / Rational(fe.coeff);
        todo.push_back(fe.dst);
      }
  }
  for (auto &x : gr) {
    if (!x || denominator(*x) != 1) throw std::logic_error("gram diagonal not integral");
    gram_.push_back(numerator(*x));
  }
}

void Module::build_wedge(const Module &vec) {
  int d = spec_.d;
  size_t n = vec.dim();
  std::vector<size_t> comb(d);
  for (int k = 0; k < d; ++k) comb[k] = k;
  std::map<std::vector<size_t>, size_t> idx;
  std::vector<std::vector<size_t>> tuples;
  while (true) {
    idx[comb] = tuples.size();
    tuples.push_back(comb);
    int k = d - 1;
    while (k >= 0 && comb[k] == n - d + k) --k;
    if (k < 0) break;
    ++comb[k];
    for (int j = k + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
  }
  Weight zero(spec_.group.rank, 0);
  for (auto &t : tuples) {
    std::vector<int> lab;
    Weight w = zero;
    Integer gd = 1;
    for (size_t x : t) {
      lab.push_back(vec.label(x)[0]);
      for (int j = 0; j < spec_.group.rank; ++j) w[j] += vec.weight(x)[j];
      gd *= vec.gram_diag(x);
    }
    labels_.push_back(lab);
    weights_.push_back(w);
    gram_.push_back(gd);
  }
  auto lift = [&](const std::vector<SparseEntry> &ops, std::vector<SparseEntry> &out) {
    std::map<std::pair<size_t, size_t>, Integer> acc;
    for (size_t b = 0; b < tuples.size(); ++b)
      for (int p = 0; p < d; ++p)
        for (auto &op : ops) {
          if (op.src != tuples[b][p]) continue;
          auto t = tuples[b];
          if (std::find(t.begin(), t.end(), op.dst) != t.end()) continue;
          t[p] = op.dst;
          int sg = sort_sign(t);
          acc[{idx.at(t), b}] += op.coeff * sg;
        }
    for (auto &[k, c] : acc)
      if (c != 0) out.push_back({k.first, k.second, c});
  };
  for (int i = 1; i <= spec_.group.rank; ++i) {
    lift(vec.f_entries(i), f_[i - 1]);
    lift(vec.e_entries(i), e_[i - 1]);
  }
  highest_ = 0;
}

void Module::build_spin() {
  int r = spec_.group.rank;
  bool typeB = spec_.realization == Realization::SpinB;
  int parity = spec_.realization == Realization::SpinDMinus ? -1 : 1;
  std::map<std::vector<int>, size_t> idx;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> eps(r);
    int prod = 1;
    for (int k = 0; k < r; ++k) {
      eps[k] = (mask >> (r - 1 - k)) & 1 ? -1 : 1;
      prod *= eps[k];
    }
    if (!typeB && prod != parity) continue;
    idx[eps] = labels_.size();
    labels_.push_back(eps);
  }
  for (auto &eps : labels_) {
    Weight w(r);
    for (int i = 1; i < r; ++i) w[i - 1] = half(eps[i - 1] - eps[i]);
    w[r - 1] = typeB ? eps[r - 1] : half(eps[r - 2] + eps[r - 1]);
    weights_.push_back(w);
    gram_.push_back(1);
  }
  for (size_t b = 0; b < labels_.size(); ++b) {
    const auto &eps = labels_[b];
    for (int i = 1; i <= r; ++i) {
      auto flip = [&](std::vector<int> t, std::vector<int> pos, std::vector<SparseEntry> &out) {
        for (int p : pos) t[p] = -t[p];
        out.push_back({idx.at(t), b, 1});
      };
      if (i < r) {
        if (eps[i - 1] == 1 && eps[i] == -1) flip(eps, {i - 1, i}, f_[i - 1]);
        if (eps[i - 1] == -1 && eps[i] == 1) flip(eps, {i - 1, i}, e_[i - 1]);
      } else if (typeB) {
        if (eps[r - 1] == 1) flip(eps, {r - 1}, f_[r - 1]);
        if (eps[r - 1] == -1) flip(eps, {r - 1}, e_[r - 1]);
      } else {
        if (eps[r - 2] == 1 && eps[r - 1] == 1) flip(eps, {r - 2, r - 1}, f_[r - 1]);
        if (eps[r - 2] == -1 && eps[r - 1] == -1) flip(eps, {r - 2, r - 1}, e_[r - 1]);
      }
    }
  }
  std::vector<int> hw(r, 1);
  if (spec_.realization == Realization::SpinDMinus) hw[r - 1] = -1;
  highest_ = idx.at(hw);
}

GatherTable Module::exp_table(const std::vector<SparseEntry> &n) const {
  GatherTable t(dim());
  std::vector<std::vector<std::pair<size_t, Integer>>> cols(dim());
  for (auto &e : n) cols[e.src].push_back({e.dst, e.coeff});
  for (size_t b = 0; b < dim(); ++b) {
    t[b].push_back({b, 1, 0});
    std::map<size_t, Integer> cur{{b, 1}};
    Integer fact = 1;
    for (int k = 1;; ++k) {
      std::map<size_t, Integer> next;
      for (auto &[s, c] : cur)
        for (auto &[dst, x] : cols[s]) next[dst] += c * x;
      std::erase_if(next, [](auto &p) { return p.second == 0; });
      if (next.empty()) break;
      if (k > static_cast<int>(dim()) + 1) throw std::logic_error("generator is not nilpotent");
      fact *= k;
      for (auto &[dst, c] : next) {
        if (c % fact != 0) throw std::logic_error("exponential series is not integral");
        t[dst].push_back({b, c / fact, k});
      }
      cur = std::move(next);
    }
  }
  return t;
}

void Module::finish() {
  int r = spec_.group.rank;
  for (int i = 1; i <= r; ++i) {
    yexp_.push_back(exp_table(f_[i - 1]));
    xexp_.push_back(exp_table(e_[i - 1]));
    GatherTable xm = yexp_.back();
    for (auto &row : xm)
      for (auto &en : row) en.texp -= pairing(en.src, i);
    xminus_.push_back(std::move(xm));
    GatherTable al(dim());
    for (size_t b = 0; b < dim(); ++b) al[b].push_back({b, 1, pairing(b, i)});
    alpha_.push_back(std::move(al));
  }
}

std::string Module::label_str(size_t b) const {
  const auto &l = labels_[b];
  if (spec_.realization == Realization::SpinB || spec_.realization == Realization::SpinDPlus ||
      spec_.realization == Realization::SpinDMinus) {
    std::string s = "(";
    for (size_t k = 0; k < l.size(); ++k) s += std::string(k ? "," : "") + (l[k] > 0 ? "+" : "-");
    return s + ")";
  }
  std::string s;
  for (size_t k = 0; k < l.size(); ++k) s += (k ? "^" : "") + vector_label_str(l[k]);
  return s;
}

std::optional<size_t> Module::find(const std::vector<int> &label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<size_t>(it - labels_.begin());
}

RepVector Module::basis(size_t b) const {
  RepVector v(dim());
  v.at(b) = Poly(1);
  return v;
}

namespace {

RepVector act_sparse(const std::vector<SparseEntry> &ops, const RepVector &v) {
  RepVector out(v.size());
  for (auto &op : ops)
    if (!v[op.src].is_zero()) out[op.dst].add_scaled(v[op.src], op.coeff, Monomial());
  return out;
}

}  // namespace

RepVector Module::act_f(int i, size_t b) const { return act_sparse(f_.at(i - 1), basis(b)); }
RepVector Module::act_e(int i, size_t b) const { return act_sparse(e_.at(i - 1), basis(b)); }
RepVector Module::act_f(int i, const RepVector &v) const { return act_sparse(f_.at(i - 1), v); }
RepVector Module::act_e(int i, const RepVector &v) const { return act_sparse(e_.at(i - 1), v); }

RepVector Module::act_h(int i, const RepVector &v) const {
  RepVector out(v.size());
  for (size_t b = 0; b < v.size(); ++b) out[b] = v[b].scaled(pairing(b, i), Monomial());
  return out;
}

RepVector Module::apply(const GatherTable &t, const Scalar &s, const RepVector &v, Exec ex) {
  RepVector out(t.size());
  long n = static_cast<long>(t.size());
#pragma omp parallel for schedule(dynamic) if (ex == Exec::Parallel)
  for (long row = 0; row < n; ++row) {
    Poly acc;
    for (auto &en : t[row]) {
      const Poly &src = v[en.src];
      if (src.is_zero()) continue;
      acc.add_scaled(src, en.coeff * int_pow(s.c, en.texp), s.m.pow(en.texp));
    }
    out[row] = std::move(acc);
  }
  return out;
}

RepVector Module::y_op(int i, const Scalar &t, const RepVector &v, Exec ex) const {
  return apply(yexp_.at(i - 1), t, v, ex);
}

RepVector Module::x_op(int i, const Scalar &t, const RepVector &v, Exec ex) const {
  return apply(xexp_.at(i - 1), t, v, ex);
}

RepVector Module::alpha_check(int i, const Scalar &t, const RepVector &v, Exec ex) const {
  return apply(alpha_.at(i - 1), t, v, ex);
}

RepVector Module::x_minus(int i, const Scalar &t, const RepVector &v, Exec ex) const {
  return apply(xminus_.at(i - 1), t, v, ex);
}

RepVector Module::sbar_apply(int i, const RepVector &v, Exec ex) const {
  Scalar m1 = Scalar::constant(-1), p1 = Scalar::constant(1);
  return x_op(i, m1, y_op(i, p1, x_op(i, m1, v, ex), ex), ex);
}

RepVector Module::sbar_word(const Word &w, const RepVector &v, Exec ex) const {
  RepVector out = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = sbar_apply(*it, out, ex);
  return out;
}

RepVector Module::xL_apply(const Word &w, const RepVector &v, Exec ex) const {
  auto vars = word_variables(w);
  RepVector out = v;
  for (size_t k = w.size(); k-- > 0;) {
    auto [s, i] = vars[k];
    out = x_minus(i, Scalar::of(Monomial::var(s, i, group().rank)), out, ex);
  }
  return out;
}

Poly Module::gram(const RepVector &u, const RepVector &w) const {
  if (u.size() != dim() || w.size() != dim()) throw std::invalid_argument("module mismatch");
  Poly acc;
  for (size_t b = 0; b < dim(); ++b)
    if (!u[b].is_zero() && !w[b].is_zero()) acc += (u[b] * w[b]).scaled(gram_[b], Monomial());
  return acc;
}

const Module &module_cached(const ModuleSpec &spec) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<Module>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (auto &m : cache)
    if (m->spec() == spec) return *m;
  cache.push_back(std::make_unique<Module>(spec));
  return *cache.back();
}

}  // namespace cm
