#include "cm/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cm {

Monomial Monomial::var(int s, int i, int rank, int e) {
  Monomial m;
  if (i == 0 || i == rank + 1 || e == 0) return m;
  if (i < 0 || i > rank + 1) throw std::invalid_argument("variable index out of range");
  m.e_.push_back({Var{s, i}, e});
  return m;
}

Monomial Monomial::from_exponents(Exps e) {
  std::sort(e.begin(), e.end(), [](auto &a, auto &b) { return a.first < b.first; });
  Monomial m;
  for (auto &[v, x] : e) {
    if (!m.e_.empty() && m.e_.back().first == v)
      m.e_.back().second += x;
    else
      m.e_.push_back({v, x});
    if (m.e_.back().second == 0) m.e_.pop_back();
  }
  return m;
}

int Monomial::exponent(Var v) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), v,
                             [](auto &a, const Var &b) { return a.first < b; });
  return it != e_.end() && it->first == v ? it->second : 0;
}

int Monomial::degree_in(int i) const {
  int d = 0;
  for (auto &[v, x] : e_)
    if (v.i == i) d += x;
  return d;
}

Monomial Monomial::operator*(const Monomial &o) const {
  Monomial m;
  size_t a = 0, b = 0;
  while (a < e_.size() || b < o.e_.size()) {
    if (b == o.e_.size() || (a < e_.size() && e_[a].first < o.e_[b].first)) {
      m.e_.push_back(e_[a++]);
    } else if (a == e_.size() || o.e_[b].first < e_[a].first) {
      m.e_.push_back(o.e_[b++]);
    } else {
      int x = e_[a].second + o.e_[b].second;
      if (x) m.e_.push_back({e_[a].first, x});
      ++a, ++b;
    }
  }
  return m;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int n) const {
  Monomial m;
  if (n == 0) return m;
  m.e_ = e_;
  for (auto &p : m.e_) p.second *= n;
  return m;
}

std::string Monomial::str() const {
  if (e_.empty()) return "1";
  std::string s;
  for (auto &[v, x] : e_) {
    if (!s.empty()) s += "*";
    s += "Y[" + std::to_string(v.s) + "," + std::to_string(v.i) + "]";
    if (x != 1) s += "^" + std::to_string(x);
  }
  return s;
}

Poly::Poly(int c) : Poly(Integer(c)) {}
Poly::Poly(Integer c) {
  if (c != 0) t_.emplace(Monomial(), std::move(c));
}
Poly::Poly(const Monomial &m, Integer c) {
  if (c != 0) t_.emplace(m, std::move(c));
}

Poly Poly::var(int s, int i, int rank) { return Poly(Monomial::var(s, i, rank)); }

Integer Poly::coeff(const Monomial &m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Integer(0) : it->second;
}

bool Poly::uses(Var v) const {
  for (auto &[m, c] : t_)
    if (m.exponent(v) != 0) return true;
  return false;
}

void Poly::add_term(const Monomial &m, const Integer &c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

void Poly::add_scaled(const Poly &p, const Integer &c, const Monomial &m) {
  if (c == 0) return;
  for (auto &[pm, pc] : p.t_) add_term(pm * m, pc * c);
}

Poly Poly::scaled(const Integer &c, const Monomial &m) const {
  Poly r;
  r.add_scaled(*this, c, m);
  return r;
}

Poly &Poly::operator+=(const Poly &o) {
  for (auto &[m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly &Poly::operator-=(const Poly &o) {
  for (auto &[m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly &o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly &o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto &[m, c] : r.t_) c = -c;
  return r;
}

Poly mul(const Poly &a, const Poly &b) {
  Poly r;
  for (auto &[ma, ca] : a.terms())
    for (auto &[mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::operator*(const Poly &o) const { return mul(*this, o); }

Poly Poly::pow(int n) const {
  if (n < 0) {
    if (!is_monomial()) throw std::domain_error("negative power of a non-monomial");
    auto &[m, c] = *t_.begin();
    if (c != 1 && c != -1) throw std::domain_error("negative power of a non-unit coefficient");
    Integer cc = (c == -1 && (n % 2)) ? Integer(-1) : Integer(1);
    return Poly(m.pow(n), cc);
  }
  Poly r(1), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

namespace {

// multiply by the monomial that makes every exponent >= 0 with some exponent 0 per variable
Monomial shift_to_polynomial(const Poly &p) {
  std::map<Var, int> lo;
  for (auto &[m, c] : p.terms())
    for (auto &[v, x] : m.exponents()) lo[v] = std::min(lo.count(v) ? lo[v] : 0, x);
  // variables absent from a term have exponent 0 there
  for (auto &[v, x] : lo)
    for (auto &[m, c] : p.terms()) x = std::min(x, m.exponent(v));
  Monomial::Exps e;
  for (auto &[v, x] : lo)
    if (x < 0) e.push_back({v, -x});
  return Monomial::from_exponents(e);
}

Monomial strip_common(const Poly &p) {
  std::map<Var, int> lo;
  bool first = true;
  for (auto &[m, c] : p.terms()) {
    if (first) {
      for (auto &[v, x] : m.exponents()) lo[v] = x;
      first = false;
      continue;
    }
    for (auto &[v, x] : lo) x = std::min(x, m.exponent(v));
  }
  Monomial::Exps e;
  for (auto &[v, x] : lo)
    if (x > 0) e.push_back({v, x});
  return Monomial::from_exponents(e);
}

// lex term order: compare exponents variable by variable, missing exponents are 0
bool lex_less(const Monomial &a, const Monomial &b) {
  auto &x = a.exponents(), &y = b.exponents();
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) return x[i].second < 0;
    if (i == x.size() || y[j].first < x[i].first) return y[j].second > 0;
    if (x[i].second != y[j].second) return x[i].second < y[j].second;
    ++i, ++j;
  }
  return false;
}

template <class Terms>
typename Terms::const_iterator leading(const Terms &t) {
  auto best = t.begin();
  for (auto it = t.begin(); it != t.end(); ++it)
    if (lex_less(best->first, it->first)) best = it;
  return best;
}

bool divides(const Monomial &a, const Monomial &b) {
  for (auto &[v, x] : a.exponents())
    if (b.exponent(v) < x) return false;
  return true;
}

}  // namespace

std::optional<Poly> Poly::divide_exact(const Poly &d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return Poly();
  // reduce to polynomials, with the divisor free of monomial factors
  Monomial sd = shift_to_polynomial(d);
  Poly dd = d.scaled(1, sd);
  Monomial g = strip_common(dd);
  dd = dd.scaled(1, g.inverse());
  sd = sd * g.inverse();
  Monomial sp = shift_to_polynomial(*this);
  Poly rem = scaled(1, sp);

  auto lead_d = leading(dd.t_);
  Poly q;
  while (!rem.is_zero()) {
    auto lead_r = leading(rem.t_);
    if (!divides(lead_d->first, lead_r->first)) return std::nullopt;
    if (lead_r->second % lead_d->second != 0) return std::nullopt;
    Monomial qm = lead_r->first * lead_d->first.inverse();
    Integer qc = lead_r->second / lead_d->second;
    q.add_term(qm, qc);
    rem.add_scaled(dd, -qc, qm);
  }
  // this*sp = q*dd = q*d*sd  =>  this = q * sd / sp
  return q.scaled(1, sd * sp.inverse());
}

Rational Poly::eval(const std::map<Var, Rational> &point) const {
  Rational total = 0;
  for (auto &[m, c] : t_) {
    Rational t = Rational(c);
    for (auto &[v, x] : m.exponents()) {
      auto it = point.find(v);
      if (it == point.end())
        throw std::invalid_argument("missing assignment for Y[" + std::to_string(v.s) + "," +
                                    std::to_string(v.i) + "]");
      if (it->second == 0) throw std::domain_error("zero assignment");
      Rational b = x > 0 ? it->second : Rational(1) / it->second;
      for (int k = 0; k < (x > 0 ? x : -x); ++k) t *= b;
    }
    total += t;
  }
  return total;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto &[m, c] : t_) {
    Integer a = c < 0 ? Integer(-c) : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (m.is_one()) {
      s += a.str();
    } else {
      if (a != 1) s += a.str() + "*";
      s += m.str();
    }
  }
  return s;
}

Poly Poly::parse(const std::string &src) {
  std::string s;
  for (char ch : src)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  Poly p;
  size_t i = 0;
  auto fail = [&](const std::string &why) {
    throw std::invalid_argument("parse error at " + std::to_string(i) + ": " + why);
  };
  auto read_int = [&]() {
    size_t st = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i || (i == st + 1 && !std::isdigit(static_cast<unsigned char>(s[st])))) fail("expected integer");
    return s.substr(st, i - st);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    Integer c = 1;
    Monomial::Exps e;
    bool any = false;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        c *= Integer(read_int());
      } else if (s[i] == 'Y') {
        if (++i >= s.size() || s[i] != '[') fail("expected [");
        ++i;
        int a = std::stoi(read_int());
        if (i >= s.size() || s[i] != ',') fail("expected ,");
        ++i;
        int b = std::stoi(read_int());
        if (i >= s.size() || s[i] != ']') fail("expected ]");
        ++i;
        int x = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          x = std::stoi(read_int());
        }
        e.push_back({Var{a, b}, x});
      } else {
        fail(std::string("unexpected '") + s[i] + "'");
      }
      any = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    if (!any) fail("empty term");
    p.add_term(Monomial::from_exponents(e), c * sign);
  }
  return p;
}

nlohmann::json Poly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (auto &[m, c] : t_) {
    nlohmann::json vars = nlohmann::json::array();
    for (auto &[v, x] : m.exponents()) vars.push_back({v.s, v.i, x});
    terms.push_back({{"coeff", c.str()}, {"vars", vars}});
  }
  return {{"terms", terms}};
}

Poly Poly::from_json(const nlohmann::json &j) {
  Poly p;
  for (auto &t : j.at("terms")) {
    Monomial::Exps e;
    for (auto &v : t.at("vars")) e.push_back({Var{v.at(0).get<int>(), v.at(1).get<int>()}, v.at(2).get<int>()});
    p.add_term(Monomial::from_exponents(e), Integer(t.at("coeff").get<std::string>()));
  }
  return p;
}

}  // namespace cm
