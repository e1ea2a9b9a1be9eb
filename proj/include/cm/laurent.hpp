#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cm {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Var {
  int s = 0;
  int i = 0;
  auto operator<=>(const Var &) const = default;
};

class Monomial {
 public:
  using Exps = std::vector<std::pair<Var, int>>;

  Monomial() = default;
  // Y_{s,i}^e with Y_{s,0} = Y_{s,r+1} = 1
  static Monomial var(int s, int i, int rank, int e = 1);
  static Monomial from_exponents(Exps e);

  const Exps &exponents() const { return e_; }
  int exponent(Var v) const;
  bool is_one() const { return e_.empty(); }
  int degree_in(int i) const;  // sum of exponents over Y_{*,i}

  Monomial operator*(const Monomial &o) const;
  Monomial inverse() const;
  Monomial pow(int n) const;

  std::string str() const;
  auto operator<=>(const Monomial &) const = default;

 private:
  Exps e_;
};

class Poly {
 public:
  using Terms = std::map<Monomial, Integer>;

  Poly() = default;
  Poly(int c);
  Poly(Integer c);
  Poly(const Monomial &m, Integer c = 1);
  static Poly var(int s, int i, int rank);

  const Terms &terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  Integer coeff(const Monomial &m) const;
  bool is_monomial() const { return t_.size() == 1; }
  bool uses(Var v) const;

  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator-() const;
  Poly operator*(const Poly &o) const;
  Poly &operator+=(const Poly &o);
  Poly &operator-=(const Poly &o);
  bool operator==(const Poly &o) const { return t_ == o.t_; }

  void add_term(const Monomial &m, const Integer &c);
  void add_scaled(const Poly &p, const Integer &c, const Monomial &m);  // += c*m*p
  Poly scaled(const Integer &c, const Monomial &m) const;
  Poly pow(int n) const;

  // exact quotient or nullopt
  std::optional<Poly> divide_exact(const Poly &d) const;

  Rational eval(const std::map<Var, Rational> &point) const;

  std::string str() const;
  static Poly parse(const std::string &s);
  nlohmann::json to_json() const;
  static Poly from_json(const nlohmann::json &j);

 private:
  Terms t_;
};

Poly mul(const Poly &a, const Poly &b);

}  // namespace cm
