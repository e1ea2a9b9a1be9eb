#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cm/laurent.hpp"
#include "cm/root_data.hpp"

namespace cm {

class MonomialCrystal {
 public:
  explicit MonomialCrystal(GroupType g);

  const GroupType &group() const { return g_; }
  int rank() const { return g_.rank; }

  Weight wt(const Monomial &y) const;
  int phi(int i, const Monomial &y) const;
  int eps(int i, const Monomial &y) const;

  // A_{s,i} with p_{j,i} = 1 iff j < i
  Monomial a_var(int s, int i) const;

  std::optional<Monomial> f(int i, const Monomial &y) const;
  std::optional<Monomial> e(int i, const Monomial &y) const;

  bool is_lowest(const Monomial &y) const;
  bool is_highest(const Monomial &y) const;

  // follow f (resp. e) until no operator applies; throws after max_steps
  Monomial descend_to_lowest(Monomial y, size_t max_steps = 100000) const;
  Monomial ascend_to_highest(Monomial y, size_t max_steps = 100000) const;

 private:
  struct Scan {
    int phi = 0;
    int total = 0;
    int n_f = 0;
    int n_e = 0;
  };
  Scan scan(int i, const Monomial &y) const;

  GroupType g_;
  Matrix a_;
};

struct CrystalEdge {
  size_t src;
  int color;
  size_t dst;
  auto operator<=>(const CrystalEdge &) const = default;
};

struct CrystalGraph {
  std::vector<Monomial> vertices;
  std::vector<CrystalEdge> edges;  // src -f_color-> dst
  size_t collisions = 0;           // vertices reached with inconsistent weight bookkeeping

  std::optional<size_t> index_of(const Monomial &y) const;
};

class VertexCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// CRYSTAL_MINORS_MAX_VERTICES or 10^6
size_t default_vertex_cap();

CrystalGraph component(const MonomialCrystal &c, const Monomial &seed, size_t cap = default_vertex_cap());

std::set<Monomial> lower_demazure(const MonomialCrystal &c, const Monomial &seed, const Word &w,
                                  size_t cap = default_vertex_cap());
std::set<Monomial> upper_demazure(const MonomialCrystal &c, const Monomial &seed, const Word &w,
                                  size_t cap = default_vertex_cap());

std::string to_dot(const CrystalGraph &g);
nlohmann::json to_json(const CrystalGraph &g);

}  // namespace cm
