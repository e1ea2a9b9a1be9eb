#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cm/fund_rep.hpp"
#include "cm/laurent.hpp"
#include "cm/monomial_crystal.hpp"
#include "cm/root_data.hpp"

namespace cm {

struct MinorRequest {
  GroupType group;
  Word word;
  int k = 1;  // [-r,-1] or [1,n]
};

class ScopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate(const MinorRequest &req);
int minor_index(const MinorRequest &req);  // d = i_k, or |k| for k < 0
nlohmann::json to_json(const MinorRequest &req);

Poly delta_L(const MinorRequest &req, Exec ex = Exec::Serial);

struct TorusScaledMinor {
  Weight character;  // u_{<=k} Lambda_d
  Poly poly;
};
TorusScaledMinor delta_G(const MinorRequest &req, Exec ex = Exec::Serial);

// weight of the basis vector carrying s-bar(u_{<=k}) u_{Lambda_d} in the module
Weight extremal_vector_weight(const MinorRequest &req);

struct GmlemReport {
  Var new_variable;
  bool variable_absent = false;
  bool equal = false;
  bool ok() const { return variable_absent && equal; }
};
GmlemReport check_gmlem(const MinorRequest &req, int extra_letter);

// the request of the main theorem for left factor parameters (m, d)
MinorRequest thm1_request(const GroupType &g, int m, int d);
struct GridPoint {
  int m;
  int d;
  MinorRequest req;
};
std::vector<GridPoint> thm1_grid(const GroupType &g);

struct ScopeInfo {
  bool left_factor = false;
  int m = 0;
  int cycle_of_k = 0;
  bool last_matches = false;  // i_n = i_k
  bool in_scope() const { return left_factor && last_matches && cycle_of_k == m - 1; }
};
ScopeInfo scope_of(const MinorRequest &req);

struct Thm1Report {
  MinorRequest req;
  bool in_scope = false;
  bool match = false;
  bool positive = false;
  bool support_subset = false;  // support(Delta) within the Demazure set
  Monomial seed;                // 1/Y_{m,d}
  std::vector<std::pair<Monomial, Integer>> multiplicities;
  size_t demazure_size = 0;
  size_t minor_terms = 0;
};
Thm1Report verify_thm1(const MinorRequest &req, bool force = false, Exec ex = Exec::Serial);
nlohmann::json to_json(const Thm1Report &r);

// splitting a minor by connected component and testing each part against every lower Demazure crystal
struct DemazurePart {
  Monomial lowest;
  Weight highest_weight;
  std::vector<std::pair<Monomial, Integer>> terms;
  std::optional<Word> demazure_word;           // a w with lower_demazure(lowest, w) = support
  std::optional<Word> weight_multiset_word;    // a w whose Demazure weight multiset matches
  size_t weyl_elements_checked = 0;
};
struct DemazureDiagnostic {
  Poly minor;
  std::vector<DemazurePart> parts;
};
DemazureDiagnostic demazure_diagnostic(const GroupType &g, const Poly &minor);
nlohmann::json to_json(const DemazureDiagnostic &d);

}  // namespace cm
