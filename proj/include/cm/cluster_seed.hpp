#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cm/laurent.hpp"
#include "cm/root_data.hpp"

namespace cm {

// k in [-r,-1] or [1,n], with i_k = k for negative k
std::optional<int> k_plus(const Word &w, int k, int rank);
std::vector<int> e_set(const Word &w, int rank);
std::vector<int> row_labels(const Word &w, int rank);  // -1..-r, then 1..n

struct Arrow {
  int from;
  int to;
  auto operator<=>(const Arrow &) const = default;
};
std::vector<Arrow> quiver(const GroupType &g, const Word &w);

struct ExchangeMatrix {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<std::vector<int>> b;  // b[row index][col index]

  int row_index(int label) const;
  int col_index(int label) const;
  int at(int row_label, int col_label) const;
  bool operator==(const ExchangeMatrix &) const = default;
};

ExchangeMatrix b_tilde(const GroupType &g, const Word &w);
ExchangeMatrix mutate_matrix(const ExchangeMatrix &B, int k);

// D B skew-symmetric on the principal part, D indexed by column labels
bool is_skew_symmetrizable(const ExchangeMatrix &B, const std::vector<int> &d);
std::optional<std::vector<int>> find_skew_symmetrizer(const GroupType &g, const Word &w, const ExchangeMatrix &B);

nlohmann::json to_json(const ExchangeMatrix &B);

struct Seed {
  std::vector<std::string> symbols;       // one per row, in row order
  std::vector<std::optional<Poly>> values;  // bound Laurent values, if any
  ExchangeMatrix matrix;
};

Seed initial_seed(const GroupType &g, const Word &w);
// binds x_k to Delta^L(k; w)
Seed bound_seed(const GroupType &g, const Word &w);
Seed mutate_seed(const Seed &s, int k);

nlohmann::json to_json(const Seed &s);

}  // namespace cm
