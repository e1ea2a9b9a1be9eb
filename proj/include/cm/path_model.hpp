#pragma once

#include <string>
#include <vector>

#include "cm/laurent.hpp"

namespace cm {

// vertices[s] is a^{(s)} at level m - s; standard entries use j / -j (bar j),
// spin entries are the sorted positions of minus signs
struct DPath {
  int m = 0;
  std::vector<std::vector<int>> vertices;
};

std::vector<DPath> enumerate_paths(int m, int d, int r);
// Q^{(s)}(i -> j) on the edge leaving level s
Monomial edge_label(int i, int j, int s, int r);
Monomial label(const DPath &p, int r);

struct PathIndices {
  std::vector<int> K;  // k_i
  std::vector<int> L;  // l_i, with Q(p) = prod D(m - l_i, k_i)
};
PathIndices path_indices(const DPath &p, int r);

std::vector<DPath> enumerate_spin_paths(int m, int r, int which);
Monomial spin_edge_label(const std::vector<int> &from, const std::vector<int> &to, int s, int r);
Monomial spin_label(const DPath &p, int r);

Poly path_sum(int m, int d, int r);  // d = r-1, r select the spin path sets
std::string to_dot(const std::vector<DPath> &paths, int r, bool spin);

}  // namespace cm
