#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cm {

enum class Family { A, B, C, D };

struct GroupType {
  Family family = Family::A;
  int rank = 2;

  bool operator==(const GroupType &) const = default;
};

using Matrix = std::vector<std::vector<int>>;
using Weight = std::vector<int>;
using Word = std::vector<int>;

GroupType make_group(char family, int rank);
char family_char(Family f);
std::string group_name(const GroupType &g);

// a[i-1][j-1] = alpha_j(h_i)
Matrix cartan_matrix(const GroupType &g);
int cartan(const GroupType &g, int i, int j);

Weight fundamental(const GroupType &g, int i);
Weight simple_root(const GroupType &g, int i);
Weight weyl_apply(const GroupType &g, const Word &w, Weight lambda);
int pairing(const Weight &lambda, int i);  // lambda(h_i)

// positive roots in simple-root coordinates
std::vector<std::vector<int>> positive_roots(const GroupType &g);
int length(const GroupType &g, const Word &w);
bool is_reduced(const GroupType &g, const Word &w);

Word i0(const GroupType &g);

struct LeftFactor {
  Word word;
  int m = 0;     // number of cycles touched
  int last = 0;  // i_n
};
LeftFactor left_factor(const GroupType &g, int n);

// k in [-r,-1] gives the identity, k in [1,n] the prefix
Word u_leq(const Word &w, int k, int rank);

// (s,i) for each letter: s increments whenever a letter does not exceed its predecessor
std::vector<std::pair<int, int>> word_variables(const Word &w);
int cycle_count(const Word &w);

// d with d_i a_ij = d_j a_ji
std::vector<int> symmetrizer(const GroupType &g);

// one reduced word per Weyl group element, shortest first
std::vector<Word> weyl_elements(const GroupType &g);

Word parse_word(const std::string &s);
std::string word_str(const Word &w);

}  // namespace cm
