#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cm/cluster_seed.hpp"
#include "cm/minors.hpp"

using namespace cm;

namespace {

Monomial Y(int s, int i, int r, int e = 1) { return Monomial::var(s, i, r, e); }

std::vector<GroupType> small_groups() {
  std::vector<GroupType> gs;
  for (char f : {'A', 'B', 'C'})
    for (int r = 2; r <= 4; ++r) gs.push_back(make_group(f, r));
  for (int r = 3; r <= 4; ++r) gs.push_back(make_group('D', r));
  return gs;
}

}  // namespace

TEST_CASE("successor indices") {
  Word w{1, 2, 3, 1, 2};
  CHECK(k_plus(w, 1, 3) == 4);
  CHECK(k_plus(w, 2, 3) == 5);
  CHECK_FALSE(k_plus(w, 3, 3).has_value());
  CHECK_FALSE(k_plus(w, 4, 3).has_value());
  CHECK(k_plus(w, -1, 3) == 1);
  CHECK(k_plus(w, -2, 3) == 2);
  CHECK(k_plus(w, -3, 3) == 3);
  CHECK(e_set(w, 3) == std::vector<int>{1, 2});
  CHECK(e_set({2}, 3).empty());
  CHECK(row_labels(w, 3) == std::vector<int>{-1, -2, -3, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(k_plus(w, 0, 3), std::invalid_argument);
}

TEST_CASE("A2 exchange matrix") {
  auto a2 = make_group('A', 2);
  auto B = b_tilde(a2, {1, 2, 1});
  CHECK(B.rows.size() == 5);
  CHECK(B.cols == std::vector<int>{1});
  CHECK(B.at(-1, 1) == 1);
  CHECK(B.at(-2, 1) == -1);
  CHECK(B.at(1, 1) == 0);
  CHECK(B.at(2, 1) == 1);
  CHECK(B.at(3, 1) == -1);
  auto arrows = quiver(a2, {1, 2, 1});
  CHECK(std::count(arrows.begin(), arrows.end(), Arrow{-1, 1}) == 1);
  CHECK(std::count(arrows.begin(), arrows.end(), Arrow{1, 3}) == 1);
  CHECK(std::count(arrows.begin(), arrows.end(), Arrow{2, 1}) == 1);
  CHECK(std::count(arrows.begin(), arrows.end(), Arrow{1, -2}) == 1);
  CHECK_THROWS_AS(B.col_index(2), std::invalid_argument);
}

TEST_CASE("successor arrows are always present") {
  for (auto &g : small_groups()) {
    Word w = i0(g);
    auto arrows = quiver(g, w);
    for (int k : row_labels(w, g.rank))
      if (auto kp = k_plus(w, k, g.rank)) CHECK(std::count(arrows.begin(), arrows.end(), Arrow{k, *kp}) == 1);
  }
}

TEST_CASE("C2 exchange matrix") {
  auto c2 = make_group('C', 2);
  Word w{1, 2, 1, 2};
  auto B = b_tilde(c2, w);
  CHECK(B.cols == std::vector<int>{1, 2});
  // |i_k| != |i_l| entries use the Cartan integers
  CHECK(B.at(2, 1) == -cartan(c2, 2, 1));
  CHECK(B.at(1, 2) == cartan(c2, 1, 2));
  auto d = find_skew_symmetrizer(c2, w, B);
  REQUIRE(d);
  CHECK(*d == std::vector<int>{1, 2});
  CHECK(is_skew_symmetrizable(B, *d));
  CHECK_FALSE(is_skew_symmetrizable(B, {1, 1}));
  for (int k : B.cols) CHECK(mutate_matrix(mutate_matrix(B, k), k) == B);
  auto j = to_json(B);
  CHECK(j["rows"].size() == 6);
  CHECK(j["entries"].size() == 6);
}

TEST_CASE("matrix mutation") {
  ExchangeMatrix B{{1, 2}, {1, 2}, {{0, 1}, {-1, 0}}};
  ExchangeMatrix expect{{1, 2}, {1, 2}, {{0, -1}, {1, 0}}};
  CHECK(mutate_matrix(B, 1) == expect);
  ExchangeMatrix C{{1, 2, 3}, {1, 2}, {{0, 1}, {-1, 0}, {1, -1}}};
  auto M = mutate_matrix(C, 1);
  CHECK(M.b[2][1] == -1 + 1);
  CHECK(M.rows == C.rows);
  CHECK(M.cols == C.cols);
  CHECK_THROWS_AS(mutate_matrix(B, 3), std::invalid_argument);
}

TEST_CASE("skew-symmetrizable for every left factor") {
  for (auto &g : small_groups()) {
    Word full = i0(g);
    for (size_t n = 1; n <= full.size(); ++n) {
      Word w(full.begin(), full.begin() + n);
      auto B = b_tilde(g, w);
      std::vector<int> natural;
      auto sym = symmetrizer(g);
      for (int c : B.cols) natural.push_back(sym[w[c - 1] - 1]);
      CHECK(is_skew_symmetrizable(B, natural));
      for (int k : B.cols) {
        auto M = mutate_matrix(B, k);
        CHECK(mutate_matrix(M, k) == B);
        CHECK(is_skew_symmetrizable(M, natural));
        CHECK(M.rows == B.rows);
        CHECK(M.cols == B.cols);
      }
    }
  }
}

TEST_CASE("random mutation sequences are involutive step by step") {
  std::mt19937 rng(17);
  for (auto &g : small_groups()) {
    Word w = i0(g);
    auto B = b_tilde(g, w);
    if (B.cols.empty()) continue;
    std::vector<int> seq;
    for (int t = 0; t < 8; ++t) seq.push_back(B.cols[std::uniform_int_distribution<size_t>(0, B.cols.size() - 1)(rng)]);
    auto M = B;
    for (int k : seq) M = mutate_matrix(M, k);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) M = mutate_matrix(M, *it);
    CHECK(M == B);
  }
}

TEST_CASE("symbolic seed mutation") {
  auto a2 = make_group('A', 2);
  auto s = initial_seed(a2, {1, 2, 1});
  CHECK(s.symbols[s.matrix.row_index(1)] == "x[1]");
  auto m = mutate_seed(s, 1);
  CHECK(m.symbols[m.matrix.row_index(1)] == "(x[-1]*x[2] + x[-2]*x[3])/x[1]");
  CHECK_FALSE(m.values[m.matrix.row_index(1)].has_value());
  CHECK_THROWS_AS(mutate_seed(s, 3), std::invalid_argument);
  auto j = to_json(m);
  CHECK(j["cluster"].size() == 5);
}

TEST_CASE("bound seed mutation") {
  auto c2 = make_group('C', 2);
  Word w{1, 2, 1, 2};
  auto s = bound_seed(c2, w);
  auto m = mutate_seed(s, 1);
  int r = 2;
  Poly expect = Poly(Y(1, 1, r, -1) * Y(1, 2, r) * Y(2, 1, r, -2)) + Poly(Y(1, 1, r, -1) * Y(2, 2, r, -1)) +
                Poly(Y(2, 1, r, -1));
  CHECK(*m.values[m.matrix.row_index(1)] == expect);
  auto back = mutate_seed(m, 1);
  CHECK(back.values == s.values);
  CHECK(back.matrix == s.matrix);

  std::vector<std::pair<GroupType, Word>> cases{{c2, w}, {make_group('A', 3), i0(make_group('A', 3))},
                                                {make_group('B', 2), i0(make_group('B', 2))},
                                                {make_group('C', 3), {1, 2, 3, 1, 2, 3}}};
  for (auto &[g, word] : cases) {
    auto seed = bound_seed(g, word);
    for (int k : seed.matrix.cols) {
      CAPTURE(group_name(g));
      CAPTURE(k);
      Seed once;
      CHECK_NOTHROW(once = mutate_seed(seed, k));
      CHECK(mutate_seed(once, k).values == seed.values);
    }
  }
}

TEST_CASE("inexact bound division is reported") {
  auto a2 = make_group('A', 2);
  auto s = bound_seed(a2, {1, 2, 1});
  s.values[s.matrix.row_index(1)] = Poly(Y(1, 1, 2)) + Poly(3);
  CHECK_THROWS_AS(mutate_seed(s, 1), std::domain_error);
}
