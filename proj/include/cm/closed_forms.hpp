#pragma once

#include <vector>

#include "cm/laurent.hpp"
#include "cm/root_data.hpp"

namespace cm {

// extended indices: j unbarred, -j for bar j, 0, and rank+1
int c_pos(int k, int r);
int b_pos(int k, int r);
int d_pos(int k, int r);              // r and bar r share position r
bool d_leq(int a, int b, int r);      // partial order, r and bar r incomparable
bool d_less(int a, int b, int r);

// A(l,k), B(l,k), C(l,k), D(l,k)
Monomial factor(const GroupType &g, int l, int k);

struct ClosedTerm {
  std::vector<int> seq;  // k_1..k_d, or the spin index set
  std::vector<int> ls;   // l_i used in the factor of k_i
  int coeff = 1;
  Monomial mono;
};

std::vector<ClosedTerm> closed_terms_A(int m, int d, int r);
std::vector<ClosedTerm> closed_terms_C(int m, int d, int r);
std::vector<ClosedTerm> closed_terms_B(int m, int d, int r);
std::vector<ClosedTerm> closed_terms_B_spin(int m, int r);
std::vector<ClosedTerm> closed_terms_D(int m, int d, int r);
std::vector<ClosedTerm> closed_terms_D_spin(int m, int r, int which);
// the index set exactly as displayed, 0 <= s <= m-1, which misses the s = m terms
std::vector<ClosedTerm> closed_terms_D_spin_literal(int m, int r, int which);

Poly sum_terms(const std::vector<ClosedTerm> &t);

Poly closed_A(int m, int d, int r);
Poly closed_C(int m, int d, int r);
Poly closed_B(int m, int d, int r);
Poly closed_B_spin(int m, int r);
Poly closed_D(int m, int d, int r);
Poly closed_D_spin(int m, int r, int which);
Poly closed_D_spin_literal(int m, int r, int which);

// dispatch on family and d, spin cases included
std::vector<ClosedTerm> closed_form_terms(const GroupType &g, int m, int d);
Poly closed_form(const GroupType &g, int m, int d);

}  // namespace cm
