#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cm/laurent.hpp"
#include "cm/root_data.hpp"

namespace cm {

enum class Realization { Vector, Wedge, SpinB, SpinDPlus, SpinDMinus };

struct ModuleSpec {
  GroupType group;
  int d = 1;  // highest weight Lambda_d
  Realization realization = Realization::Vector;

  bool operator==(const ModuleSpec &) const = default;
};

// the module realizing V(Lambda_d): wedge(d) below the spin thresholds, spin modules above
ModuleSpec module_for(const GroupType &g, int d);
void validate(const ModuleSpec &s);

enum class Exec { Serial, Parallel };

// t = c * m with c an integer and m a Laurent monomial
struct Scalar {
  Integer c = 1;
  Monomial m;

  static Scalar of(const Monomial &m) { return {1, m}; }
  static Scalar constant(int c) { return {c, Monomial()}; }
};

using RepVector = std::vector<Poly>;

// row-gather form of a linear operator: out[dst] += coeff * t^texp * in[src]
struct GatherEntry {
  size_t src;
  Integer coeff;
  int texp;
};
using GatherTable = std::vector<std::vector<GatherEntry>>;

struct SparseEntry {
  size_t dst;
  size_t src;
  Integer coeff;
};

class Module {
 public:
  explicit Module(ModuleSpec spec);

  const ModuleSpec &spec() const { return spec_; }
  const GroupType &group() const { return spec_.group; }
  size_t dim() const { return labels_.size(); }
  size_t highest() const { return highest_; }

  // vector labels j, 0, -j (bar j); wedge tuples of vector labels; spin sign tuples
  const std::vector<int> &label(size_t b) const { return labels_[b]; }
  std::string label_str(size_t b) const;
  std::optional<size_t> find(const std::vector<int> &label) const;

  const Weight &weight(size_t b) const { return weights_[b]; }
  int pairing(size_t b, int i) const { return weights_[b][i - 1]; }
  const Integer &gram_diag(size_t b) const { return gram_[b]; }

  const std::vector<SparseEntry> &f_entries(int i) const { return f_[i - 1]; }
  const std::vector<SparseEntry> &e_entries(int i) const { return e_[i - 1]; }

  RepVector zero() const { return RepVector(dim()); }
  RepVector basis(size_t b) const;

  RepVector act_f(int i, size_t b) const;
  RepVector act_e(int i, size_t b) const;
  RepVector act_f(int i, const RepVector &v) const;
  RepVector act_e(int i, const RepVector &v) const;
  RepVector act_h(int i, const RepVector &v) const;

  RepVector y_op(int i, const Scalar &t, const RepVector &v, Exec ex = Exec::Serial) const;
  RepVector x_op(int i, const Scalar &t, const RepVector &v, Exec ex = Exec::Serial) const;
  RepVector alpha_check(int i, const Scalar &t, const RepVector &v, Exec ex = Exec::Serial) const;
  // y_i(t) alpha_i^vee(t^{-1})
  RepVector x_minus(int i, const Scalar &t, const RepVector &v, Exec ex = Exec::Serial) const;
  RepVector sbar_apply(int i, const RepVector &v, Exec ex = Exec::Serial) const;
  // s-bar_{w_1} ... s-bar_{w_n} v
  RepVector sbar_word(const Word &w, const RepVector &v, Exec ex = Exec::Serial) const;
  // x_{-i_1}(Y_{s_1,i_1}) ... x_{-i_n}(Y_{s_n,i_n}) v
  RepVector xL_apply(const Word &w, const RepVector &v, Exec ex = Exec::Serial) const;

  Poly gram(const RepVector &u, const RepVector &w) const;

  static RepVector apply(const GatherTable &t, const Scalar &s, const RepVector &v, Exec ex);

 private:
  void build_vector();
  void build_wedge(const Module &vec);
  void build_spin();
  void finish();
  GatherTable exp_table(const std::vector<SparseEntry> &n) const;

  ModuleSpec spec_;
  std::vector<std::vector<int>> labels_;
  std::vector<Weight> weights_;
  std::vector<Integer> gram_;
  std::vector<std::vector<SparseEntry>> f_, e_;
  std::vector<GatherTable> yexp_, xexp_, xminus_, alpha_;
  size_t highest_ = 0;
};

// shared read-only instance per spec
const Module &module_cached(const ModuleSpec &spec);

std::string vector_label_str(int j);

}  // namespace cm
