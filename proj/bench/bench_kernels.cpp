#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "cm/verify.hpp"

using namespace cm;

namespace {

double seconds(const std::function<void()> &f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const std::string &name, const std::function<void(Exec)> &f, int reps) {
  double s = seconds([&] { f(Exec::Serial); }, reps);
  double p = seconds([&] { f(Exec::Parallel); }, reps);
  std::printf("%-34s serial %9.4fs  parallel %9.4fs  speedup %5.2fx\n", name.c_str(), s, p, s / p);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  for (auto [f, r, d] : {std::tuple{'C', 5, 3}, std::tuple{'B', 5, 5}, std::tuple{'D', 6, 3}, std::tuple{'A', 6, 3}}) {
    auto g = make_group(f, r);
    const Module &m = module_cached(module_for(g, d));
    Word w = i0(g);
    RepVector u = m.basis(m.highest());
    std::string tag = group_name(g) + " d=" + std::to_string(d) + " dim=" + std::to_string(m.dim());
    row("xL_apply " + tag, [&](Exec ex) { (void)m.xL_apply(w, u, ex); }, 3);
  }
  for (auto [f, r] : {std::tuple{'C', 4}, std::tuple{'B', 4}, std::tuple{'D', 5}}) {
    auto g = make_group(f, r);
    auto grid = thm1_grid(g);
    row("delta_L grid " + group_name(g), [&](Exec ex) {
      for (auto &pt : grid) (void)delta_L(pt.req, ex);
    }, 2);
    row("verify_grid " + group_name(g), [&](Exec ex) { (void)verify_grid(g, ex); }, 1);
  }
  return 0;
}
