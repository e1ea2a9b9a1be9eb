#include "cm/verify.hpp"

#include <chrono>

#include "cm/closed_forms.hpp"
#include "cm/path_model.hpp"

namespace cm {

GridRecord verify_point(const GridPoint &p) {
  auto t0 = std::chrono::steady_clock::now();
  GridRecord rec;
  rec.m = p.m;
  rec.d = p.d;
  rec.thm1 = verify_thm1(p.req);
  for (auto &[m, c] : rec.thm1.multiplicities) rec.minor.add_term(m, c);
  const GroupType &g = p.req.group;
  rec.closed_match = closed_form(g, p.m, p.d) == rec.minor;
  if (g.family == Family::D) rec.path_match = path_sum(p.m, p.d, g.rank) == rec.minor;
  Weight ch = weyl_apply(g, u_leq(p.req.word, p.req.k, g.rank), fundamental(g, p.d));
  rec.character_match = ch == extremal_vector_weight(p.req);
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

std::vector<GridRecord> verify_grid(const GroupType &g, Exec ex) {
  auto pts = thm1_grid(g);
  std::vector<GridRecord> out(pts.size());
  long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic) if (ex == Exec::Parallel)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = verify_point(pts[i]);
    } catch (const std::exception &e) {
      out[i].m = pts[i].m;
      out[i].d = pts[i].d;
      out[i].thm1.req = pts[i].req;
      out[i].error = e.what();
    }
  }
  return out;
}

nlohmann::json to_json(const GridRecord &r) {
  nlohmann::json j = to_json(r.thm1);
  j["m"] = r.m;
  j["d"] = r.d;
  j["closed_form_match"] = r.closed_match;
  if (r.path_match) j["path_sum_match"] = *r.path_match;
  j["character_match"] = r.character_match;
  if (!r.error.empty()) j["error"] = r.error;
  j["ok"] = r.ok();
  return j;
}

}  // namespace cm
