#include "legmosaic/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace legmosaic {

long long isqrt_floor(long long x) {
  if (x < 0) throw domain_error("DomainError", "isqrt of a negative number");
  if (x == 0) return 0;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

long long isqrt_ceil(long long x) {
  long long f = isqrt_floor(x);
  return f * f == x ? f : f + 1;
}

long long ceil_sqrt_quarters_plus_3_2(long long quarters) {
  if (quarters < 0)
    throw domain_error("DomainError", "negative radicand");
  // Want the least integer v with v >= sqrt(q)/2 + 3/2, i.e. 2v - 3 >= sqrt(q).
  // Since 2v - 3 is an integer this is 2v - 3 >= ceil(sqrt(q)).
  long long s = isqrt_ceil(quarters);
  long long v = (s + 3 + 1) / 2;  // ceil((s + 3) / 2)
  return std::max(v, 2LL);        // 2v - 3 >= 0
}

BoundReport lower_bounds(const InvariantPair& inv) {
  BoundReport report;
  long long abs_rot = inv.rot < 0 ? -inv.rot : inv.rot;
  if (4 * abs_rot + inv.tb >= 0) {
    long long bound = isqrt_ceil(4 * abs_rot + inv.tb);
    report.lower_combinatorial = bound;
    report.lower_cone_rot = bound;
  }
  if (inv.tb < 0) {
    // sqrt(-tb - 3/4) + 3/2 with the radicand in quarters: -4 tb - 3.
    report.lower_board = ceil_sqrt_quarters_plus_3_2(-4 * inv.tb - 3);
  }
  if (inv.tb <= 0) report.lower_cone_tb = isqrt_ceil(-inv.tb);
  report.best_lower = 1;
  for (const auto& b : {report.lower_combinatorial, report.lower_board,
                        report.lower_cone_rot, report.lower_cone_tb})
    if (b) report.best_lower = std::max(report.best_lower, *b);
  return report;
}

bool is_unknot_pair(const InvariantPair& inv) {
  long long abs_rot = inv.rot < 0 ? -inv.rot : inv.rot;
  if (inv.tb > -1) return false;
  if (inv.tb + abs_rot > -1) return false;
  return ((inv.tb + inv.rot) % 2 + 2) % 2 == 1;
}

long long unknot_upper_bound(const InvariantPair& inv) {
  if (!is_unknot_pair(inv))
    throw domain_error("NotAnUnknotPair",
                       "(" + std::to_string(inv.tb) + ", " + std::to_string(inv.rot) +
                           ") is not realised by a Legendrian unknot");
  long long abs_rot = inv.rot < 0 ? -inv.rot : inv.rot;
  if (abs_rot != 0)
    return ceil_sqrt_quarters_plus_3_2(12 * abs_rot - 4 * inv.tb - 11);
  return ceil_sqrt_quarters_plus_3_2(-4 * inv.tb + 5);
}

long long unknot_upper_bound_extremal(const InvariantPair& inv) {
  long long abs_rot = inv.rot < 0 ? -inv.rot : inv.rot;
  if (!is_unknot_pair(inv) || abs_rot == 0 || inv.tb != -abs_rot - 1)
    throw domain_error("NotAnUnknotPair",
                       "extremal bound needs an unknot pair with tb = -|rot| - 1");
  return ceil_sqrt_quarters_plus_3_2(-16 * inv.tb - 23);
}

long long crab_tb(int n) {
  if (n < 5) throw domain_error("DomainError", "crab buckets start at n = 5");
  long long nn = n;
  if (n % 2 == 1) return -(nn - 1) * (nn - 2);
  return -nn * nn + 3 * nn + 1;
}

}  // namespace legmosaic
