#include "box_oracle.hpp"

#include <algorithm>

namespace walldiv::cli {

std::vector<WitnessCandidate> box_witnesses(const Gram2& t, int epsilon) {
  const Integer qv = t.c;
  const Integer det = -t.determinant();
  if (det <= 0 || qv <= 0) throw DomainError("box oracle needs a hyperbolic T with q(v) > 0");
  // x^2 |det| / q(v) = b(s,v)^2 / q(v) - q(s) <= q(v) + 2
  const Integer xr = 2 * (isqrt(qv * (qv + 2) / det) + 1);
  const Integer b12 = t.b < 0 ? Integer(-t.b) : t.b;
  const Integer yr = 2 * ((qv + xr * b12) / qv + 1);

  std::vector<WitnessCandidate> out;
  for (Integer x = -xr; x <= xr; ++x)
    for (Integer y = -yr; y <= yr; ++y) {
      const Integer n = t.b * x + qv * y;
      const Integer q = t.a * x * x + 2 * t.b * x * y + qv * y * y;
      if (0 <= q && q < n && 2 * n <= qv + q) out.push_back({{x, y}, WitnessBranch::case_i, n, q});
      if (epsilon == 0 && q == -2 && 0 <= n && 2 * n <= qv) out.push_back({{x, y}, WitnessBranch::case_ii, n, q});
    }
  std::sort(out.begin(), out.end(), witness_less);
  return out;
}

}  // namespace walldiv::cli
