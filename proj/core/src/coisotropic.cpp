#include "walldiv/coisotropic.hpp"

#include "walldiv/brill_noether.hpp"
#include "walldiv/wall.hpp"

#include <algorithm>

namespace walldiv {

std::string to_string(SubvarietySource s) {
  switch (s) {
    case SubvarietySource::thm_projbundle: return "thm_projbundle";
    case SubvarietySource::thm_severi_family: return "thm_severi_family";
    case SubvarietySource::thm_symprod: return "thm_symprod";
  }
  return "unknown";
}

namespace {

SubvarietyDescriptor describe(SubvarietySource src, const SurfaceContext& ctx, std::int64_t r, std::int64_t base,
                              const Integer& coeff) {
  SubvarietyDescriptor d;
  d.source = src;
  d.codim = r;
  d.fiber_dim = r;
  d.base_dim = base;
  d.total_dim = 2 * ctx.k() - r;
  d.line_class = {1, -coeff};
  d.p = ctx.p();
  d.k = ctx.k();
  d.epsilon = ctx.epsilon();
  d.q_line = bb_square(d.line_class, ctx);
  return d;
}

}  // namespace

Integer projbundle_chi(std::int64_t p, std::int64_t delta, std::int64_t k, int epsilon) {
  return Integer(p) - delta - k + 3 - 5 * epsilon;
}

bool projbundle_bound(std::int64_t p, std::int64_t delta, std::int64_t k, int epsilon) {
  const Integer chi = projbundle_chi(p, delta, k, epsilon);
  return chi >= std::max<std::int64_t>(2 * delta + 2, 4 * epsilon) && chi <= delta + k + 1;
}

std::optional<SubvarietyDescriptor> thm61_descriptor(std::int64_t p, std::int64_t delta, std::int64_t k,
                                                     int epsilon) {
  const BNParams params = BNParams::make(epsilon, p, delta, k);
  if (!projbundle_bound(p, delta, k, epsilon)) return std::nullopt;
  const std::int64_t chi = to_int64(projbundle_chi(p, delta, k, epsilon));
  SubvarietyDescriptor d = describe(SubvarietySource::thm_projbundle, params.ctx(), chi - 2 * delta - 1,
                                    2 * (k + 1 + 2 * delta - chi), params.slope());
  d.delta = delta;
  return d;
}

std::vector<SeveriFamilyPoint> thm63_enumerate(std::int64_t p, std::int64_t k, int epsilon) {
  const SurfaceContext ctx(epsilon, p, k);
  const std::int64_t pe = p - 5 * epsilon;
  // r <= 2k - 5 - pe/2 and r <= pe/2 + 1
  const Rational r_hi = std::min(Rational(2 * k - 5) - Rational(pe, 2), Rational(pe, 2) + 1);
  std::vector<SeveriFamilyPoint> out;
  for (std::int64_t r = 1; Rational(r) <= r_hi; ++r) {
    if (epsilon == 1 && r == 1 && p < 9) continue;
    if (epsilon == 1 && r == 2 && p < 11) continue;
    std::int64_t d_lo = std::max<std::int64_t>(0, to_int64(ceil_div(Integer(pe + 2 - r - k), 3)));
    if (epsilon == 1 && r <= 2) d_lo = std::max<std::int64_t>(d_lo, 1);
    const std::int64_t d_hi = to_int64(floor_div(Integer(pe + 2 - 2 * r), 4));
    for (std::int64_t delta = d_lo; delta <= d_hi; ++delta) {
      const std::int64_t k_prime = pe - 3 * delta + 2 - r;
      SubvarietyDescriptor d = describe(SubvarietySource::thm_severi_family, ctx, r, 2 * (k - r),
                                        Integer(2 * (p - 2 * delta - 2 * epsilon) - r + 1));
      d.delta = delta;
      d.k_prime = k_prime;
      out.push_back({r, delta, k_prime, d});
    }
  }
  return out;
}

std::vector<SymprodPoint> thm64_enumerate(std::int64_t p, std::int64_t k, int epsilon) {
  const SurfaceContext ctx(epsilon, p, k);
  std::vector<SymprodPoint> out;
  for (std::int64_t r = 1; r <= k - epsilon; ++r) {
    const std::int64_t kp_hi = std::min(k, p + r - epsilon);
    for (std::int64_t kp = r + epsilon; kp <= kp_hi; ++kp) {
      SubvarietyDescriptor d =
          describe(SubvarietySource::thm_symprod, ctx, r, 2 * (k - r), Integer(2 * (kp + epsilon) - r - 1));
      d.k_prime = kp;
      out.push_back({r, kp, d});
    }
  }
  return out;
}

LagrangianPlane lagrangian_plane_params(std::int64_t k, int epsilon) {
  const std::int64_t p = 2 * (k - 1) + 5 * epsilon;
  const BNParams params = BNParams::make(epsilon, p, 0, k);
  const SurfaceContext& ctx = params.ctx();

  LagrangianPlane out{p, 0, describe(SubvarietySource::thm_projbundle, ctx, k, 0, params.slope()),
                      projbundle_chi(p, 0, k, epsilon), projbundle_bound(p, 0, k, epsilon),
                      moduli_dim(ctx, 0), false};
  out.descriptor.delta = 0;
  out.line_is_minimal = out.descriptor.q_line == mbm_bound(ctx);
  return out;
}

}  // namespace walldiv
