#include "walldiv/brill_noether.hpp"

#include "walldiv/wall.hpp"

#include <algorithm>

namespace walldiv {

Integer bn_rho(const Integer& p, const Integer& r, const Integer& d) { return p - (r + 1) * (p - d + r); }

BNParams::BNParams(SurfaceContext ctx, std::int64_t delta) : ctx_(ctx), delta_(delta) {
  if (delta < 0 || Integer(delta) > ctx.genus() - 2 * ctx.eps()) {
    throw DomainError("number of nodes must satisfy 0 <= delta <= p - 2eps (got delta=" + std::to_string(delta) +
                      ", p=" + std::to_string(ctx.p()) + ", eps=" + std::to_string(ctx.epsilon()) + ")");
  }
}

BNParams BNParams::make(int epsilon, std::int64_t p, std::int64_t delta, std::int64_t k) {
  return BNParams(SurfaceContext(epsilon, p, k), delta);
}

Integer BNParams::alpha() const {
  return floor_div(ctx_.genus() - delta_ - ctx_.eps(), ctx_.exceptional_divisibility());
}

Integer BNParams::beta() const {
  return (2 * alpha() + 1) * ctx_.exceptional_index() - ctx_.genus() + delta_ + ctx_.eps();
}

Integer BNParams::rho_at_alpha() const {
  const Integer a = alpha();
  return bn_rho(ctx_.genus(), a, (ctx_.points() + ctx_.eps()) * a + delta_);
}

Integer BNParams::slope() const { return ctx_.genus() - delta_ + ctx_.points() - 1 + ctx_.eps(); }

bool exists_pencil(const BNParams& params) {
  const auto& ctx = params.ctx();
  const Integer a = params.alpha();
  return params.nodes() >= a * (ctx.genus() - params.nodes() - ctx.eps() - ctx.exceptional_index() * (a + 1));
}

bool exists_pencil_via_rho(const BNParams& params, std::optional<std::int64_t> l_max) {
  const auto& ctx = params.ctx();
  const Integer last = l_max ? Integer(*l_max) : params.alpha() + 2;
  for (Integer l = 0; l <= last; ++l) {
    const Integer lhs = bn_rho(ctx.genus(), l, (ctx.points() + ctx.eps()) * l + params.nodes()) +
                        ctx.eps() * l * (l + 2);
    if (lhs < 0) return false;
  }
  return true;
}

BNDimensions bn_dims(const BNParams& params) {
  if (!exists_pencil(params)) throw DomainError("no delta-nodal curve in {L} carries a pencil of this degree");
  const Integer g = params.geometric_genus();
  const Integer pencil = 2 * (params.ctx().points() - 1 + params.ctx().eps());
  return {std::min(g, pencil), std::max(Integer(0), pencil - g)};
}

CurveClass curve_class(const BNParams& params) { return {1, -params.slope()}; }

DivisorClass dual_divisor(const BNParams& params) {
  return {1, -Rational(params.slope(), params.ctx().exceptional_divisibility())};
}

CurveSquare curve_square(const BNParams& params) {
  const auto& ctx = params.ctx();
  const Integer twice_index = ctx.exceptional_divisibility();
  const Integer s = params.slope();

  CurveSquare out;
  out.value = Rational(2 * (ctx.genus() - 1)) - Rational(s * s, twice_index);
  out.alpha = params.alpha();
  out.beta = params.beta();
  out.rho = params.rho_at_alpha();
  const Integer& a = out.alpha;
  out.alternate = Rational(2 * (out.rho + ctx.eps() * a * (a + 2) + ctx.eps() - 1)) -
                  Rational(out.beta * out.beta, twice_index);
  out.forms_agree = out.value == out.alternate;
  out.minimal = out.value == mbm_bound(ctx);
  out.equality_case = ctx.genus() == a * (a + 1) * ctx.exceptional_index() + ctx.eps() &&
                      params.nodes() == a * (a - 1) * ctx.exceptional_index();
  return out;
}

bool is_wall_by_square(const BNParams& params) {
  if (!exists_pencil(params)) throw DomainError("no delta-nodal curve in {L} carries a pencil of this degree");
  return curve_square(params).value < 0;
}

}  // namespace walldiv
