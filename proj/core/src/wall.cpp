#include "walldiv/wall.hpp"

#include <algorithm>
#include <tuple>

namespace walldiv {

std::string to_string(WitnessBranch b) { return b == WitnessBranch::case_i ? "case_i" : "case_ii"; }

ScaledDivisor primitive_divisor(const DivisorClass& d, const SurfaceContext&) {
  if (d.l_coeff == 0 && d.e_coeff == 0) throw DomainError("the zero class has no primitive representative");
  const Integer den = lcm(denominator_of(d.l_coeff), denominator_of(d.e_coeff));
  const Integer a = to_integer(d.l_coeff * Rational(den));
  const Integer b = to_integer(d.e_coeff * Rational(den));
  const Integer g = gcd(a, b);
  return {{Rational(a / g), Rational(b / g)}, Rational(den, g)};
}

PrimitiveDual primitive_dual_divisor(const CurveClass& r, const SurfaceContext& ctx) {
  if (r.is_zero()) throw DomainError("primitive dual of the zero curve class is undefined");
  ScaledDivisor sd = primitive_divisor(curve_to_divisor(r, ctx), ctx);
  const Integer div = divisor_divisibility(sd.divisor, ctx);
  // R = D_rat = D / multiplier = (div / multiplier) * (D / div)
  return {sd.divisor, div, to_integer(Rational(div) / sd.multiplier)};
}

namespace {

// Coordinates of x in the rational span of {t0, t1}; throws if x is not an
// integral combination.
std::array<Integer, 2> coordinates_in(const LatticeVector& x, const LatticeVector& t0, const LatticeVector& t1) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const Integer det = t0.coords[i] * t1.coords[j] - t1.coords[i] * t0.coords[j];
      if (det == 0) continue;
      const Integer num0 = x.coords[i] * t1.coords[j] - t1.coords[i] * x.coords[j];
      const Integer num1 = t0.coords[i] * x.coords[j] - x.coords[i] * t0.coords[j];
      if (num0 % det != 0 || num1 % det != 0) break;
      std::array<Integer, 2> c{num0 / det, num1 / det};
      if ((c[0] * t0 + c[1] * t1) == x) return c;
      break;
    }
  throw ContractViolation("vector is not an integral combination of the given basis");
}

Integer gram_pairing(const Gram2& g, const std::array<Integer, 2>& x, const std::array<Integer, 2>& y) {
  return g.a * x[0] * y[0] + g.b * (x[0] * y[1] + x[1] * y[0]) + g.c * x[1] * y[1];
}

}  // namespace

SaturatedLattice saturated_T(const DivisorClass& d, const SurfaceContext& ctx) {
  if (!d.is_integral()) throw ContractViolation("saturated_T expects an integral divisor class");
  if (bb_square(d, ctx) >= 0) throw DomainError("criterion applies only to negative classes (q(D) < 0)");
  return saturate_with_v(d, ctx);
}

SaturatedLattice saturate_with_v(const DivisorClass& d, const SurfaceContext& ctx) {
  if (!d.is_integral()) throw ContractViolation("saturate_with_v expects an integral divisor class");

  const GramLattice ambient = mukai_model_lattice(ctx);
  const LatticeVector v = hilb_vector(ctx).to_lattice_vector();
  const LatticeVector dv = embed_divisor(d, ctx).to_lattice_vector();
  const Sublattice span{ambient, {v, dv}};
  const Sublattice sat = saturate(span);

  // v is primitive (first coordinate 1), so it extends to a basis (w, v) of T.
  const std::array<Integer, 2> vc = coordinates_in(v, sat.basis[0], sat.basis[1]);
  const ExtendedGcd eg = extended_gcd(vc[0], vc[1]);
  LatticeVector w = (-eg.y) * sat.basis[0] + eg.x * sat.basis[1];

  const Integer qv = norm(v, ambient);
  Integer bwv = inner(w, v, ambient);
  w = w - floor_div(bwv, qv) * v;
  bwv = inner(w, v, ambient);
  if (2 * bwv > qv) {
    w = v - w;
    bwv = inner(w, v, ambient);
  }
  return {{norm(w, ambient), bwv, qv}, {w, v}, {0, 1}, saturation_index(span)};
}

bool witness_less(const WitnessCandidate& x, const WitnessCandidate& y) {
  return std::tie(x.branch, x.pairing_with_v, x.square, x.coords) <
         std::tie(y.branch, y.pairing_with_v, y.square, y.coords);
}

std::vector<WitnessCandidate> enumerate_witnesses(const Gram2& t_gram, const std::array<Integer, 2>& v_coords,
                                                  int epsilon) {
  const Integer qv = gram_pairing(t_gram, v_coords, v_coords);
  if (t_gram.determinant() >= 0 || qv <= 0) {
    throw DomainError("witness enumeration needs T of signature (1,1) with q(v) > 0");
  }
  // b(s, v) = lambda . s
  const Integer l0 = t_gram.a * v_coords[0] + t_gram.b * v_coords[1];
  const Integer l1 = t_gram.b * v_coords[0] + t_gram.c * v_coords[1];
  const ExtendedGcd eg = extended_gcd(l0, l1);
  const std::array<Integer, 2> dir{l1 / eg.g, -l0 / eg.g};
  const Integer q_dir = gram_pairing(t_gram, dir, dir);
  if (q_dir >= 0) throw DomainError("orthogonal complement of v in T is not negative definite");
  const Integer lead = -q_dir;

  std::vector<WitnessCandidate> out;
  // Visit every s on the line b(s,v) = n with q(s) >= floor_q, keep those passing accept.
  auto scan_line = [&](const Integer& n, const Integer& floor_q, WitnessBranch branch, auto accept) {
    if (n % eg.g != 0) return;
    const Integer f = n / eg.g;
    const std::array<Integer, 2> base{f * eg.x, f * eg.y};
    const Integer lin = 2 * gram_pairing(t_gram, base, dir);
    const Integer cst = gram_pairing(t_gram, base, base);
    // q(base + t dir) >= floor_q  <=>  lead t^2 - lin t + (floor_q - cst) <= 0
    const Integer disc = lin * lin - 4 * lead * (floor_q - cst);
    if (disc < 0) return;
    const Integer root = isqrt(disc);
    const Integer t_lo = floor_div(lin - root - 1, 2 * lead);
    const Integer t_hi = floor_div(lin + root + 1, 2 * lead);
    for (Integer t = t_lo; t <= t_hi; ++t) {
      const std::array<Integer, 2> s{base[0] + t * dir[0], base[1] + t * dir[1]};
      const Integer qs = gram_pairing(t_gram, s, s);
      if (accept(qs)) out.push_back({s, branch, n, qs});
    }
  };

  for (Integer n = 1; n < qv; ++n) {
    const Integer floor_q = std::max(Integer(0), 2 * n - qv);
    scan_line(n, floor_q, WitnessBranch::case_i,
              [&](const Integer& qs) { return 0 <= qs && qs < n && 2 * n <= qv + qs; });
  }
  if (epsilon == 0) {
    for (Integer n = 0; 2 * n <= qv; ++n) {
      scan_line(n, Integer(-2), WitnessBranch::case_ii, [](const Integer& qs) { return qs == -2; });
    }
  }
  std::sort(out.begin(), out.end(), witness_less);
  return out;
}

namespace {

WallVerdict verdict_for(const DivisorClass& primitive, const SurfaceContext& ctx) {
  WallVerdict verdict;
  verdict.primitive_d = primitive;
  verdict.divisor_div = divisor_divisibility(primitive, ctx);
  if (bb_square(primitive, ctx) >= 0) {
    verdict.status = "nonnegative-square";
    return verdict;
  }
  SaturatedLattice t = saturated_T(primitive, ctx);
  verdict.t_gram = t.gram;
  std::vector<WitnessCandidate> ws = enumerate_witnesses(t.gram, t.v_coords, ctx.epsilon());
  if (!ws.empty()) {
    const WitnessCandidate& first = ws.front();
    const LatticeVector s = first.coords[0] * t.basis[0] + first.coords[1] * t.basis[1];
    verdict.is_wall = true;
    verdict.status = "wall";
    verdict.witness = Witness{first, MukaiTriple::from_lattice_vector(s)};
    verdict.branch = first.branch;
  } else {
    verdict.status = "no-witness";
  }
  verdict.t_lattice = std::move(t);
  return verdict;
}

}  // namespace

WallVerdict wall_test(const CurveClass& r, const SurfaceContext& ctx) {
  PrimitiveDual pd = primitive_dual_divisor(r, ctx);
  WallVerdict verdict = verdict_for(pd.divisor, ctx);
  verdict.scale = Rational(pd.scale);
  verdict.input_square = bb_square(r, ctx);
  return verdict;
}

WallVerdict wall_test(const DivisorClass& d, const SurfaceContext& ctx) {
  ScaledDivisor sd = primitive_divisor(d, ctx);
  WallVerdict verdict = verdict_for(sd.divisor, ctx);
  verdict.scale = sd.multiplier;
  verdict.input_square = bb_square(d, ctx);
  return verdict;
}

Rational mbm_bound(const SurfaceContext& ctx) {
  return Rational(-(ctx.points() + 3 - 2 * ctx.eps()), 2);
}

bool mbm_bound_check(const CurveClass& r, const SurfaceContext& ctx) { return bb_square(r, ctx) >= mbm_bound(ctx); }

}  // namespace walldiv
