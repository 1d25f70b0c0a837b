#include "walldiv/mukai.hpp"

namespace walldiv {

SurfaceContext::SurfaceContext(int epsilon, std::int64_t p, std::int64_t k) : epsilon_(epsilon), p_(p), k_(k) {
  if (epsilon != 0 && epsilon != 1) throw DomainError("epsilon must be 0 (K3) or 1 (abelian)");
  if (p < 2) throw DomainError("genus must satisfy p >= 2, got p=" + std::to_string(p));
  if (k < 2) throw DomainError("number of points must satisfy k >= 2, got k=" + std::to_string(k));
}

bool MukaiTriple::is_integral() const {
  return walldiv::is_integral(r) && walldiv::is_integral(m) && walldiv::is_integral(s);
}

LatticeVector MukaiTriple::to_lattice_vector() const {
  return {{to_integer(r), to_integer(m), to_integer(s)}};
}

MukaiTriple MukaiTriple::from_lattice_vector(const LatticeVector& v) {
  if (v.size() != 3) throw ContractViolation("Mukai model vectors have three coordinates");
  return {Rational(v.coords[0]), Rational(v.coords[1]), Rational(v.coords[2])};
}

MukaiTriple operator+(const MukaiTriple& a, const MukaiTriple& b) { return {a.r + b.r, a.m + b.m, a.s + b.s}; }
MukaiTriple operator-(const MukaiTriple& a, const MukaiTriple& b) { return {a.r - b.r, a.m - b.m, a.s - b.s}; }
MukaiTriple operator*(const Rational& c, const MukaiTriple& a) { return {c * a.r, c * a.m, c * a.s}; }

namespace {

std::string rational_text(const Rational& x) {
  return is_integral(x) ? numerator_of(x).str() : to_fraction_string(x);
}

}  // namespace

std::string to_string(const MukaiTriple& t) {
  return "(" + rational_text(t.r) + "," + rational_text(t.m) + "," + rational_text(t.s) + ")";
}

std::string to_string(const DivisorClass& d) {
  return rational_text(d.l_coeff) + "*L + " + rational_text(d.e_coeff) + "*e";
}

std::string to_string(const CurveClass& c) { return c.l_coeff.str() + "*L + " + c.r_coeff.str() + "*r"; }

GramLattice mukai_model_lattice(const SurfaceContext& ctx) {
  return GramLattice(Matrix{{0, 0, -1}, {0, ctx.polarization_square(), 0}, {-1, 0, 0}});
}

Rational mukai_pairing(const MukaiTriple& a, const MukaiTriple& b, const SurfaceContext& ctx) {
  return a.m * b.m * Rational(ctx.polarization_square()) - a.r * b.s - a.s * b.r;
}

MukaiTriple hilb_vector(const SurfaceContext& ctx) {
  return {1, 0, Rational(1 - 2 * ctx.eps() - ctx.points())};
}

MukaiTriple ek_vector(const SurfaceContext& ctx) { return {1, 0, Rational(ctx.exceptional_index())}; }

MukaiTriple embed_divisor(const DivisorClass& d, const SurfaceContext& ctx) {
  return MukaiTriple{0, d.l_coeff, 0} + d.e_coeff * ek_vector(ctx);
}

Rational bb_pairing(const DivisorClass& x, const DivisorClass& y, const SurfaceContext& ctx) {
  return x.l_coeff * y.l_coeff * Rational(ctx.polarization_square()) -
         x.e_coeff * y.e_coeff * Rational(ctx.exceptional_divisibility());
}

Rational bb_square(const DivisorClass& d, const SurfaceContext& ctx) { return bb_pairing(d, d, ctx); }

DivisorClass curve_to_divisor(const CurveClass& c, const SurfaceContext& ctx) {
  return {Rational(c.l_coeff), Rational(c.r_coeff, ctx.exceptional_divisibility())};
}

Rational bb_square(const CurveClass& c, const SurfaceContext& ctx) {
  return bb_square(curve_to_divisor(c, ctx), ctx);
}

Integer divisor_divisibility(const DivisorClass& d, const SurfaceContext& ctx) {
  const Integer a = to_integer(d.l_coeff);
  const Integer b = to_integer(d.e_coeff);
  if (a == 0 && b == 0) throw DomainError("divisibility of the zero class is undefined");
  return gcd(a, ctx.exceptional_divisibility() * b);
}

LazarsfeldMukaiVector lm_mukai_vector(const SurfaceContext& ctx, std::int64_t delta) {
  if (delta < 0) throw DomainError("number of nodes must satisfy delta >= 0");
  const Integer chi = ctx.genus() - delta - ctx.points() + 3 - 5 * ctx.eps();
  return {{2, 1, Rational(chi + 2 * (ctx.eps() - 1))}, chi};
}

Integer moduli_dim(const SurfaceContext& ctx, std::int64_t delta) {
  const Integer chi = lm_mukai_vector(ctx, delta).chi;
  const Integer dim = 2 * ctx.genus() - 4 * chi + 8 * (1 - ctx.eps());
  if (dim < 0) throw DomainError("parameters outside moduli regime (dim M = " + dim.str() + " < 0)");
  return dim;
}

}  // namespace walldiv
