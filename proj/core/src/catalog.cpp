#include "walldiv/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <queue>
#include <set>
#include <utility>

namespace walldiv {

namespace {

Integer corner(std::int64_t k, int epsilon) { return 2 * (Integer(k) - 1 + 2 * epsilon); }

CatalogEntry make_entry(std::int64_t p, std::int64_t delta, std::int64_t k, int epsilon, const Gram2& gram) {
  CatalogEntry e;
  e.gram = gram;
  e.p = p;
  e.delta = delta;
  e.k = k;
  e.epsilon = epsilon;
  e.isometry_class_id = lattice_class_id(gram);
  return e;
}

}  // namespace

std::string lattice_class_id(const Gram2& g) {
  if (g.determinant() != 0) return isometry_class_id(g);
  Integer lam = gcd(gcd(g.a, g.b), g.c);
  if (g.a + g.c < 0) lam = -lam;
  return "degenerate:" + lam.str();
}

CatalogEntry seed_lattice(std::int64_t k, int epsilon) {
  const SurfaceContext ctx(epsilon, 2 * k - 2 + 5 * epsilon, k);
  const Integer c = ctx.exceptional_index();
  return make_entry(ctx.p(), 0, k, epsilon, {Integer(-2 + 2 * epsilon), c, 2 * c});
}

bool admissible(std::int64_t p, std::int64_t delta, std::int64_t k, int epsilon) {
  if (p < 2 || k < 2 || (epsilon != 0 && epsilon != 1)) return false;
  if (delta < 0 || delta > p - 2 * epsilon) return false;
  return exists_pencil(BNParams::make(epsilon, p, delta, k));
}

std::optional<CatalogEntry> delta_move(const CatalogEntry& entry) {
  if (!admissible(entry.p, entry.delta + 1, entry.k, entry.epsilon)) return std::nullopt;
  return make_entry(entry.p, entry.delta + 1, entry.k, entry.epsilon,
                    {entry.gram.a + 2, entry.gram.b - 1, entry.gram.c});
}

std::optional<CatalogEntry> genus_move(const CatalogEntry& entry) {
  if (!admissible(entry.p - 1, entry.delta, entry.k, entry.epsilon)) return std::nullopt;
  return make_entry(entry.p - 1, entry.delta, entry.k, entry.epsilon, {entry.gram.a, entry.gram.b - 1, entry.gram.c});
}

Gram2 predicted_gram(std::int64_t p, std::int64_t delta, std::int64_t k, int epsilon) {
  return {Integer(2 * delta - 2 + 2 * epsilon), Integer(p - delta - k + 1 - 3 * epsilon), corner(k, epsilon)};
}

void verify_entry(CatalogEntry& entry) {
  entry.is_wall = false;
  entry.verified = false;
  entry.witness.reset();
  entry.isometry_class_id = lattice_class_id(entry.gram);
  if (!admissible(entry.p, entry.delta, entry.k, entry.epsilon)) {
    entry.note = "outside the admissible (p, delta) region";
    return;
  }
  const BNParams params = BNParams::make(entry.epsilon, entry.p, entry.delta, entry.k);
  entry.q_r = curve_square(params).value;
  if (entry.q_r >= 0) {
    entry.note = "not a wall (square >= 0)";
    return;
  }
  const WallVerdict verdict = wall_test(curve_class(params), params.ctx());
  entry.is_wall = verdict.is_wall;
  if (verdict.witness) entry.witness = verdict.witness->ambient;
  if (!verdict.is_wall) {
    entry.note = "no witness in T";
    return;
  }
  if (!rank2_isometric(*verdict.t_gram, entry.gram)) {
    entry.note = "reconstructed T " + to_string(*verdict.t_gram) + " not isometric to stored Gram";
    return;
  }
  entry.verified = true;
  entry.note.clear();
}

std::vector<CatalogEntry> generate_catalog(const CatalogRange& range) {
  if (range.k < 2) throw DomainError("k must be >= 2");
  if (range.epsilon != 0 && range.epsilon != 1) throw DomainError("epsilon must be 0 or 1");
  if (range.p_min > range.p_max) throw DomainError("empty p range (p_min > p_max)");
  if (range.delta_max < 0) throw DomainError("delta_max must be >= 0");

  // Traverse everything reachable from the seed inside the box, then emit in
  // (p desc, delta asc) order.
  const CatalogEntry seed = seed_lattice(range.k, range.epsilon);
  auto in_box = [&](const CatalogEntry& e) { return e.p >= range.p_min && e.delta <= range.delta_max; };
  std::vector<CatalogEntry> reached;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::queue<CatalogEntry> todo;
  if (in_box(seed)) {
    todo.push(seed);
    seen.insert({seed.p, seed.delta});
  }
  while (!todo.empty()) {
    CatalogEntry cur = std::move(todo.front());
    todo.pop();
    for (auto next : {delta_move(cur), genus_move(cur)}) {
      if (next && in_box(*next) && seen.insert({next->p, next->delta}).second) todo.push(*next);
    }
    if (cur.p <= range.p_max) reached.push_back(std::move(cur));
  }
  std::sort(reached.begin(), reached.end(), [](const CatalogEntry& x, const CatalogEntry& y) {
    return x.p != y.p ? x.p > y.p : x.delta < y.delta;
  });

  std::vector<CatalogEntry> out;
  std::set<std::string> classes;
  for (CatalogEntry& e : reached) {
    if (!classes.insert(e.isometry_class_id).second) continue;
    verify_entry(e);
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<Realization> realize_gram(const Gram2& target, std::int64_t k, int epsilon) {
  if (k < 2) throw DomainError("k must be >= 2");
  if (epsilon != 0 && epsilon != 1) throw DomainError("epsilon must be 0 or 1");
  if (target.c != corner(k, epsilon)) {
    throw DomainError("bottom-right entry must be 2k-2+4eps = " + corner(k, epsilon).str());
  }
  if (target.a % 2 != 0 || target.c % 2 != 0) throw DomainError("Gram must be even (odd diagonal entry)");

  const Integer delta = (target.a + 2 - 2 * epsilon) / 2;
  if (delta < 0) return std::nullopt;
  // b(w, v) = p - delta - k + 1 - 3eps; the sign of b is only fixed up to isometry.
  for (const Integer& b : {target.b, Integer(-target.b)}) {
    const Integer p = b + delta + k - 1 + 3 * epsilon;
    if (p < 2) continue;
    const std::int64_t pi = to_int64(p);
    const std::int64_t di = to_int64(delta);
    if (!admissible(pi, di, k, epsilon)) continue;
    const BNParams params = BNParams::make(epsilon, pi, di, k);
    const SurfaceContext& ctx = params.ctx();
    const SaturatedLattice t = saturate_with_v(primitive_dual_divisor(curve_class(params), ctx).divisor, ctx);
    if (lattice_class_id(t.gram) == lattice_class_id(target)) return Realization{pi, di};
  }
  return std::nullopt;
}

bool classification_is_complete(std::int64_t k, int epsilon) {
  // k - 1 + 2eps = 1 counts as q^0.
  std::int64_t n = k - 1 + 2 * epsilon;
  if (n <= 1) return true;
  std::int64_t f = 2;
  while (f * f <= n && n % f != 0) ++f;
  if (n % f != 0) return true;
  while (n % f == 0) n /= f;
  return n == 1;
}

std::string catalog_json_line(const CatalogEntry& entry) {
  nlohmann::ordered_json j;
  j["epsilon"] = entry.epsilon;
  j["k"] = entry.k;
  j["p"] = entry.p;
  j["delta"] = entry.delta;
  const auto& g = entry.gram;
  j["gram"] = {to_int64(g.a), to_int64(g.b), to_int64(g.b), to_int64(g.c)};
  j["q_R"] = to_fraction_string(entry.q_r);
  j["is_wall"] = entry.is_wall;
  if (entry.witness) {
    const MukaiTriple& w = *entry.witness;
    j["witness"] = {to_int64(to_integer(w.r)), to_int64(to_integer(w.m)), to_int64(to_integer(w.s))};
  } else {
    j["witness"] = nullptr;
  }
  j["isometry_class_id"] = entry.isometry_class_id;
  return j.dump();
}

void write_catalog(std::ostream& os, const std::vector<CatalogEntry>& entries) {
  for (const auto& e : entries) os << catalog_json_line(e) << '\n';
}

}  // namespace walldiv
