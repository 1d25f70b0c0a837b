#include "walldiv/binary_form.hpp"

#include <utility>
#include <vector>

namespace walldiv {

Gram2 Gram2::from_matrix(const Matrix& m) {
  if (m.rows() != 2 || m.cols() != 2 || !m.is_symmetric()) {
    throw ContractViolation("expected a symmetric 2x2 Gram matrix");
  }
  return {m(0, 0), m(0, 1), m(1, 1)};
}

std::string to_string(const Gram2& g) {
  return "[[" + g.a.str() + "," + g.b.str() + "],[" + g.b.str() + "," + g.c.str() + "]]";
}

Transform2 operator*(const Transform2& x, const Transform2& y) {
  return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
          x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

Gram2 apply(const Gram2& g, const Transform2& p) {
  return {g.a * p.m00 * p.m00 + 2 * g.b * p.m00 * p.m10 + g.c * p.m10 * p.m10,
          g.a * p.m00 * p.m01 + g.b * (p.m00 * p.m11 + p.m01 * p.m10) + g.c * p.m10 * p.m11,
          g.a * p.m01 * p.m01 + 2 * g.b * p.m01 * p.m11 + g.c * p.m11 * p.m11};
}

Transform2 inverse(const Transform2& p) {
  const Integer det = p.determinant();
  if (det != 1 && det != -1) throw ContractViolation("inverse: transform is not unimodular");
  return {p.m11 * det, -p.m01 * det, -p.m10 * det, p.m00 * det};
}

namespace {

const Transform2 kSwap{0, -1, 1, 0};
const Transform2 kMirror{1, 0, 0, -1};

Transform2 shear(const Integer& t) { return {1, t, 0, 1}; }

struct Tracked {
  Gram2 gram;
  Transform2 transform;  // gram == apply(original, transform)

  void step(const Transform2& n) {
    gram = apply(gram, n);
    transform = transform * n;
  }
};

// Gauss reduction of a positive definite form.
Tracked reduce_positive(Tracked cur) {
  for (;;) {
    Integer t = floor_div(cur.gram.a - 2 * cur.gram.b, 2 * cur.gram.a);
    if (t != 0) cur.step(shear(t));
    if (cur.gram.a > cur.gram.c) {
      cur.step(kSwap);
      continue;
    }
    break;
  }
  if (cur.gram.a == cur.gram.c && cur.gram.b < 0) cur.step(kSwap);
  if (cur.gram.b < 0) cur.step(kMirror);
  return cur;
}

// Reduction in the sense of Gauss for indefinite forms with -det not a square.
class IndefiniteReducer {
 public:
  explicit IndefiniteReducer(const Integer& minus_det) : minus_det_(minus_det), root_floor_(isqrt(minus_det)) {
    // Every reduced form has 0 < b <= s and |a| < 2s + 1, which bounds the cycle length.
    max_steps_ = 8 * (root_floor_ + 1) * (root_floor_ + 1) + 64;
  }

  bool reduced(const Gram2& g) const {
    const Integer& s = root_floor_;
    const Integer abs_a = abs(g.a);
    return g.b > 0 && g.b <= s && abs_a + g.b >= s + 1 && abs_a - g.b <= s;
  }

  void rho(Tracked& cur) const {
    const Integer& b = cur.gram.b;
    const Integer& c = cur.gram.c;
    const Integer abs_c = abs(c);
    Integer target;
    // |c| > 2 sqrt(m): centred residue; otherwise b' in (s - |c|, s]
    if (abs_c * abs_c > 4 * minus_det_) {
      target = mod_floor(-b, abs_c);
      if (2 * target > abs_c) target -= abs_c;
    } else {
      target = root_floor_ - mod_floor(root_floor_ + b, abs_c);
    }
    const Integer t = (target + b) / c;
    cur.step(Transform2{0, -1, 1, t});
  }

  Tracked reduce(Tracked cur) const {
    Integer steps = 0;
    while (!reduced(cur.gram)) {
      rho(cur);
      if (++steps > max_steps_) throw DomainError("indefinite reduction did not terminate");
    }
    return cur;
  }

  std::vector<Tracked> cycle(const Tracked& start) const {
    std::vector<Tracked> out{start};
    Tracked cur = start;
    for (;;) {
      rho(cur);
      if (cur.gram == start.gram) break;
      out.push_back(cur);
      if (Integer(out.size()) > max_steps_) throw DomainError("reduced cycle exceeds its length bound");
    }
    return out;
  }

 private:
  Integer minus_det_;
  Integer root_floor_;
  Integer max_steps_;
};

Tracked least_in_cycles(const Gram2& g, const Integer& minus_det) {
  IndefiniteReducer reducer(minus_det);
  std::optional<Tracked> best;
  for (const Transform2& start : {Transform2{}, kMirror}) {
    Tracked t{apply(g, start), start};
    for (const Tracked& f : reducer.cycle(reducer.reduce(t))) {
      if (!best || f.gram < best->gram) best = f;
    }
  }
  return *best;
}

// Forms representing zero: move a primitive isotropic vector to e1, then
// normalise c modulo 2n.
Tracked zero_divisor_normal(const Gram2& g, const Integer& n) {
  std::vector<std::pair<Integer, Integer>> zeros;
  if (g.a == 0) {
    zeros.emplace_back(1, 0);
    zeros.emplace_back(-g.c, 2 * g.b);
  } else {
    zeros.emplace_back(-g.b + n, g.a);
    zeros.emplace_back(-g.b - n, g.a);
  }
  for (auto [x, y] : zeros) {
    Integer d = gcd(x, y);
    x /= d;
    y /= d;
    ExtendedGcd eg = extended_gcd(x, y);
    Tracked cur{g, {}};
    cur.step(Transform2{x, -eg.y, y, eg.x});
    if (cur.gram.b != n) continue;
    cur.step(shear(-floor_div(cur.gram.c, 2 * n)));
    return cur;
  }
  throw DomainError("zero-divisor normalisation failed for " + to_string(g));
}

}  // namespace

CanonicalForm canonical_form(const Gram2& g) {
  const Integer det = g.determinant();
  if (det == 0) throw DomainError("degenerate rank-2 lattice " + to_string(g));

  if (det > 0) {
    const bool negative = g.a < 0;
    Gram2 pos = negative ? Gram2{-g.a, -g.b, -g.c} : g;
    Tracked r = reduce_positive({pos, {}});
    Gram2 rep = negative ? Gram2{-r.gram.a, -r.gram.b, -r.gram.c} : r.gram;
    return {negative ? FormKind::negative_definite : FormKind::positive_definite, rep, r.transform};
  }

  const Integer minus_det = -det;
  if (is_square(minus_det)) {
    const Integer n = isqrt(minus_det);
    Tracked direct = zero_divisor_normal(g, n);
    Tracked mirrored = zero_divisor_normal(apply(g, kMirror), n);
    mirrored.transform = kMirror * mirrored.transform;
    const Tracked& best = mirrored.gram < direct.gram ? mirrored : direct;
    return {FormKind::zero_divisor, best.gram, best.transform};
  }

  Tracked best = least_in_cycles(g, minus_det);
  return {FormKind::indefinite, best.gram, best.transform};
}

std::string isometry_class_id(const Gram2& g) {
  CanonicalForm cf = canonical_form(g);
  const char* prefix = "";
  switch (cf.kind) {
    case FormKind::positive_definite: prefix = "pos:"; break;
    case FormKind::negative_definite: prefix = "neg:"; break;
    case FormKind::indefinite: prefix = "indef:"; break;
    case FormKind::zero_divisor: prefix = "zero:"; break;
  }
  return prefix + to_string(cf.representative);
}

std::optional<Transform2> find_isometry(const Gram2& g1, const Gram2& g2) {
  CanonicalForm c1 = canonical_form(g1);
  CanonicalForm c2 = canonical_form(g2);
  if (c1.kind != c2.kind || c1.representative != c2.representative) return std::nullopt;
  return c1.to_representative * inverse(c2.to_representative);
}

bool rank2_isometric(const Gram2& g1, const Gram2& g2) { return find_isometry(g1, g2).has_value(); }

bool rank2_isometric(const Matrix& g1, const Matrix& g2) {
  return rank2_isometric(Gram2::from_matrix(g1), Gram2::from_matrix(g2));
}

}  // namespace walldiv
