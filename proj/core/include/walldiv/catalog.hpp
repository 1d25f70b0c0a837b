#pragma once

// Catalog of the lattices T = sat<v, D_{p,delta,k}> attached to Brill-Noether
// wall divisors. Starting from the seed p = 2k-2+5eps, delta = 0 with
//
//   T = [[-2+2eps, k-1+2eps], [k-1+2eps, 2k-2+4eps]],
//
// raising delta by one adds 2 to q(w) and lowers b(w,v) by one; lowering the
// genus by one lowers b(w,v) by one. These moves reach every isometry class.

#include "walldiv/binary_form.hpp"
#include "walldiv/brill_noether.hpp"
#include "walldiv/wall.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace walldiv {

struct CatalogEntry {
  Gram2 gram;  // basis (w, v): gram.c == 2k-2+4eps
  std::int64_t p = 0;
  std::int64_t delta = 0;
  std::int64_t k = 0;
  int epsilon = 0;
  std::string isometry_class_id;
  Rational q_r;
  bool is_wall = false;
  bool verified = false;
  std::optional<MukaiTriple> witness;
  /// Empty for verified walls; otherwise why the entry is not a verified wall.
  std::string note;
};

/// Unverified entry at the seed point (gram, p = 2k-2+5eps, delta = 0).
CatalogEntry seed_lattice(std::int64_t k, int epsilon);

/// (p, delta) -> (p, delta + 1); nullopt if the result leaves the admissible region.
std::optional<CatalogEntry> delta_move(const CatalogEntry& entry);
/// (p, delta) -> (p - 1, delta); nullopt if the result leaves the admissible region.
std::optional<CatalogEntry> genus_move(const CatalogEntry& entry);

/// p >= 2, 0 <= delta <= p - 2eps and a pencil exists.
bool admissible(std::int64_t p, std::int64_t delta, std::int64_t k, int epsilon);

/// Gram of sat<v, D_{p,delta,k}> predicted by the moves:
/// [[2delta-2+2eps, p-delta-k+1-3eps], [., 2k-2+4eps]].
Gram2 predicted_gram(std::int64_t p, std::int64_t delta, std::int64_t k, int epsilon);

/// Runs the wall engine on R_{p,delta,k} and fills is_wall / verified / witness / note.
void verify_entry(CatalogEntry& entry);

struct CatalogRange {
  std::int64_t k;
  int epsilon;
  std::int64_t p_min;
  std::int64_t p_max;
  std::int64_t delta_max;
};

/// Every admissible (p, delta) reachable from the seed, verified and
/// deduplicated by isometry class (first occurrence in (p desc, delta asc)
/// order wins). Classes of degenerate or definite T are keyed separately.
std::vector<CatalogEntry> generate_catalog(const CatalogRange& range);

/// Undo the moves: delta from the top-left entry, p from the off-diagonal.
/// Returns nullopt when the data leaves the admissible region or the
/// reconstructed T is not isometric to target. Throws DomainError if the
/// bottom-right entry is not 2k-2+4eps or a diagonal entry is odd.
struct Realization {
  std::int64_t p;
  std::int64_t delta;
};
std::optional<Realization> realize_gram(const Gram2& target, std::int64_t k, int epsilon);

/// isometry_class_id extended to degenerate Grams: "degenerate:<l>" where the
/// form is l * (linear form)^2, l = sign(a + c) gcd(a, b, c).
std::string lattice_class_id(const Gram2& g);

/// The isometry classification coincides with the monodromy classification
/// when k-1+2eps is a prime power.
bool classification_is_complete(std::int64_t k, int epsilon);

/// One JSON object per line: epsilon, k, p, delta, gram, q_R, is_wall, witness, isometry_class_id.
std::string catalog_json_line(const CatalogEntry& entry);
void write_catalog(std::ostream& os, const std::vector<CatalogEntry>& entries);

}  // namespace walldiv
