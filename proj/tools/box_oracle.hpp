#pragma once

// Brute-force witness search over a box in T, used by `wall-test --oracle`
// and `scan --check oracle`. Deliberately naive.

#include "walldiv/wall.hpp"

#include <vector>

namespace walldiv::cli {

/// T in a basis (w, v) with v the second vector. Every s with q(s) >= -2 and
/// 0 <= b(s, v) <= q(v) lies in |x| <= X, |y| <= Y; both radii are doubled.
std::vector<WitnessCandidate> box_witnesses(const Gram2& t, int epsilon);

}  // namespace walldiv::cli
