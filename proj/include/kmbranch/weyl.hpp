#pragma once

#include <optional>
#include <vector>

#include "kmbranch/algebra.hpp"

namespace kmbranch {

Weight reflect(const Basis& b, int i, const Weight& w);

struct Straightened {
  Weight dominant;
  int sign{1};       // (-1)^length, or 0 when the orbit is flagged non-regular
  long long length{0};
};

// Greedy descent to the dominant chamber (lowest negative index first).
// sign is 0 exactly when the dominant representative has a zero label at an
// index that was reflected on the way; callers computing the regularized
// p(mu) bookkeeping should pass a rho-shifted weight instead of relying on
// this flag. Level <= 0 inputs outside the Tits cone cycle forever, so the
// walk gives up after step_budget reflections.
Straightened to_dominant_signed(const Basis& b, const Weight& w,
                                long long step_budget = 100000);

struct OrbitPoint {
  Weight weight;
  RatVec drop;  // root coordinates of start - weight; componentwise >= 0
  long long length{0};
  int sign{1};
  std::optional<int> parent_edge;  // reflection leading here from the parent
};

// Weyl images v = w(start) with start - v inside the coordinate box
// 0 <= drop <= budget, for strictly dominant start. Monotone descent makes
// the box pruning lossless. Sorted by (length, drop lexicographic).
std::vector<OrbitPoint> signed_orbit_in_box(const Basis& b, const Weight& start,
                                            const RatVec& budget);

// Same walk bounded only in the direction of roots[0]: drop[0] <= max_depth.
// Finite for strictly dominant start of positive level.
std::vector<OrbitPoint> signed_orbit_to_depth(const Basis& b,
                                              const Weight& start,
                                              const Rat& max_depth);

}  // namespace kmbranch
