#pragma once

#include <optional>
#include <set>
#include <vector>

#include "kmbranch/algebra.hpp"

namespace kmbranch {

// A piecewise-linear path from 0, identified up to reparametrization by its
// canonical segment sequence: no zero segments, no two consecutive segments
// positively proportional.
struct Path {
  std::vector<Weight> segments;

  bool empty() const { return segments.empty(); }
  bool operator==(const Path& o) const { return segments == o.segments; }
  bool operator!=(const Path& o) const { return !(*this == o); }
  bool operator<(const Path& o) const { return segments < o.segments; }
};

Path canonical_path(std::vector<Weight> segments);
Path straight_path(const Weight& lambda);
Weight path_endpoint(const AffineAlgebra& g, const Path& p);
// Partial sums b_1..b_r (the origin b_0 = 0 is implicit).
std::vector<Weight> path_breakpoints(const Path& p);

Path concat(const Path& a, const Path& b);
Path reflect_path(const Basis& basis, int i, const Path& p);

// Values of <., coroot_i> at the breakpoints, h[0] = 0.
RatVec h_profile(const Basis& basis, int i, const Path& p);

// Earliest path parameter (in [0, #segments]) where <path(t), coroot_i>
// equals target, if any.
std::optional<Rat> first_profile_hit(const Basis& basis, int i, const Path& p,
                                     const Rat& target);

// Root operators: lower/raise the endpoint by roots[i], or null at the end
// of the string.
std::optional<Path> f_op(const Basis& basis, int i, const Path& p);
std::optional<Path> e_op(const Basis& basis, int i, const Path& p);

// All paths reachable from the straight path by f-operators whose endpoint
// stays within max_depth (the alpha_0-coordinate of lambda minus endpoint).
std::set<Path> enumerate_ls_paths(const AffineAlgebra& g, const Weight& lambda,
                                  long long max_depth);

// True when the whole image lies in the dominant chamber of the winding
// subalgebra; convexity reduces this to the breakpoints.
bool is_dominant_path(const Winding& w, const Path& p);

}  // namespace kmbranch
