#pragma once

#include <map>
#include <string>
#include <vector>

#include "kmbranch/algebra.hpp"
#include "kmbranch/kostant.hpp"
#include "kmbranch/path.hpp"
#include "kmbranch/weyl.hpp"

namespace kmbranch {

// Truncated character-like series: coefficients on exact weights, complete
// for all keys with depth_below(top, key) <= truncation_depth.
struct FormalSeries {
  Weight top;
  long long truncation_depth{0};
  std::map<Weight, long long> support;

  long long at(const Weight& w) const {
    auto it = support.find(w);
    return it == support.end() ? 0 : it->second;
  }
};

bool dominant_integral(const Basis& b, const Weight& w);

// Signed-orbit Kostant multiplicities over one basis, sharing the partition
// memo across queries.
class MultContext {
 public:
  explicit MultContext(Basis b);

  // Multiplicity of mu in the highest-weight module of lambda. The orbit box
  // coords(lambda - mu) is exact; cutoff_check re-runs with the box enlarged
  // by one in every coordinate and demands the same value.
  long long multiplicity(const Weight& lambda, const Weight& mu,
                         bool cutoff_check = false);

  const Basis& basis() const { return basis_; }

 private:
  Basis basis_;
  PartitionContext part_;
};

long long weight_multiplicity(const AffineAlgebra& g, const Weight& lambda,
                              const Weight& mu, bool cutoff_check = false);

// Character truncated at depth_below(top, key) <= depth, computed by orbit
// multiplicities; the support BFS walks down simple-root steps.
FormalSeries truncated_character(MultContext& ctx, const Weight& hw,
                                 const Weight& top, long long depth);

// Coefficient of each endpoint among the enumerated paths.
FormalSeries character_by_paths(const AffineAlgebra& g, const Weight& lambda,
                                long long depth);

// Sum of sign * e_{w(start)} over the depth-bounded signed orbit.
FormalSeries signed_orbit_series(const Basis& b, const Weight& start,
                                 long long depth);

FormalSeries series_product_truncated(const FormalSeries& a,
                                      const FormalSeries& b, long long depth);

// Numerator-vs-denominator check of the character formula on all keys of
// depth <= depth - margin.
bool verify_kac_character(const AffineAlgebra& g, const Weight& lambda,
                          long long depth, long long margin = 0);
bool verify_kac_character_with_series(const AffineAlgebra& g,
                                      const FormalSeries& ch,
                                      const Weight& lambda, long long depth,
                                      long long margin = 0);

struct BranchRow {
  Weight component;
  long long mult{0};
  std::vector<std::string> methods;
};

struct BranchTable {
  AffineAlgebra algebra;
  long long u{1};
  Weight lambda;
  long long depth{0};
  long long margin{0};
  std::vector<BranchRow> rows;  // sorted by (depth, labels lex)
  bool verified{false};
};

// Dominant-path counting.
BranchTable branch_via_paths(const AffineAlgebra& g, const Winding& w,
                             const Weight& lambda, long long depth);

// Signed double-orbit sum against the partition function, one component.
long long branch_via_steinberg(const AffineAlgebra& g, const Winding& w,
                               const Weight& lambda, const Weight& component);

// All components with positive Steinberg count up to depth.
BranchTable branch_steinberg_table(const AffineAlgebra& g, const Winding& w,
                                   const Weight& lambda, long long depth);

// Signed accumulation over every path endpoint after shifted straightening;
// rows reported within depth - margin.
BranchTable branch_signed_paths(const AffineAlgebra& g, const Winding& w,
                                const Weight& lambda, long long depth,
                                long long margin);

// Shifted straightening of one weight: returns the sign p (0 on a wall) and
// the dominant representative minus the dotted rho.
std::pair<int, Weight> straighten_component(const Basis& dotted,
                                            const Weight& mu);

// Opposite-sign partner of a non-dominant path (surgery at the first
// parameter where some dotted pairing reaches -1; lowest index on ties).
Path cancel_partner(const AffineAlgebra& g, const Winding& w, const Path& p);

// Character peeling: subtract component characters from the truncated
// character of lambda, sweeping dominant keys in (depth, finite height,
// labels) order; rows reported within depth - margin.
BranchTable peel_oracle(const AffineAlgebra& g, const Winding& w,
                        const Weight& lambda, long long depth,
                        long long margin);
BranchTable peel_from_series(const AffineAlgebra& g, const Winding& w,
                             const FormalSeries& ch, const Weight& lambda,
                             long long depth, long long margin);

}  // namespace kmbranch
