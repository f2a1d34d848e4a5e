#pragma once

#include <functional>
#include <map>
#include <vector>

#include "kmbranch/algebra.hpp"

namespace kmbranch {

struct RootWithMult {
  Weight root;
  RatVec coords;  // over the basis simple roots, entries >= 0
  long long mult{1};
  bool is_imaginary{false};
};

// Multiplicity of the n-th imaginary layer (n >= 1). The built-in rule is the
// untwisted one (rank of the algebra); a provider overrides it.
using ImaginaryMult = std::function<long long(long long)>;

// Positive roots of depth <= max_depth: the finite positive roots (depth 0),
// then per depth n the shifts of every finite root plus the imaginary layer,
// each depth slice sorted by coordinates. Output at depth D is a prefix of
// output at any deeper cutoff.
std::vector<RootWithMult> positive_roots_up_to_depth(
    const Basis& b, long long max_depth, const ImaginaryMult* provider = nullptr);
std::vector<RootWithMult> positive_roots_up_to_depth(const AffineAlgebra& g,
                                                     long long max_depth);

// Number of ways to write each cell of the box [0,k] as a sum of the given
// coins (already expanded by multiplicity), as a mixed-radix table with
// strides fastest on the last coordinate. Exposed so order-invariance can be
// checked directly.
std::vector<long long> partition_table_in_box(
    const std::vector<long long>& k,
    const std::vector<std::vector<long long>>& coins);

// Generalized Kostant partition counts for one basis, with a memo shared
// across queries and a root catalogue that grows on demand.
class PartitionContext {
 public:
  explicit PartitionContext(Basis b, const ImaginaryMult* provider = nullptr);

  // 0 when zeta is outside the nonnegative integer span of the simple roots.
  long long value(const Weight& zeta);
  long long value_at(const std::vector<long long>& k);

  const Basis& basis() const { return basis_; }

 private:
  void ensure_depth(long long d);

  Basis basis_;
  ImaginaryMult imag_;
  long long depth_{-1};
  std::vector<RootWithMult> roots_;
  std::map<std::vector<long long>, long long> memo_;
};

long long partition_value(const AffineAlgebra& g, const Weight& zeta);

}  // namespace kmbranch
