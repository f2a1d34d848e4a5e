#include "kmbranch/kostant.hpp"

#include <algorithm>
#include <set>

#include "kmbranch/errors.hpp"

namespace kmbranch {

namespace {

// Finite positive roots of the rank-l corner (rows/cols 1..l), as integer
// coordinate vectors over alpha_1..alpha_l, by the standard string closure.
std::vector<std::vector<long long>> finite_positive_roots(const AffineAlgebra& g) {
  int l = g.rank();
  std::set<std::vector<long long>> roots;
  std::vector<std::vector<long long>> frontier;
  for (int i = 0; i < l; ++i) {
    std::vector<long long> e(l, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& c : frontier) {
      for (int i = 0; i < l; ++i) {
        long long pairing = 0;
        for (int j = 0; j < l; ++j) pairing += g.cartan[i + 1][j + 1] * c[j];
        long long p = 0;  // how far the root string extends downward
        auto down = c;
        for (;;) {
          down[i] -= 1;
          bool neg = std::any_of(down.begin(), down.end(),
                                 [](long long x) { return x < 0; });
          if (neg || !roots.count(down)) break;
          ++p;
        }
        if (p - pairing >= 1) {
          auto up = c;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  return {roots.begin(), roots.end()};
}

RootWithMult make_root(const Basis& b, const std::vector<long long>& coords,
                       long long mult, bool imaginary) {
  RootWithMult r;
  r.coords.assign(coords.begin(), coords.end());
  r.root = from_root_coords(b, r.coords);
  r.mult = mult;
  r.is_imaginary = imaginary;
  return r;
}

void append_depth_slice(const Basis& b, long long n, long long imag_mult,
                        const std::vector<std::vector<long long>>& finite,
                        std::vector<RootWithMult>& out) {
  int ln = b.n();
  std::vector<std::pair<std::vector<long long>, long long>> slice;  // coords, mult (0 = real)
  if (n == 0) {
    for (const auto& f : finite) {
      std::vector<long long> c(ln, 0);
      for (int i = 1; i < ln; ++i) c[i] = f[i - 1];
      slice.push_back({c, 0});
    }
  } else {
    for (const auto& f : finite)
      for (int sgn : {1, -1}) {
        std::vector<long long> c(ln);
        for (int i = 0; i < ln; ++i) c[i] = n * b.alg.marks[i];
        for (int i = 1; i < ln; ++i) c[i] += sgn * f[i - 1];
        slice.push_back({c, 0});
      }
    std::vector<long long> c(ln);
    for (int i = 0; i < ln; ++i) c[i] = n * b.alg.marks[i];
    slice.push_back({c, imag_mult});
  }
  std::sort(slice.begin(), slice.end());
  for (const auto& [c, m] : slice)
    out.push_back(make_root(b, c, m == 0 ? 1 : m, m != 0));
}

long long imaginary_mult(const Basis& b, const ImaginaryMult* provider,
                         long long n) {
  if (provider) return (*provider)(n);
  if (b.alg.marks[0] != 1)
    throw TwistedUnsupported(
        "imaginary multiplicities beyond the untwisted rule need a provider");
  return b.alg.rank();
}

}  // namespace

std::vector<RootWithMult> positive_roots_up_to_depth(const Basis& b,
                                                     long long max_depth,
                                                     const ImaginaryMult* provider) {
  auto finite = finite_positive_roots(b.alg);
  std::vector<RootWithMult> out;
  for (long long n = 0; n <= max_depth; ++n)
    append_depth_slice(b, n, n == 0 ? 0 : imaginary_mult(b, provider, n), finite, out);
  return out;
}

std::vector<RootWithMult> positive_roots_up_to_depth(const AffineAlgebra& g,
                                                     long long max_depth) {
  return positive_roots_up_to_depth(plain_basis(g), max_depth);
}

std::vector<long long> partition_table_in_box(
    const std::vector<long long>& k,
    const std::vector<std::vector<long long>>& coins) {
  size_t n = k.size();
  std::vector<long long> stride(n, 1);
  long long total = 1;
  for (size_t i = n; i-- > 0;) {
    stride[i] = total;
    total *= k[i] + 1;
  }
  std::vector<long long> dp(total, 0);
  dp[0] = 1;
  std::vector<long long> digits(n);
  for (const auto& c : coins) {
    bool fits = true;
    long long offset = 0;
    for (size_t i = 0; i < n; ++i) {
      if (c[i] > k[i]) fits = false;
      offset += c[i] * stride[i];
    }
    if (!fits) continue;
    for (long long idx = 0; idx < total; ++idx) {
      long long rem = idx;
      bool ok = true;
      for (size_t i = 0; i < n; ++i) {
        digits[i] = rem / stride[i];
        rem %= stride[i];
        if (digits[i] < c[i]) ok = false;
      }
      if (ok) dp[idx] += dp[idx - offset];
    }
  }
  return dp;
}

PartitionContext::PartitionContext(Basis b, const ImaginaryMult* provider)
    : basis_(std::move(b)) {
  if (provider) imag_ = *provider;
}

void PartitionContext::ensure_depth(long long d) {
  if (d <= depth_) return;
  auto finite = finite_positive_roots(basis_.alg);
  for (long long n = depth_ + 1; n <= d; ++n) {
    const ImaginaryMult* p = imag_ ? &imag_ : nullptr;
    append_depth_slice(basis_, n, n == 0 ? 0 : imaginary_mult(basis_, p, n),
                       finite, roots_);
  }
  depth_ = d;
}

long long PartitionContext::value_at(const std::vector<long long>& k) {
  for (long long x : k)
    if (x < 0) return 0;
  auto it = memo_.find(k);
  if (it != memo_.end()) return it->second;
  ensure_depth(k[0]);

  std::vector<std::vector<long long>> coins;
  for (const auto& r : roots_) {
    std::vector<long long> c(k.size());
    bool fits = true;
    for (size_t i = 0; i < k.size(); ++i) {
      c[i] = to_int64(r.coords[i]);
      if (c[i] > k[i]) fits = false;
    }
    if (!fits) continue;
    for (long long m = 0; m < r.mult; ++m) coins.push_back(c);
  }
  auto dp = partition_table_in_box(k, coins);

  // every cell of the box is a globally valid partition count: cache them all
  size_t n = k.size();
  std::vector<long long> stride(n, 1);
  long long total = 1;
  for (size_t i = n; i-- > 0;) {
    stride[i] = total;
    total *= k[i] + 1;
  }
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<long long> cell(n);
    long long rem = idx;
    for (size_t i = 0; i < n; ++i) {
      cell[i] = rem / stride[i];
      rem %= stride[i];
    }
    memo_.emplace(std::move(cell), dp[idx]);
  }
  return memo_.at(k);
}

long long PartitionContext::value(const Weight& zeta) {
  auto coords = root_coords(basis_, zeta);
  if (!coords) return 0;
  std::vector<long long> k;
  k.reserve(coords->size());
  for (const auto& x : *coords) {
    if (!is_integer(x) || x < 0) return 0;
    k.push_back(to_int64(x));
  }
  return value_at(k);
}

long long partition_value(const AffineAlgebra& g, const Weight& zeta) {
  PartitionContext ctx(plain_basis(g));
  return ctx.value(zeta);
}

}  // namespace kmbranch
