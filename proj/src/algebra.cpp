#include "kmbranch/algebra.hpp"

#include <numeric>

#include "kmbranch/errors.hpp"

namespace kmbranch {

bool Weight::is_zero() const {
  for (const auto& x : labels)
    if (x != 0) return false;
  return d == 0;
}

bool Weight::operator<(const Weight& o) const {
  if (labels != o.labels) return labels < o.labels;
  return d < o.d;
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.labels.size(); ++i) r.labels[i] += b.labels[i];
  r.d += b.d;
  return r;
}

Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

Weight operator*(const Rat& t, const Weight& w) {
  Weight r = w;
  for (auto& x : r.labels) x *= t;
  r.d *= t;
  return r;
}

Weight operator-(const Weight& a) { return Rat(-1) * a; }

Rat pair(const Weight& w, const CartanElt& h) {
  Rat s = 0;
  for (size_t i = 0; i < h.coeffs.size(); ++i) s += w.labels[i] * h.coeffs[i];
  s += w.d * h.d_coeff;
  return s;
}

void AffineAlgebra::check_index(int i) const {
  if (i < 0 || i >= n())
    throw IndexOutOfRange("node index " + std::to_string(i) + " outside 0.." +
                          std::to_string(n() - 1));
}

namespace {

// Reduced row echelon form of an augmented matrix; returns pivot columns.
std::vector<int> rref(std::vector<RatVec>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    Rat inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// One-dimensional kernel of a square matrix, or nullopt if corank != 1.
std::optional<RatVec> kernel_line(const std::vector<std::vector<long long>>& a,
                                  bool transpose) {
  int n = static_cast<int>(a.size());
  std::vector<RatVec> m(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rat(transpose ? a[j][i] : a[i][j]);
  auto pivots = rref(m);
  if (static_cast<int>(pivots.size()) != n - 1) return std::nullopt;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  RatVec x(n, Rat(0));
  x[free_col] = 1;
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free_col];
  return x;
}

// Scales a rational kernel vector to primitive integers, all positive.
std::vector<long long> positive_primitive(const RatVec& x) {
  Int lcm = 1;
  for (const auto& v : x) lcm = boost::multiprecision::lcm(lcm, denominator(v));
  std::vector<Int> w;
  w.reserve(x.size());
  for (const auto& v : x) w.push_back(numerator(v) * (lcm / denominator(v)));
  Int g = 0;
  for (const auto& v : w) g = boost::multiprecision::gcd(g, v);
  if (g == 0) throw NotAffine("null vector vanished");
  bool neg = false, pos = false;
  for (auto& v : w) {
    v /= g;
    if (v > 0) pos = true;
    if (v < 0) neg = true;
  }
  if (pos && neg) throw NotAffine("null vector is not of one sign");
  std::vector<long long> out;
  out.reserve(w.size());
  for (const auto& v : w) {
    Int q = neg ? -v : v;
    if (q <= 0) throw NotAffine("null vector has a non-positive entry");
    out.push_back(static_cast<long long>(q));
  }
  return out;
}

}  // namespace

AffineAlgebra build_affine(const std::vector<std::vector<long long>>& cartan) {
  size_t n = cartan.size();
  if (n < 2) throw NotGCM("matrix must be at least 2x2");
  for (const auto& row : cartan)
    if (row.size() != n) throw NotGCM("matrix is not square");
  for (size_t i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) throw NotGCM("diagonal entry is not 2");
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0) throw NotGCM("positive off-diagonal entry");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw NotGCM("zero pattern is not symmetric");
    }
  }
  auto right = kernel_line(cartan, false);
  if (!right) throw NotAffine("matrix does not have corank 1");
  auto left = kernel_line(cartan, true);
  if (!left) throw NotAffine("matrix does not have corank 1");

  AffineAlgebra g;
  g.cartan = cartan;
  g.marks = positive_primitive(*right);
  g.comarks = positive_primitive(*left);
  g.coxeter = std::accumulate(g.marks.begin(), g.marks.end(), 0LL);
  g.dual_coxeter = std::accumulate(g.comarks.begin(), g.comarks.end(), 0LL);
  return g;
}

AffineAlgebra preset_algebra(const std::string& name) {
  int l = 0;
  if (name == "A1_1")
    l = 1;
  else if (name == "A2_1")
    l = 2;
  else if (name == "A3_1")
    l = 3;
  else if (name == "A4_1")
    l = 4;
  else
    throw IoFailure("unknown preset '" + name + "' (expected A1_1..A4_1)");
  int n = l + 1;
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  if (l == 1) {
    m[0][1] = m[1][0] = -2;
  } else {
    for (int i = 0; i < n; ++i) {
      m[i][(i + 1) % n] = -1;
      m[i][(i + n - 1) % n] = -1;
    }
  }
  return build_affine(m);
}

Weight zero_weight(const AffineAlgebra& g) {
  Weight w;
  w.labels.assign(g.n(), Rat(0));
  return w;
}

Weight simple_root(const AffineAlgebra& g, int i) {
  g.check_index(i);
  Weight w = zero_weight(g);
  for (int j = 0; j < g.n(); ++j) w.labels[j] = Rat(g.cartan[j][i]);
  if (i == 0) w.d = 1;
  return w;
}

Weight fundamental_weight(const AffineAlgebra& g, int i) {
  g.check_index(i);
  Weight w = zero_weight(g);
  w.labels[i] = 1;
  return w;
}

Weight rho_weight(const AffineAlgebra& g) {
  Weight w = zero_weight(g);
  for (auto& x : w.labels) x = 1;
  return w;
}

Weight delta_weight(const AffineAlgebra& g) {
  Weight w = zero_weight(g);
  w.d = g.marks[0];  // labels all vanish; only the alpha_0 summand meets d
  return w;
}

CartanElt simple_coroot(const AffineAlgebra& g, int i) {
  g.check_index(i);
  CartanElt h;
  h.coeffs.assign(g.n(), Rat(0));
  h.coeffs[i] = 1;
  return h;
}

CartanElt central_element(const AffineAlgebra& g) {
  CartanElt h;
  h.coeffs.assign(g.n(), Rat(0));
  for (int i = 0; i < g.n(); ++i) h.coeffs[i] = Rat(g.comarks[i]);
  return h;
}

CartanElt scaling_element(const AffineAlgebra& g) {
  CartanElt h;
  h.coeffs.assign(g.n(), Rat(0));
  h.d_coeff = 1;
  return h;
}

Rat level(const AffineAlgebra& g, const Weight& w) {
  Rat s = 0;
  for (int i = 0; i < g.n(); ++i) s += Rat(g.comarks[i]) * w.labels[i];
  return s;
}

Winding winding_construct(const AffineAlgebra& g, long long u) {
  if (u <= 0) throw NonPositive("winding index must be >= 1, got " + std::to_string(u));
  if (std::gcd(u, g.marks[0]) != 1)
    throw NotCoprime("winding index " + std::to_string(u) +
                     " shares a factor with mark " + std::to_string(g.marks[0]));
  Winding w;
  w.u = u;
  Rat shift((u - 1));
  for (int i = 0; i < g.n(); ++i) {
    Weight r = simple_root(g, i);
    if (i == 0) r = r + (shift / g.marks[0]) * delta_weight(g);
    w.roots.push_back(std::move(r));

    CartanElt h = simple_coroot(g, i);
    if (i == 0) {
      CartanElt k = central_element(g);
      for (int j = 0; j < g.n(); ++j)
        h.coeffs[j] += (shift / g.comarks[0]) * k.coeffs[j];
    }
    w.coroots.push_back(std::move(h));

    Weight f = fundamental_weight(g, i);
    Rat corr = (Rat(1, u) - 1) * Rat(g.comarks[i], g.comarks[0]);
    f.labels[0] += corr;
    w.fundamentals.push_back(std::move(f));
  }
  w.rho = rho_weight(g);
  w.rho.labels[0] += (Rat(1, u) - 1) * Rat(g.dual_coxeter);
  return w;
}

Basis plain_basis(const AffineAlgebra& g) {
  Basis b;
  b.tag = Basis::Tag::plain;
  b.u = 1;
  b.alg = g;
  for (int i = 0; i < g.n(); ++i) {
    b.roots.push_back(simple_root(g, i));
    b.coroots.push_back(simple_coroot(g, i));
  }
  b.rho = rho_weight(g);
  b.delta = delta_weight(g);
  return b;
}

Basis dotted_basis(const AffineAlgebra& g, const Winding& w) {
  Basis b;
  b.tag = Basis::Tag::dotted;
  b.u = w.u;
  b.alg = g;
  b.roots = w.roots;
  b.coroots = w.coroots;
  b.rho = w.rho;
  b.delta = Rat(w.u) * delta_weight(g);
  return b;
}

std::optional<RatVec> root_coords(const Basis& b, const Weight& w) {
  int n = b.n();
  // One equation per label plus one for the d-evaluation.
  std::vector<RatVec> m(n + 1, RatVec(n + 1, Rat(0)));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[j][i] = b.roots[i].labels[j];
    m[j][n] = w.labels[j];
  }
  for (int i = 0; i < n; ++i) m[n][i] = b.roots[i].d;
  m[n][n] = w.d;
  auto pivots = rref(m);
  for (int c : pivots)
    if (c == n) return std::nullopt;  // inconsistent: w is outside the span
  if (static_cast<int>(pivots.size()) != n)
    throw InternalError("simple roots plus scaling row lost rank");
  RatVec k(n);
  for (int r = 0; r < n; ++r) k[pivots[r]] = m[r][n];
  return k;
}

std::optional<RatVec> root_coords(const AffineAlgebra& g, const Weight& w) {
  return root_coords(plain_basis(g), w);
}

Weight from_root_coords(const Basis& b, const RatVec& k) {
  Weight w = zero_weight(b.alg);
  for (size_t i = 0; i < k.size(); ++i) w = w + k[i] * b.roots[i];
  return w;
}

Rat depth_below(const Weight& top, const Weight& key) { return top.d - key.d; }

}  // namespace kmbranch
