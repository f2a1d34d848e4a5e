#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmbranch/rational.hpp"

namespace kmbranch {

// A weight of an affine algebra, stored by its evaluations: labels[i] is the
// value on the i-th simple coroot (i = 0..l) and d is the value on the scaling
// element. Level (the value on the canonical central element) is derived.
struct Weight {
  RatVec labels;
  Rat d{0};

  bool is_zero() const;
  bool operator==(const Weight& o) const { return labels == o.labels && d == o.d; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const;  // lexicographic (labels, d)
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const Rat& t, const Weight& w);
Weight operator-(const Weight& a);

// An element of the Cartan subalgebra: coeffs[i] many h_i plus d_coeff many d.
struct CartanElt {
  RatVec coeffs;
  Rat d_coeff{0};

  bool operator==(const CartanElt& o) const {
    return coeffs == o.coeffs && d_coeff == o.d_coeff;
  }
};

// <w, h> for h expressed in the h_0..h_l, d basis.
Rat pair(const Weight& w, const CartanElt& h);

struct AffineAlgebra {
  std::vector<std::vector<long long>> cartan;  // (l+1) x (l+1) GCM entries
  std::vector<long long> marks;                // right null vector a, primitive > 0
  std::vector<long long> comarks;              // left null vector c, primitive > 0
  long long coxeter{0};                        // sum of marks
  long long dual_coxeter{0};                   // sum of comarks

  int n() const { return static_cast<int>(cartan.size()); }  // l + 1
  int rank() const { return n() - 1; }                        // l
  void check_index(int i) const;
};

// Validates the GCM axioms and the corank-1 affine condition.
AffineAlgebra build_affine(const std::vector<std::vector<long long>>& cartan);

// Named presets: "A1_1" .. "A4_1" (untwisted cyclic Cartan matrices).
AffineAlgebra preset_algebra(const std::string& name);

Weight zero_weight(const AffineAlgebra& g);
Weight simple_root(const AffineAlgebra& g, int i);          // alpha_i
Weight fundamental_weight(const AffineAlgebra& g, int i);   // Lambda_i
Weight rho_weight(const AffineAlgebra& g);                  // all labels 1, d 0
Weight delta_weight(const AffineAlgebra& g);                // sum marks[i] * alpha_i

CartanElt simple_coroot(const AffineAlgebra& g, int i);     // h_i
CartanElt central_element(const AffineAlgebra& g);          // K = sum comarks[i] h_i
CartanElt scaling_element(const AffineAlgebra& g);          // d

Rat level(const AffineAlgebra& g, const Weight& w);

// Dotted (winding) data for the index-u subalgebra. Simple roots and coroots
// agree with the plain ones except at index 0; fundamentals pick up a
// Lambda_0 correction so they stay dual to the dotted coroots.
struct Winding {
  long long u{1};
  std::vector<Weight> roots;          // dotted alpha_i
  std::vector<CartanElt> coroots;     // dotted h_i
  std::vector<Weight> fundamentals;   // dotted Lambda_i
  Weight rho;                         // dotted rho
};

Winding winding_construct(const AffineAlgebra& g, long long u);

// A simple-root basis to run Weyl / path / partition machinery against:
// either the plain simple roots or the dotted ones of a winding subalgebra.
struct Basis {
  enum class Tag { plain, dotted };
  Tag tag{Tag::plain};
  long long u{1};
  AffineAlgebra alg;
  std::vector<Weight> roots;
  std::vector<CartanElt> coroots;
  Weight rho;
  Weight delta;  // sum marks[i] * roots[i]; equals u * plain delta when dotted

  int n() const { return alg.n(); }
  Rat pairing(const Weight& w, int i) const { return pair(w, coroots[i]); }
};

Basis plain_basis(const AffineAlgebra& g);
Basis dotted_basis(const AffineAlgebra& g, const Winding& w);

// Coordinates of w over basis.roots, or nullopt when w is not in their span.
// The simple roots together with any weight of nonzero level are linearly
// independent, so coordinates are unique whenever they exist.
std::optional<RatVec> root_coords(const Basis& b, const Weight& w);

// Convenience for the plain basis (the common case in the CLI).
std::optional<RatVec> root_coords(const AffineAlgebra& g, const Weight& w);

Weight from_root_coords(const Basis& b, const RatVec& k);

// Depth of a key relative to a top weight: the alpha_0-coordinate of
// top - key, which equals top.d - key.d for weights in top - Q+.
Rat depth_below(const Weight& top, const Weight& key);

}  // namespace kmbranch
