#include "kmbranch/path.hpp"

#include <algorithm>

#include "kmbranch/errors.hpp"
#include "kmbranch/weyl.hpp"

namespace kmbranch {

namespace {

bool positively_proportional(const Weight& u, const Weight& v) {
  Rat t;
  bool have_t = false;
  for (size_t i = 0; i < u.labels.size(); ++i) {
    if (u.labels[i] != 0) {
      t = v.labels[i] / u.labels[i];
      have_t = true;
      break;
    }
    if (v.labels[i] != 0) return false;
  }
  if (!have_t) {
    if (u.d == 0) return false;  // u must be nonzero; treat defensively
    t = v.d / u.d;
  }
  if (t <= 0) return false;
  return v == t * u;
}

}  // namespace

Path canonical_path(std::vector<Weight> segments) {
  Path p;
  for (auto& s : segments) {
    if (s.is_zero()) continue;
    if (!p.segments.empty() && positively_proportional(p.segments.back(), s))
      p.segments.back() = p.segments.back() + s;
    else
      p.segments.push_back(std::move(s));
  }
  return p;
}

Path straight_path(const Weight& lambda) {
  if (lambda.is_zero()) return {};
  Path p;
  p.segments.push_back(lambda);
  return p;
}

Weight path_endpoint(const AffineAlgebra& g, const Path& p) {
  Weight e = zero_weight(g);
  for (const auto& s : p.segments) e = e + s;
  return e;
}

std::vector<Weight> path_breakpoints(const Path& p) {
  std::vector<Weight> out;
  for (const auto& s : p.segments)
    out.push_back(out.empty() ? s : out.back() + s);
  return out;
}

Path concat(const Path& a, const Path& b) {
  auto segs = a.segments;
  segs.insert(segs.end(), b.segments.begin(), b.segments.end());
  return canonical_path(std::move(segs));
}

Path reflect_path(const Basis& basis, int i, const Path& p) {
  std::vector<Weight> segs;
  segs.reserve(p.segments.size());
  for (const auto& s : p.segments) segs.push_back(reflect(basis, i, s));
  return canonical_path(std::move(segs));
}

RatVec h_profile(const Basis& basis, int i, const Path& p) {
  basis.alg.check_index(i);
  RatVec h{Rat(0)};
  for (const auto& s : p.segments) h.push_back(h.back() + basis.pairing(s, i));
  return h;
}

namespace {

// Parameter runs over [0, r], one unit per segment; h is linear in between.

// Earliest tau >= from with h(tau) == target; nullopt when none.
std::optional<Rat> first_hit(const RatVec& h, const Rat& target, const Rat& from) {
  int r = static_cast<int>(h.size()) - 1;
  for (int j = 0; j < r; ++j) {
    Rat lo = std::max(Rat(j), from);
    if (lo > j + 1) continue;
    const Rat &hs = h[j], &he = h[j + 1];
    if (hs == he) {
      if (hs == target) return lo;
      continue;
    }
    Rat t = Rat(j) + (target - hs) / (he - hs);
    if (t >= lo && t <= j + 1) return t;
  }
  if (from <= r && !h.empty() && h[r] == target && from == Rat(r)) return from;
  return std::nullopt;
}

// Latest tau <= until with h(tau) == target; nullopt when none.
std::optional<Rat> last_hit(const RatVec& h, const Rat& target, const Rat& until) {
  int r = static_cast<int>(h.size()) - 1;
  for (int j = r - 1; j >= 0; --j) {
    Rat hi = std::min(Rat(j + 1), until);
    if (hi < j) continue;
    const Rat &hs = h[j], &he = h[j + 1];
    if (hs == he) {
      if (hs == target) return hi;
      continue;
    }
    Rat t = Rat(j) + (target - hs) / (he - hs);
    if (t >= j && t <= hi) return t;
  }
  if (until >= 0 && h[0] == target) return Rat(0);
  return std::nullopt;
}

// Segments of the sub-path over [t1, t2], translated to start at 0.
std::vector<Weight> slice_segments(const Path& p, const Rat& t1, const Rat& t2) {
  std::vector<Weight> out;
  int r = static_cast<int>(p.segments.size());
  for (int j = 0; j < r; ++j) {
    Rat lo = std::max(Rat(j), t1), hi = std::min(Rat(j + 1), t2);
    if (hi <= lo) continue;
    out.push_back((hi - lo) * p.segments[j]);
  }
  return out;
}

struct ProfileData {
  RatVec h;
  Rat min_int;  // minimal integer value attained (<= 0)
  Rat end;      // h at the endpoint
};

ProfileData profile(const Basis& b, int i, const Path& p) {
  ProfileData d;
  d.h = h_profile(b, i, p);
  Rat m = 0;
  for (const auto& v : d.h) m = std::min(m, v);
  d.min_int = Rat(rat_ceil(m));
  d.end = d.h.back();
  return d;
}

Path splice(const Basis& b, int i, const Path& p, const Rat& t1, const Rat& t2) {
  Rat r(static_cast<int>(p.segments.size()));
  auto segs = slice_segments(p, Rat(0), t1);
  for (auto& s : slice_segments(p, t1, t2)) segs.push_back(reflect(b, i, s));
  for (auto& s : slice_segments(p, t2, r)) segs.push_back(std::move(s));
  return canonical_path(std::move(segs));
}

}  // namespace

std::optional<Path> f_op(const Basis& basis, int i, const Path& p) {
  auto pd = profile(basis, i, p);
  if (pd.end - pd.min_int < 1) return std::nullopt;
  Rat r(static_cast<int>(p.segments.size()));
  auto fall = last_hit(pd.h, pd.min_int, r);
  if (!fall) throw InternalError("lost the last minimum in f");
  auto rise = first_hit(pd.h, pd.min_int + 1, *fall);
  if (!rise) throw InternalError("lost the rise crossing in f");
  return splice(basis, i, p, *fall, *rise);
}

std::optional<Path> e_op(const Basis& basis, int i, const Path& p) {
  auto pd = profile(basis, i, p);
  if (pd.min_int == 0) return std::nullopt;
  auto dip = first_hit(pd.h, pd.min_int, Rat(0));
  if (!dip) throw InternalError("lost the first minimum in e");
  auto back = last_hit(pd.h, pd.min_int + 1, *dip);
  if (!back) throw InternalError("lost the fall crossing in e");
  return splice(basis, i, p, *back, *dip);
}

std::set<Path> enumerate_ls_paths(const AffineAlgebra& g, const Weight& lambda,
                                  long long max_depth) {
  for (const auto& x : lambda.labels)
    if (!is_integer(x) || x < 0)
      throw NotDominantIntegral("labels must be nonnegative integers");
  auto b = plain_basis(g);
  std::set<Path> all;
  std::vector<Path> frontier{straight_path(lambda)};
  all.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (int i = 0; i < g.n(); ++i) {
        auto child = f_op(b, i, p);
        if (!child) continue;
        if (depth_below(lambda, path_endpoint(g, *child)) > max_depth) continue;
        if (all.insert(*child).second) next.push_back(std::move(*child));
      }
    frontier = std::move(next);
  }
  return all;
}

bool is_dominant_path(const Winding& w, const Path& p) {
  for (const auto& bp : path_breakpoints(p))
    for (const auto& h : w.coroots)
      if (pair(bp, h) < 0) return false;
  return true;
}

}  // namespace kmbranch
