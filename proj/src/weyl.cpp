#include "kmbranch/weyl.hpp"

#include <map>
#include <set>

#include "kmbranch/errors.hpp"

namespace kmbranch {

Weight reflect(const Basis& b, int i, const Weight& w) {
  b.alg.check_index(i);
  return w - b.pairing(w, i) * b.roots[i];
}

Straightened to_dominant_signed(const Basis& b, const Weight& w,
                                long long step_budget) {
  Weight cur = w;
  long long steps = 0;
  std::set<int> touched;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < b.n(); ++i)
      if (b.pairing(cur, i) < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    if (steps >= step_budget)
      throw NotInTitsCone("no dominant representative within " +
                          std::to_string(step_budget) + " reflections");
    cur = reflect(b, neg, cur);
    touched.insert(neg);
    ++steps;
  }
  Straightened r;
  r.dominant = cur;
  r.length = steps;
  r.sign = (steps % 2 == 0) ? 1 : -1;
  for (int i : touched)
    if (b.pairing(cur, i) == 0) r.sign = 0;
  return r;
}

namespace {

std::vector<OrbitPoint> orbit_walk(const Basis& b, const Weight& start,
                                   const RatVec* budget, const Rat* max_depth) {
  for (int i = 0; i < b.n(); ++i)
    if (b.pairing(start, i) <= 0)
      throw NotStrictlyDominant("orbit walk needs all labels > 0 at the start");

  auto in_bounds = [&](const RatVec& drop) {
    if (budget) {
      for (int i = 0; i < b.n(); ++i)
        if (drop[i] > (*budget)[i]) return false;
    }
    if (max_depth && drop[0] > *max_depth) return false;
    return true;
  };

  std::vector<OrbitPoint> out;
  std::set<RatVec> seen;  // drop determines the point
  std::map<RatVec, OrbitPoint> level;

  OrbitPoint id;
  id.weight = start;
  id.drop.assign(b.n(), Rat(0));
  if (in_bounds(id.drop)) {
    level[id.drop] = id;
    seen.insert(id.drop);
  }

  long long len = 0;
  while (!level.empty()) {
    std::map<RatVec, OrbitPoint> next;
    for (const auto& [dk, pt] : level) {
      out.push_back(pt);
      for (int i = 0; i < b.n(); ++i) {
        Rat t = b.pairing(pt.weight, i);
        if (t <= 0) continue;  // only descent edges; t != 0 on a regular orbit
        RatVec drop = pt.drop;
        drop[i] += t;
        if (!in_bounds(drop) || seen.count(drop)) continue;
        OrbitPoint child;
        child.weight = pt.weight - t * b.roots[i];
        child.drop = drop;
        child.length = len + 1;
        child.sign = -pt.sign;
        child.parent_edge = i;
        seen.insert(drop);
        next.emplace(std::move(drop), std::move(child));
      }
    }
    level = std::move(next);
    ++len;
  }
  return out;
}

}  // namespace

std::vector<OrbitPoint> signed_orbit_in_box(const Basis& b, const Weight& start,
                                            const RatVec& budget) {
  if (static_cast<int>(budget.size()) != b.n())
    throw InternalError("budget dimension mismatch");
  return orbit_walk(b, start, &budget, nullptr);
}

std::vector<OrbitPoint> signed_orbit_to_depth(const Basis& b,
                                              const Weight& start,
                                              const Rat& max_depth) {
  return orbit_walk(b, start, nullptr, &max_depth);
}

}  // namespace kmbranch
