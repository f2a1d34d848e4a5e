#include "kmbranch/rational.hpp"

#include <stdexcept>

#include "kmbranch/errors.hpp"

namespace kmbranch {

Int rat_floor(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

bool is_integer(const Rat& r) { return denominator(r) == 1; }

long long to_int64(const Rat& r) {
  if (!is_integer(r)) throw InternalError("to_int64 on non-integer rational");
  return static_cast<long long>(numerator(r));
}

Rat parse_rational(const std::string& s) {
  auto bad = [&] { throw IoFailure("bad rational literal: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Int n(s.substr(0, slash)), d(s.substr(slash + 1));
      if (d == 0) bad();
      return Rat(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s));
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (frac.empty()) bad();
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += '0';
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rat v = Rat(Int(whole)) + (neg ? -1 : 1) * Rat(Int(frac), scale);
    return v;
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rat(0);  // unreachable
}

std::string format_rational(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace kmbranch
