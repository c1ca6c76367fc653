#include <stdexcept>
#include <string>

#include "altsurf/enumerate.hpp"

namespace altsurf {

namespace {

BigInt power(int base, long exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

void require_crossings(int n) {
  if (n < 1) throw std::invalid_argument("crossing count must be at least 1");
}

void require_genus(int g) {
  if (g < 1) throw std::invalid_argument("genus must be at least 1: the bound assumes genus g > 0");
}

}  // namespace

BigInt bound(int n, int g) {
  require_crossings(n);
  require_genus(g);
  const long gl = g;
  return power(4 * n, 64 * gl * gl - 48 * gl);
}

BigInt spanning_bound(int n, int chi) {
  require_crossings(n);
  if (chi > -1) throw std::invalid_argument("spanning bound needs chi <= -1");
  const long h = 1 - static_cast<long>(chi);
  return power(4 * n, 16 * h * h - 24 * h);
}

BigInt bound_for(int n, const TargetSpec& t) {
  if (t.mode() == TargetSpec::Mode::seifert_genus) return bound(n, t.genus());
  return spanning_bound(n, t.chi());
}

IntermediateBounds intermediate_bounds(int n, int g) {
  require_crossings(n);
  require_genus(g);
  const long e = 8L * g - 4;
  return {power(4 * n, e), power(4 * n, e * e), power(4 * n, 4 * (4L * g - 4))};
}

}  // namespace altsurf
