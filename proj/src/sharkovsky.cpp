#include "triod/sharkovsky.hpp"

#include <stdexcept>
#include <tuple>

namespace triod {

namespace {

// Smaller tuples come first in the order.
std::tuple<int, long, long> position(const SharkovskyKey& k) {
  if (k.is_two_infinity()) return {1, 0, 0};
  long v = k.value();
  if (v < 0) throw std::invalid_argument("negative Sharkovsky value");
  if (v == 0) return {3, 0, 0};
  long a = 0;
  while (v % 2 == 0) {
    v /= 2;
    ++a;
  }
  if (v > 1) return {0, a, v};
  return {2, -a, 0};
}

}  // namespace

std::string to_string(const SharkovskyKey& k) {
  return k.is_two_infinity() ? std::string("2^inf") : std::to_string(k.value());
}

std::strong_ordering sharkovsky_compare(const SharkovskyKey& m, const SharkovskyKey& n) {
  return position(n) <=> position(m);
}

std::strong_ordering sharkovsky_compare(long m, long n) {
  return sharkovsky_compare(SharkovskyKey(m), SharkovskyKey(n));
}

bool in_sh(const SharkovskyKey& m, const SharkovskyKey& k) {
  if (m.is_zero()) return true;
  return sharkovsky_compare(k, m) != std::strong_ordering::less;
}

std::set<long> sh_set(const SharkovskyKey& k, long limit) {
  std::set<long> out;
  for (long m = 1; m <= limit; ++m)
    if (in_sh(SharkovskyKey(m), k)) out.insert(m);
  return out;
}

std::set<long> sh_set(long k, long limit) { return sh_set(SharkovskyKey(k), limit); }

bool mrp_hull_contains(const MrpHull& hull, const MrpPoint& point) {
  if (hull.lo.t < point.t && point.t < hull.hi.t) return true;
  if (point.t == hull.lo.t && in_sh(point.m, hull.lo.m)) return true;
  return point.t == hull.hi.t && in_sh(point.m, hull.hi.m);
}

}  // namespace triod
