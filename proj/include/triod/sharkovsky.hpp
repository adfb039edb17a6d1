#pragma once

// Sharkovsky ordering and modified rotation pairs on the prong space.

#include "triod/rational.hpp"

#include <compare>
#include <set>
#include <string>

namespace triod {

// A natural number, the marker 0 (a point of the real line), or 2^infinity.
class SharkovskyKey {
 public:
  constexpr SharkovskyKey() = default;
  constexpr explicit SharkovskyKey(long value) : value_(value) {}
  static constexpr SharkovskyKey two_infinity() {
    SharkovskyKey k;
    k.infinite_ = true;
    return k;
  }

  constexpr bool is_two_infinity() const { return infinite_; }
  constexpr bool is_zero() const { return !infinite_ && value_ == 0; }
  // Precondition: !is_two_infinity().
  constexpr long value() const { return value_; }

  friend constexpr bool operator==(const SharkovskyKey&, const SharkovskyKey&) = default;

 private:
  long value_ = 0;
  bool infinite_ = false;
};

std::string to_string(const SharkovskyKey& k);

// greater means m comes first in 3, 5, 7, ..., 2*3, ..., 2^inf, ..., 4, 2, 1, 0.
std::strong_ordering sharkovsky_compare(const SharkovskyKey& m, const SharkovskyKey& n);
std::strong_ordering sharkovsky_compare(long m, long n);

// {m in 1..limit : k dominates or equals m}.
std::set<long> sh_set(const SharkovskyKey& k, long limit);
std::set<long> sh_set(long k, long limit);

// m in Sh(k); 0 lies in every Sh(k).
bool in_sh(const SharkovskyKey& m, const SharkovskyKey& k);

struct MrpPoint {
  Rational t;
  SharkovskyKey m;
};

struct MrpHull {
  MrpPoint lo;
  MrpPoint hi;
};

// t1 < t < t2, or t = t_i and m in Sh(m_i).
bool mrp_hull_contains(const MrpHull& hull, const MrpPoint& point);

}  // namespace triod
