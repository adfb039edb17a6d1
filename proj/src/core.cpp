#include "triod/core.hpp"

#include <charconv>
#include <stdexcept>

namespace triod {

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  auto is_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!is_integer(num) || !is_integer(den))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num);
  mpz_class d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

TriodPoint TriodPoint::on_branch(BranchId branch, Rational coord) {
  if (coord <= 0) throw std::invalid_argument("branch coordinate must be positive");
  TriodPoint p;
  p.branch_ = branch;
  p.coord_ = std::move(coord);
  return p;
}

bool operator<(const TriodPoint& x, const TriodPoint& y) {
  if (x.is_hub() || y.is_hub()) return x.is_hub() && !y.is_hub();
  if (x.branch() != y.branch()) return x.branch() < y.branch();
  return x.coord() < y.coord();
}

std::string to_string(const TriodPoint& p) {
  if (p.is_hub()) return "a";
  return "(b" + std::to_string(p.branch().index()) + "," + to_string(p.coord()) + ")";
}

TreeOrder tree_compare(const TriodPoint& x, const TriodPoint& y) {
  if (x == y) return TreeOrder::Equal;
  if (y.is_hub()) return TreeOrder::Greater;
  if (x.is_hub()) return TreeOrder::Less;
  if (x.branch() != y.branch()) return TreeOrder::Incomparable;
  return x.coord() > y.coord() ? TreeOrder::Greater : TreeOrder::Less;
}

Arc::Arc(TriodPoint from, TriodPoint to) : from_(std::move(from)), to_(std::move(to)) {}

Arc arc_between(const TriodPoint& x, const TriodPoint& y) { return Arc(x, y); }

bool Arc::contains_hub() const {
  return tree_compare(from_, to_) == TreeOrder::Incomparable || from_.is_hub() || to_.is_hub();
}

Rational Arc::length() const {
  if (tree_compare(from_, to_) == TreeOrder::Incomparable) return from_.coord() + to_.coord();
  Rational d = from_.coord() - to_.coord();
  return abs(d);
}

std::optional<Rational> Arc::extent(BranchId b) const {
  std::optional<Rational> best;
  for (const auto* p : {&from_, &to_}) {
    if (p->lies_on(b) && (!best || p->coord() > *best)) best = p->coord();
  }
  return best;
}

std::optional<Rational> Arc::inner_extent(BranchId b) const {
  auto outer = extent(b);
  if (!outer) return std::nullopt;
  if (contains_hub()) return Rational(0);
  // Both endpoints on b.
  return from_.coord() < to_.coord() ? from_.coord() : to_.coord();
}

bool Arc::contains(const TriodPoint& p) const {
  if (p.is_hub()) return contains_hub();
  auto lo = inner_extent(p.branch());
  auto hi = extent(p.branch());
  return lo && hi && *lo <= p.coord() && p.coord() <= *hi;
}

TriodPoint Arc::point_at(const Rational& s) const {
  Rational len = length();
  Rational travelled = s * len;
  if (tree_compare(from_, to_) == TreeOrder::Incomparable) {
    // from -> a -> to
    if (travelled < from_.coord()) return TriodPoint::on_branch(from_.branch(), from_.coord() - travelled);
    if (travelled == from_.coord()) return TriodPoint::hub();
    return TriodPoint::on_branch(to_.branch(), travelled - from_.coord());
  }
  // Same branch (one endpoint may be the hub).
  Rational c = from_.coord() + s * (to_.coord() - from_.coord());
  if (c == 0) return TriodPoint::hub();
  BranchId b = from_.is_hub() ? to_.branch() : from_.branch();
  return TriodPoint::on_branch(b, c);
}

}  // namespace triod
