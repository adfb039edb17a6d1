#pragma once

// Exact rational arithmetic shared by every module. Backed by GMP.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace triod {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Largest integer not exceeding r.
inline mpz_class floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// Smallest integer not below r.
inline mpz_class ceil_of(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// r mod 1, in [0, 1).
inline Rational frac_of(const Rational& r) {
  return r - Rational(floor_of(r));
}

// "num/den" always, "3/1" included, so readers never have to special-case.
std::string to_string(const Rational& r);

// Accepts "n", "n/d", "-n/d". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace triod
