#pragma once

// Conjugacy of a twist cycle with the orbit of 0 under x -> x + p/q mod 1.

#include "triod/pattern.hpp"

#include <string>
#include <vector>

namespace triod {

struct RotationOrbit {
  long p = 0;
  long q = 1;

  // j * p/q mod 1.
  Rational point(long j) const;
  // x + p/q mod 1.
  Rational step(const Rational& x) const;
  std::vector<Rational> points() const;
};

struct ConjugacyReport {
  Pattern pattern;               // in canonical orientation, time indices of the input
  Rational rho;
  RotationOrbit orbit;
  int base = 0;                  // time index of the minimal-code point
  std::vector<Rational> code;    // normalized so that code[base] == 0
  std::vector<Rational> psi;     // indexed by time
  bool equivariant = false;
  bool bijective = false;
  int laps = 0;                  // discrete run count
  int continuous_laps = 0;       // runs of psi ignoring integer parts
  int modality = 1;
  int bound = 0;                 // modality + 3

  bool continuous_needs_more() const { return continuous_laps > laps; }
};

// Errors: NotTriodTwist, NotCoprime, EquivarianceFailure.
ConjugacyReport build_conjugacy(const Pattern& p);

// Outward along each branch, a lap ends where the integer part of the code
// changes or psi turns around. Errors: BoundViolated when > modality + 3.
int psi_laps(const ConjugacyReport& report, const Pattern& p);

// {"rho":"p/q","psi":[[t,"num/den"],...],"laps":n,"bound":m}
std::string conjugacy_json(const ConjugacyReport& report);

}  // namespace triod
