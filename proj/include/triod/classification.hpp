#pragma once

// One summary record per pattern, as written by the classify command.

#include "triod/loop_graph.hpp"
#include "triod/rotation_theory.hpp"

#include <optional>
#include <string>

namespace triod {

struct PatternClassification {
  Pattern pattern;        // as given
  bool reflected = false; // b1 and b2 were swapped to reach the canonical ordering
  int period = 0;
  Rational rho;
  RotationPair rp;
  ModifiedRotationPair mrp;
  ColorCensus census;
  bool regular = false;
  bool fixes_only_hub = false;
  bool order_preserving = false;
  bool twist = false;
  int modality = 1;
  std::optional<Rational> chi;  // absent at rho = 1/3
  int green_states = 0;
  int red_states = 0;
  int countries = 0;
  std::optional<int> laps;      // twist patterns only
  std::optional<int> bound;
};

// Colors, rotation data and chi are taken in the canonical ordering when
// the rank-1 points can be made black, otherwise as given.
PatternClassification classify(const Pattern& p);

const char* csv_header();
std::string to_csv_row(const PatternClassification& c);
std::string to_json_line(const PatternClassification& c);

}  // namespace triod
