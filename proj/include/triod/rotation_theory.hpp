#pragma once

// Code functions, colors, states, countries, trains and the twist criterion.

#include "triod/loop_graph.hpp"
#include "triod/pattern.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace triod {

// Color of the arrow x -> f(x) for each time index.
std::vector<Color> point_colors(const Pattern& p);

struct ColorCensus {
  int green = 0;
  int black = 0;
  int red = 0;
};

ColorCensus color_census(const Pattern& p);

// Rotation number of the fundamental loop.
Rational rotation_number(const Pattern& p);

struct CodeTable {
  int base = 0;                       // time index with code 0
  Rational rho;
  std::vector<Rational> code;         // indexed by time
  std::vector<Color> colors;          // indexed by time
  std::vector<Rational> partial_sums; // t_k for k = 0..n along the orbit from base
  // k*rho - t_k without the integer part: each step adds rho - d(x -> f(x)).
  // Agrees with `code` up to a constant on every branch.
  std::vector<Rational> additive;

  const Rational& operator[](int t) const { return code[static_cast<std::size_t>(t)]; }
  const Rational& unfloored(int t) const { return additive[static_cast<std::size_t>(t)]; }
};

// L(f^k(x0)) = k*rho - floor(t_k). Errors: RotationOneThird.
CodeTable code_table(const Pattern& p, int base = 0);

enum class CodeMonotonicity { Decreasing, NonDecreasing, StrictlyIncreasing };

const char* monotonicity_name(CodeMonotonicity m);

// rho <= 1/3: farther points carry smaller-or-equal codes; rho > 1/3: larger-or-equal.
// Strict additionally forbids equal codes on neighbouring points of a branch.
CodeMonotonicity code_monotonicity(const Pattern& p, const CodeTable& table);

// x > y with f(x), f(y) on one branch implies f(x) > f(y).
bool is_order_preserving(const Pattern& p);

// Criterion on a pattern already in canonical orientation: the primitive
// 3-cycle at rho = 1/3, a strictly increasing code otherwise.
bool twist_by_code(const Pattern& oriented);

// Fixes only the hub, regular, and twist_by_code in canonical orientation.
bool is_triod_twist(const Pattern& p);

bool is_primitive_three_cycle(const Pattern& p);

// max L - min L over the given time indices. Errors: EmptySubset.
Rational chi(const CodeTable& table, const std::vector<int>& subset);
Rational chi(const CodeTable& table);
// The same oscillations measured with the unfloored code.
Rational chi_unfloored(const CodeTable& table, const std::vector<int>& subset);
Rational chi_unfloored(const CodeTable& table);

// Maximal same-colored run of points on one branch.
struct State {
  Color color = Color::Black;
  BranchId branch;
  std::vector<int> times;  // ordered outward

  int inner() const { return times.front(); }
  int outer() const { return times.back(); }
};

std::vector<State> states(const Pattern& p, const CodeTable& table);
std::vector<State> states(const Pattern& p);

// Consecutive green states of one branch linked by length-1 green trains.
struct Country {
  BranchId branch;
  std::vector<State> states;  // ordered outward

  std::vector<int> times() const;
  int inner() const { return states.front().inner(); }
  int outer() const { return states.back().outer(); }
};

std::vector<Country> countries(const Pattern& p);
std::vector<Country> countries(const Pattern& p, const CodeTable& table);

// Every point of `x` lies farther out on the same branch than every point of `y`.
bool country_above(const Pattern& p, const Country& x, const Country& y);

enum class PhiKind { One = 1, Two = 2 };

// Index into `all` of the country reached by following the hub-side
// anchor of all[index] one (or two) branches clockwise, or nullopt.
// Errors: WrongRegime unless 0 < rho < 1/3.
std::optional<std::size_t> phi(const Pattern& p, const std::vector<Country>& all, std::size_t index, PhiKind which);

// f(i(A)) for the innermost state A of the country; black when the
// country's premises hold.
int phi_anchor(const Pattern& p, const Country& c);

enum class TrainKind { Black, Green, Mixed, Any };

// Visits every train x_0..x_n (1 <= n <= max_len) with x_{i+1} >= f(x_i)
// whose colors fit `kind`. Return false from visit to stop.
void trains(const Pattern& p, TrainKind kind, int max_len,
            const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace triod
