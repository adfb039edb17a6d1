#include "triod/classification.hpp"

#include "triod/conjugacy.hpp"
#include "triod/plinear.hpp"

#include <json.hpp>

namespace triod {

PatternClassification classify(const Pattern& p) {
  require_valid(p);
  PatternClassification c;
  c.pattern = p;
  Pattern oriented;
  if (try_orient(p, oriented)) {
    c.reflected = !(oriented == p);
  } else {
    oriented = p;
  }
  c.period = p.period();
  auto loop = fundamental_loop(oriented);
  c.rp = loop.rotation_pair();
  c.rho = c.rp.number();
  c.mrp = mrp_of(c.rp);
  c.census = color_census(oriented);
  c.regular = is_regular(p);
  c.fixes_only_hub = fixes_only_hub(p);
  c.order_preserving = is_order_preserving(p);
  c.twist = is_triod_twist(p);
  c.modality = modality(p);
  if (c.rho != make_rational(1, 3)) c.chi = chi(code_table(oriented, 0));
  for (const auto& s : states(oriented)) {
    if (s.color == Color::Green) ++c.green_states;
    if (s.color == Color::Red) ++c.red_states;
  }
  c.countries = static_cast<int>(countries(oriented).size());
  if (c.twist) {
    auto report = build_conjugacy(p);
    c.laps = report.laps;
    c.bound = report.bound;
  }
  return c;
}

const char* csv_header() {
  return "period,rho,rp,mrp,green,black,red,regular,order_preserving,twist,modality,chi,laps,bound";
}

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_csv_row(const PatternClassification& c) {
  std::string row;
  row += std::to_string(c.period) + ",";
  row += to_string(c.rho) + ",";
  row += "\"(" + std::to_string(c.rp.displacement) + "," + std::to_string(c.rp.length) + ")\",";
  row += "\"(" + to_string(c.mrp.t) + "," + std::to_string(c.mrp.m) + ")\",";
  row += std::to_string(c.census.green) + "," + std::to_string(c.census.black) + "," + std::to_string(c.census.red) + ",";
  row += std::string(flag(c.regular)) + "," + flag(c.order_preserving) + "," + flag(c.twist) + ",";
  row += std::to_string(c.modality) + ",";
  row += (c.chi ? to_string(*c.chi) : std::string()) + ",";
  row += (c.laps ? std::to_string(*c.laps) : std::string()) + ",";
  row += c.bound ? std::to_string(*c.bound) : std::string();
  return row;
}

std::string to_json_line(const PatternClassification& c) {
  nlohmann::ordered_json j;
  j["pattern"] = nlohmann::ordered_json::parse(serialize(c.pattern));
  j["reflected"] = c.reflected;
  j["period"] = c.period;
  j["rho"] = to_string(c.rho);
  j["rp"] = {c.rp.displacement, c.rp.length};
  j["mrp"] = {{"t", to_string(c.mrp.t)}, {"m", c.mrp.m}};
  j["colors"] = {{"green", c.census.green}, {"black", c.census.black}, {"red", c.census.red}};
  j["regular"] = c.regular;
  j["fixes_only_hub"] = c.fixes_only_hub;
  j["order_preserving"] = c.order_preserving;
  j["twist"] = c.twist;
  j["modality"] = c.modality;
  j["chi"] = c.chi ? nlohmann::ordered_json(to_string(*c.chi)) : nlohmann::ordered_json(nullptr);
  j["green_states"] = c.green_states;
  j["red_states"] = c.red_states;
  j["countries"] = c.countries;
  j["laps"] = c.laps ? nlohmann::ordered_json(*c.laps) : nlohmann::ordered_json(nullptr);
  j["bound"] = c.bound ? nlohmann::ordered_json(*c.bound) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

}  // namespace triod
