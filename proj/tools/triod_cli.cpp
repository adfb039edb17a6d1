// triod: enumerate, classify, conjugate, verify and graph commands.

#include "triod/classification.hpp"
#include "triod/conjugacy.hpp"
#include "triod/loop_graph.hpp"
#include "triod/pattern.hpp"
#include "triod/verify.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  std::string out;
  std::string format = "json";
  int period = 0;
  int max_period = 0;
  int min_period = 1;
  int jobs = 1;
  std::string checks;
  int oracle_multiplier = 3;
  bool deterministic = false;
};

std::vector<triod::Pattern> read_corpus(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot read " + path);
    in = &file;
  }
  std::vector<triod::Pattern> out;
  std::string line;
  for (long number = 1; std::getline(*in, line); ++number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(triod::parse_pattern(line));
    } catch (const std::exception& e) {
      throw UsageError((path.empty() ? std::string("stdin") : path) + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw UsageError("cannot write stdout");
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  file.close();
  if (!file) throw UsageError("cannot write " + path);
}

// Applies fn to every item on `jobs` threads; results keep input order.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, int jobs, Fn fn) {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < items.size();) out[i] = fn(items[i]);
  };
  int n = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < n; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<triod::Pattern> corpus_for(const Options& o) {
  if (!o.in.empty()) return read_corpus(o.in);
  int lo = o.period ? o.period : 1;
  int hi = o.period ? o.period : o.max_period;
  if (hi < 1) throw UsageError("give --in, --period or --max-period");
  std::vector<triod::Pattern> out;
  for (int n = lo; n <= hi; ++n) triod::for_each_pattern(n, [&](const triod::Pattern& p) { out.push_back(p); });
  return out;
}

void require_json(const Options& o, const char* command) {
  if (o.format != "json") throw UsageError(std::string(command) + " writes JSON only");
}

int run_enumerate(const Options& o) {
  require_json(o, "enumerate");
  if (!o.in.empty()) throw UsageError("enumerate takes --period or --max-period, not --in");
  std::string text;
  for (const auto& p : corpus_for(o)) text += triod::serialize(p) + "\n";
  write_output(o.out, text);
  return kOk;
}

int run_classify(const Options& o) {
  auto corpus = corpus_for(o);
  auto rows = parallel_map(corpus, o.jobs, [&](const triod::Pattern& p) {
    auto c = triod::classify(p);
    return o.format == "csv" ? triod::to_csv_row(c) : triod::to_json_line(c);
  });
  std::string text = o.format == "csv" ? std::string(triod::csv_header()) + "\n" : std::string();
  for (const auto& r : rows) text += r + "\n";
  write_output(o.out, text);
  return kOk;
}

int run_conjugate(const Options& o) {
  require_json(o, "conjugate");
  auto corpus = corpus_for(o);
  auto rows = parallel_map(corpus, o.jobs, [](const triod::Pattern& p) -> std::pair<std::string, bool> {
    try {
      return {triod::conjugacy_json(triod::build_conjugacy(p)), true};
    } catch (const triod::TriodError& e) {
      return {std::string("{\"error\":\"") + triod::error_name(e.code()) + "\"}", false};
    }
  });
  std::string text;
  bool all = true;
  for (const auto& [line, ok] : rows) {
    text += line + "\n";
    all = all && ok;
  }
  write_output(o.out, text);
  return all ? kOk : kDomainFailure;
}

int run_verify(const Options& o) {
  require_json(o, "verify");
  triod::SuiteConfig cfg;
  cfg.min_period = o.min_period;
  cfg.max_period = o.max_period ? o.max_period : (o.period ? o.period : cfg.max_period);
  if (o.period && !o.max_period) cfg.min_period = o.period;
  cfg.jobs = o.jobs;
  cfg.twist_oracle_multiplier = o.oracle_multiplier;
  std::stringstream list(o.checks);
  for (std::string name; std::getline(list, name, ',');)
    if (!name.empty()) cfg.checks.push_back(name);
  triod::SuiteReport report;
  try {
    report = triod::run_suite(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_output(o.out, triod::report_json(report, o.deterministic) + "\n");
  return report.failures() == 0 ? kOk : kDomainFailure;
}

int run_graph(const Options& o) {
  require_json(o, "graph");
  auto corpus = corpus_for(o);
  std::string text;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (i) text += "\n";
    text += triod::dump_graph(triod::build_graph(corpus[i]));
  }
  write_output(o.out, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotation theory of triod cycles"};
  app.require_subcommand(1, 1);
  Options o;
  auto positive = CLI::PositiveNumber;

  auto add_io = [&](CLI::App* cmd, bool with_in) {
    if (with_in) cmd->add_option("--in", o.in, "line-delimited pattern corpus ('-' for stdin)");
    cmd->add_option("--out", o.out, "output file (stdout when absent)");
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--deterministic", o.deterministic, "omit timing and parallelism from reports");
  };
  auto add_range = [&](CLI::App* cmd) {
    cmd->add_option("--period", o.period, "single period")->check(positive);
    cmd->add_option("--max-period", o.max_period, "all periods up to N")->check(positive);
  };
  auto add_jobs = [&](CLI::App* cmd) { cmd->add_option("--jobs", o.jobs, "worker threads")->check(positive); };

  auto* enumerate = app.add_subcommand("enumerate", "write the pattern corpus of a period");
  add_io(enumerate, false);
  add_range(enumerate);
  auto* classify = app.add_subcommand("classify", "classification record per pattern");
  add_io(classify, true);
  add_range(classify);
  add_jobs(classify);
  auto* conjugate = app.add_subcommand("conjugate", "conjugacy to the rotation orbit per twist pattern");
  add_io(conjugate, true);
  add_range(conjugate);
  add_jobs(conjugate);
  auto* verify = app.add_subcommand("verify", "run the theorem suite over enumerated corpora");
  add_io(verify, false);
  add_range(verify);
  add_jobs(verify);
  verify->add_option("--min-period", o.min_period, "smallest period")->check(positive);
  verify->add_option("--checks", o.checks, "comma-separated check names");
  verify->add_option("--oracle-multiplier", o.oracle_multiplier, "twist oracle period bound in units of q")
      ->check(positive);
  auto* graph = app.add_subcommand("graph", "arrow list of the oriented graph per pattern");
  add_io(graph, true);
  add_range(graph);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (*enumerate) return run_enumerate(o);
    if (*classify) return run_classify(o);
    if (*conjugate) return run_conjugate(o);
    if (*verify) return run_verify(o);
    return run_graph(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
