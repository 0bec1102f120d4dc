#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ordent/census.hpp"
#include "ordent/complexity.hpp"
#include "ordent/errors.hpp"
#include "ordent/logistic.hpp"
#include "ordent/process.hpp"
#include "ordent/series_io.hpp"
#include "process_token.hpp"

namespace ordent::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string fmt(double v) {
  std::array<char, 32> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::string ranks_text(const OrdinalPattern& p) {
  std::string s;
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s;
}

// Writes to --out when given, otherwise to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback, bool binary = false) : fallback_(fallback), path_(path) {
    if (path.empty()) return;
    file_.open(path, binary ? std::ios::out | std::ios::binary : std::ios::out);
    if (!file_) throw IoError("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
  bool to_file() const { return file_.is_open(); }
  void close() {
    if (!file_.is_open()) return;
    file_.close();
    if (file_.fail()) throw IoError("failed writing " + path_);
  }

 private:
  std::ostream& fallback_;
  std::string path_;
  std::ofstream file_;
};

struct SeriesOptions {
  std::string input;
  std::string process;
  std::size_t t = 100000;
  std::uint64_t seed = 0;
  std::optional<std::size_t> transient;
};

void add_series_options(CLI::App* app, SeriesOptions& o, bool allow_input) {
  if (allow_input) app->add_option("--input", o.input, "Series file (CSV or binary)");
  app->add_option("--process", o.process, "Process selector, e.g. fbm:hurst=0.2");
  app->add_option("--t", o.t, "Series length")->check(CLI::PositiveNumber);
  app->add_option("--seed", o.seed, "Seed of the first realization");
  app->add_option("--transient", o.transient, "Discarded prefix (maps default to 1000)");
}

ProcessSpec make_spec(const ProcessKind& kind, const SeriesOptions& o) {
  ProcessSpec spec{kind, o.t, o.seed, o.transient};
  validate(spec);
  return spec;
}

// One input series, or a generated one.
std::pair<TimeSeries, std::string> load_series(const SeriesOptions& o) {
  if (!o.input.empty() && !o.process.empty()) throw std::invalid_argument("give either --input or --process");
  if (!o.input.empty()) return {read_series_file(o.input), o.input};
  if (o.process.empty()) throw std::invalid_argument("give --input or --process");
  const auto spec = make_spec(parse_process(o.process), o);
  return {generate(spec), describe(spec.kind)};
}

void csv_header(std::ostream& out, std::initializer_list<std::string> extra) {
  out << "# schema_version=" << kSchemaVersion << '\n';
  for (const auto& e : extra) out << "# " << e << '\n';
}

// --- generate --------------------------------------------------------------

struct GenerateOptions {
  SeriesOptions series;
  std::optional<double> hurst, a, x0, eps, amplitude, y0, a_max;
  std::string out;
  std::string format = "csv";
};

int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
  std::string token = o.series.process.empty() ? "white-noise" : o.series.process;
  auto add = [&](const char* key, const std::optional<double>& v) {
    if (!v) return;
    token += (token.find(':') == std::string::npos ? ":" : ",");
    token += std::string(key) + "=" + fmt(*v);
  };
  add("hurst", o.hurst);
  add("a", o.a);
  add("x0", o.x0);
  add("eps", o.eps);
  add("amp", o.amplitude);
  add("y0", o.y0);
  add("a-max", o.a_max);

  const auto spec = make_spec(parse_process(token), o.series);
  const TimeSeries ts = generate(spec);

  Sink sink(o.out, out, o.format == "bin");
  if (o.format == "bin") {
    write_series_binary(sink.stream(), ts);
  } else {
    const std::vector<std::string> comments = {
        "schema_version=" + std::to_string(kSchemaVersion),
        "process=" + describe(spec.kind),
        "T=" + std::to_string(ts.size()),
        "seed=" + std::to_string(spec.seed),
        "transient=" + std::to_string(effective_transient(spec)),
    };
    write_series_csv(sink.stream(), ts, comments);
  }
  const bool to_file = sink.to_file();
  sink.close();

  const auto [lo, hi] = std::minmax_element(ts.samples().begin(), ts.samples().end());
  std::ostream& summary = to_file ? out : err;
  summary << "T=" << ts.size() << " min=" << fmt(*lo) << " max=" << fmt(*hi) << " seed=" << spec.seed
          << " process=" << describe(spec.kind) << '\n';
  return 0;
}

// --- census ----------------------------------------------------------------

struct CensusOptions {
  SeriesOptions series;
  int L = 3;
  bool report_missing = false;
  std::string format = "csv";
  std::string out;
};

int cmd_census(const CensusOptions& o, std::ostream& out) {
  check_pattern_length(o.L);
  if (o.report_missing && o.L > kDenseCountMaxLength) {
    throw std::invalid_argument("--report-missing supports L <= " + std::to_string(kDenseCountMaxLength));
  }
  const auto [ts, source] = load_series(o.series);
  const PatternDistribution d = census(ts, o.L);
  const double ln_fact = std::lgamma(o.L + 1.0);
  std::vector<PatternCode> missing;
  if (o.report_missing) missing = forbidden_patterns(d);

  Sink sink(o.out, out);
  auto& s = sink.stream();
  if (o.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["source"] = source;
    j["L"] = o.L;
    j["T"] = ts.size();
    j["allowed_count"] = d.allowed_count();
    j["ln_L_factorial"] = ln_fact;
    j["patterns"] = Json::array();
    for (const auto& [code, n] : d.observed()) {
      j["patterns"].push_back({{"code", code},
                               {"pattern", decode({code, o.L}).ranks()},
                               {"count", n},
                               {"probability", d.prob(code)}});
    }
    if (o.report_missing) {
      j["missing"] = Json::array();
      for (const auto& c : missing) j["missing"].push_back(decode(c).ranks());
      j["caveat"] = kMissingPatternCaveat;
    }
    s << j.dump(2) << '\n';
  } else {
    csv_header(s, {"source=" + source, "L=" + std::to_string(o.L) + ",T=" + std::to_string(ts.size()) +
                                           ",allowed_count=" + std::to_string(d.allowed_count()) +
                                           ",ln_L_factorial=" + fmt(ln_fact)});
    if (o.report_missing) {
      s << "# missing_count=" << missing.size() << '\n';
      for (const auto& c : missing) s << "# missing=" << ranks_text(decode(c)) << '\n';
      s << "# note: " << kMissingPatternCaveat << '\n';
    }
    s << "code,pattern,count,probability\n";
    for (const auto& [code, n] : d.observed()) {
      s << code << ',' << ranks_text(decode({code, o.L})) << ',' << n << ',' << fmt(d.prob(code)) << '\n';
    }
  }
  sink.close();
  return 0;
}

// --- pc-curve --------------------------------------------------------------

struct CurveOptions {
  std::vector<std::string> processes{"reference"};
  std::vector<std::string> L;
  std::vector<std::string> t_grid;
  std::optional<std::size_t> t_max;
  std::size_t t_step = 500;
  int realizations = 10;
  std::uint64_t seed = 0;
  std::optional<std::size_t> transient;
  std::string stop = "all-or-stagnant";
  std::string format = "csv";
  std::string out;
};

std::vector<std::size_t> grid_for(const CurveOptions& o, int L) {
  std::vector<std::size_t> grid;
  if (!o.t_grid.empty()) {
    for (int t : parse_int_list(o.t_grid)) {
      if (t >= L) grid.push_back(static_cast<std::size_t>(t));
    }
  } else {
    if (!o.t_max) throw std::invalid_argument("give --t-grid or --t-max");
    if (o.t_step == 0) throw std::invalid_argument("--t-step must be positive");
    grid.push_back(static_cast<std::size_t>(L));
    for (std::size_t t = o.t_step; t <= *o.t_max; t += o.t_step) {
      if (t > grid.back()) grid.push_back(t);
    }
    if (grid.back() != *o.t_max && *o.t_max > grid.back()) grid.push_back(*o.t_max);
  }
  if (grid.empty()) throw std::invalid_argument("no T in the grid is >= L=" + std::to_string(L));
  return grid;
}

int cmd_pc_curve(const CurveOptions& o, std::ostream& out) {
  const auto kinds = parse_processes(o.processes);
  const auto Ls = parse_int_list(o.L);
  for (int L : Ls) check_pattern_length(L);
  if (o.realizations < 1) throw std::invalid_argument("--realizations must be >= 1");
  const CurveStop stop = o.stop == "never" ? CurveStop::kNever
                         : o.stop == "all" ? CurveStop::kAllSeen
                                           : CurveStop::kAllSeenOrStagnant;
  // validate everything before the first computation
  std::vector<std::vector<std::size_t>> grids;
  for (int L : Ls) grids.push_back(grid_for(o, L));
  for (const auto& k : kinds) validate(ProcessSpec{k, 2, o.seed, o.transient});

  Json rows = Json::array();
  std::ostringstream csv;
  csv << "process,L,T,g_mean,g_stddev\n";
  for (const auto& kind : kinds) {
    for (std::size_t l = 0; l < Ls.size(); ++l) {
      const ProcessSpec spec{kind, grids[l].back(), o.seed, o.transient};
      const auto curve = finite_pc_curve(spec, Ls[l], grids[l], o.realizations, stop);
      for (std::size_t k = 0; k < curve.t_grid.size(); ++k) {
        csv << describe(kind) << ',' << Ls[l] << ',' << curve.t_grid[k] << ',' << fmt(curve.g_mean[k]) << ','
            << fmt(curve.g_stddev[k]) << '\n';
        rows.push_back({{"process", describe(kind)},
                        {"L", Ls[l]},
                        {"T", curve.t_grid[k]},
                        {"g_mean", curve.g_mean[k]},
                        {"g_stddev", curve.g_stddev[k]}});
      }
    }
  }

  Sink sink(o.out, out);
  if (o.format == "json") {
    Json j{{"schema_version", kSchemaVersion},
           {"realizations", o.realizations},
           {"seed", o.seed},
           {"stop", o.stop},
           {"rows", rows}};
    sink.stream() << j.dump(2) << '\n';
  } else {
    csv_header(sink.stream(), {"realizations=" + std::to_string(o.realizations), "seed=" + std::to_string(o.seed),
                               "stop=" + o.stop});
    sink.stream() << csv.str();
  }
  sink.close();
  return 0;
}

// --- entropy / rate --------------------------------------------------------

struct EntropyOptions {
  SeriesOptions series;
  std::vector<std::string> processes;
  std::vector<std::string> L{"3..7"};
  std::vector<double> alphas{1.0};
  std::string cls = "factorial";
  int realizations = 1;
  std::string format = "csv";
  std::string out;
};

struct SourceRates {
  std::string source;
  std::vector<RateEstimate> rates;  // one per alpha
};

std::vector<SourceRates> compute_rates(const EntropyOptions& o, const ComplexityClass& cls,
                                       const std::vector<double>& alphas, const std::vector<int>& Ls) {
  for (int L : Ls) check_pattern_length(L);
  for (double a : alphas) {
    if (!(a >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
  }
  if (o.realizations < 1) throw std::invalid_argument("--realizations must be >= 1");
  std::vector<SourceRates> out;
  if (!o.series.input.empty()) {
    if (!o.processes.empty()) throw std::invalid_argument("give either --input or --process");
    const TimeSeries ts = read_series_file(o.series.input);
    SourceRates sr{o.series.input, {}};
    for (double a : alphas) {
      RateEstimate e;
      e.alpha = a;
      e.L = Ls;
      for (int L : Ls) {
        e.value.push_back(perm_entropy(census(ts, L), cls, a) / L);
        e.stddev.push_back(0.0);
        const std::size_t windows = ts.size() - static_cast<std::size_t>(L) + 1;
        if (static_cast<double>(windows) < 10.0 * static_cast<double>(factorial(L))) {
          e.warnings.push_back("L=" + std::to_string(L) + ": " + std::to_string(windows) +
                               " windows is fewer than 10*L!; estimate is biased low");
        }
      }
      e.final_value = e.value.back();
      sr.rates.push_back(std::move(e));
    }
    out.push_back(std::move(sr));
    return out;
  }
  const auto kinds = parse_processes(o.processes.empty() ? std::vector<std::string>{"reference"} : o.processes);
  std::vector<ProcessSpec> specs;
  for (const auto& k : kinds) specs.push_back(make_spec(k, o.series));
  for (const auto& spec : specs) {
    out.push_back({describe(spec.kind), entropy_rates(spec, cls, alphas, Ls, o.realizations)});
  }
  return out;
}

std::vector<double> sorted_alphas(std::vector<double> a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.empty()) throw std::invalid_argument("no alpha given");
  return a;
}

int cmd_entropy(const EntropyOptions& o, std::ostream& out) {
  const auto cls = parse_class(o.cls);
  const auto alphas = sorted_alphas(o.alphas);
  const auto Ls = parse_int_list(o.L);
  const auto results = compute_rates(o, cls, alphas, Ls);

  Sink sink(o.out, out);
  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& sr : results) {
      for (std::size_t l = 0; l < Ls.size(); ++l) {
        for (const auto& e : sr.rates) {
          rows.push_back({{"source", sr.source},
                          {"class", cls.name()},
                          {"L", Ls[l]},
                          {"alpha", e.alpha},
                          {"z", e.value[l] * Ls[l]},
                          {"z_over_L", e.value[l]},
                          {"z_over_L_stddev", e.stddev[l]}});
        }
      }
    }
    Json j{{"schema_version", kSchemaVersion}, {"realizations", o.realizations}, {"rows", rows}};
    sink.stream() << j.dump(2) << '\n';
  } else {
    auto& s = sink.stream();
    csv_header(s, {"class=" + cls.name(), "realizations=" + std::to_string(o.realizations)});
    s << "source,class,L,alpha,z,z_over_L,z_over_L_stddev\n";
    for (const auto& sr : results) {
      for (std::size_t l = 0; l < Ls.size(); ++l) {
        for (const auto& e : sr.rates) {
          s << sr.source << ',' << cls.name() << ',' << Ls[l] << ',' << fmt(e.alpha) << ',' << fmt(e.value[l] * Ls[l])
            << ',' << fmt(e.value[l]) << ',' << fmt(e.stddev[l]) << '\n';
        }
      }
    }
  }
  sink.close();
  return 0;
}

int cmd_rate(const EntropyOptions& o, std::ostream& out) {
  const auto cls = parse_class(o.cls);
  const auto alphas = sorted_alphas(o.alphas);
  const auto Ls = parse_int_list(o.L);
  const auto results = compute_rates(o, cls, alphas, Ls);

  Sink sink(o.out, out);
  if (o.format == "json") {
    Json estimates = Json::array();
    for (const auto& sr : results) {
      for (const auto& e : sr.rates) {
        estimates.push_back({{"source", sr.source},
                             {"class", cls.name()},
                             {"alpha", e.alpha},
                             {"L", e.L},
                             {"value", e.value},
                             {"stddev", e.stddev},
                             {"final_value", e.final_value},
                             {"warnings", e.warnings}});
      }
    }
    Json j{{"schema_version", kSchemaVersion}, {"realizations", o.realizations}, {"estimates", estimates}};
    sink.stream() << j.dump(2) << '\n';
  } else {
    auto& s = sink.stream();
    csv_header(s, {"class=" + cls.name(), "realizations=" + std::to_string(o.realizations)});
    for (const auto& sr : results) {
      for (const auto& e : sr.rates) {
        s << "# final source=" << sr.source << " alpha=" << fmt(e.alpha) << " L=" << e.L.back()
          << " value=" << fmt(e.final_value) << '\n';
        for (const auto& w : e.warnings) s << "# warning source=" << sr.source << " alpha=" << fmt(e.alpha) << ": " << w << '\n';
      }
    }
    s << "source,class,alpha,L,value,stddev\n";
    for (const auto& sr : results) {
      for (const auto& e : sr.rates) {
        for (std::size_t l = 0; l < e.L.size(); ++l) {
          s << sr.source << ',' << cls.name() << ',' << fmt(e.alpha) << ',' << e.L[l] << ',' << fmt(e.value[l]) << ','
            << fmt(e.stddev[l]) << '\n';
        }
      }
    }
  }
  sink.close();
  return 0;
}

// --- classify --------------------------------------------------------------

struct ClassifyOptions {
  SeriesOptions series;
  std::vector<std::string> L{"3..7"};
  int realizations = 1;
  std::string format = "csv";
  std::string out;
};

// "L,ln_A" rows; '#' comments and one optional header line.
std::pair<std::vector<int>, std::vector<double>> read_growth_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<int> L;
  std::vector<double> y;
  std::string line;
  std::size_t lineno = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (!seen_data && !line.empty() && std::isalpha(static_cast<unsigned char>(line.front()))) {
      seen_data = true;  // header
      continue;
    }
    seen_data = true;
    if (comma == std::string::npos) throw ParseError("expected 'L,ln_A'", lineno);
    try {
      const double l = parse_number(line.substr(0, comma));
      if (l != std::floor(l) || l < 1 || l > 1000) throw std::invalid_argument("bad L");
      L.push_back(static_cast<int>(l));
      y.push_back(parse_number(line.substr(comma + 1)));
    } catch (const std::invalid_argument&) {
      throw ParseError("expected 'L,ln_A', got '" + line + "'", lineno);
    }
  }
  return {L, y};
}

int cmd_classify(const ClassifyOptions& o, std::ostream& out) {
  std::vector<int> L;
  std::vector<double> y;
  std::string source;
  if (!o.series.input.empty()) {
    if (!o.series.process.empty()) throw std::invalid_argument("give either --input or --process");
    std::tie(L, y) = read_growth_table(o.series.input);
    source = o.series.input;
  } else {
    if (o.series.process.empty()) throw std::invalid_argument("give --input or --process");
    L = parse_int_list(o.L);
    if (o.realizations < 1) throw std::invalid_argument("--realizations must be >= 1");
    const auto spec = make_spec(parse_process(o.series.process), o.series);
    source = describe(spec.kind);
    for (int l : L) {
      check_pattern_length(l);
      const std::size_t grid[] = {spec.length};
      y.push_back(finite_pc_curve(spec, l, grid, o.realizations, CurveStop::kAllSeen).g_mean.back());
    }
  }
  const GrowthFit fit = classify_growth(L, y);

  Sink sink(o.out, out);
  if (o.format == "json") {
    Json fits = Json::array();
    for (const auto& f : fit.fits) fits.push_back({{"model", f.model}, {"c", f.c}, {"rss", f.rss}});
    Json data = Json::array();
    for (std::size_t i = 0; i < L.size(); ++i) data.push_back({{"L", L[i]}, {"ln_A", y[i]}});
    Json j{{"schema_version", kSchemaVersion}, {"source", source},  {"kind", to_string(fit.kind)},
           {"c_hat", fit.c_hat},              {"best_model", fit.best_model}, {"fits", fits},
           {"notes", fit.notes},              {"data", data}};
    sink.stream() << j.dump(2) << '\n';
  } else {
    auto& s = sink.stream();
    csv_header(s, {"source=" + source, "kind=" + to_string(fit.kind) + ",c_hat=" + fmt(fit.c_hat) +
                                           ",best_model=" + fit.best_model});
    for (const auto& n : fit.notes) s << "# note: " << n << '\n';
    for (std::size_t i = 0; i < L.size(); ++i) s << "# data L=" << L[i] << " ln_A=" << fmt(y[i]) << '\n';
    s << "model,c,rss\n";
    for (const auto& f : fit.fits) s << f.model << ',' << fmt(f.c) << ',' << fmt(f.rss) << '\n';
  }
  sink.close();
  return 0;
}

// --- oracle ----------------------------------------------------------------

struct OracleOptions {
  int L = 3;
  std::string what = "cells";
  std::string format = "json";
  std::string out;
};

int cmd_oracle(const OracleOptions& o, std::ostream& out) {
  Sink sink(o.out, out);
  auto& s = sink.stream();
  if (o.what == "cells") {
    const auto cells = ordinal_cells(o.L);
    if (o.format == "json") {
      write_cells_json(s, cells);
    } else {
      csv_header(s, {"L=" + std::to_string(o.L)});
      s << "code,pattern,lo,hi,lo_closed,hi_closed,measure\n";
      for (const auto& c : cells.cells) {
        for (const auto& iv : c.intervals) {
          s << encode(c.pattern).value << ',' << ranks_text(c.pattern) << ',' << fmt(iv.lo) << ',' << fmt(iv.hi) << ','
            << iv.lo_closed << ',' << iv.hi_closed << ',' << fmt(measure_of(iv)) << '\n';
        }
      }
    }
  } else if (o.what == "transitions") {
    const auto m = exact_transition_probs(o.L);
    if (o.format == "json") {
      write_transitions_json(s, m);
    } else {
      csv_header(s, {"L=" + std::to_string(o.L)});
      s << "from,to,p\n";
      for (const auto& [from, row] : m.rows) {
        for (const auto& [to, p] : row) {
          s << ranks_text(decode({from, o.L})) << ',' << ranks_text(decode({to, o.L})) << ',' << fmt(p) << '\n';
        }
      }
    }
  } else {
    const auto probs = exact_pattern_probs(o.L);
    if (o.format == "json") {
      Json rows = Json::array();
      for (const auto& [code, p] : probs) {
        rows.push_back({{"code", code}, {"pattern", decode({code, o.L}).ranks()}, {"probability", p}});
      }
      Json j{{"schema_version", kSchemaVersion}, {"L", o.L}, {"patterns", rows}};
      s << j.dump(2) << '\n';
    } else {
      csv_header(s, {"L=" + std::to_string(o.L)});
      s << "code,pattern,probability\n";
      for (const auto& [code, p] : probs) s << code << ',' << ranks_text(decode({code, o.L})) << ',' << fmt(p) << '\n';
    }
  }
  sink.close();
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordinal-pattern statistics, generalized permutation entropies and complexity classes", "ordent"};
  app.require_subcommand(1);
  const auto csv_json = CLI::IsMember({"csv", "json"});

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Generate a seeded series");
  add_series_options(g, gen.series, false);
  g->add_option("--hurst", gen.hurst);
  g->add_option("--a", gen.a);
  g->add_option("--x0", gen.x0);
  g->add_option("--eps", gen.eps);
  g->add_option("--amplitude", gen.amplitude);
  g->add_option("--y0", gen.y0);
  g->add_option("--a-max", gen.a_max, "Upper end of the a sweep for noisy-logistic");
  g->add_option("--out", gen.out);
  g->add_option("--format", gen.format)->check(CLI::IsMember({"csv", "bin"}));

  CensusOptions cen;
  auto* c = app.add_subcommand("census", "Pattern counts of one series");
  add_series_options(c, cen.series, true);
  c->add_option("--L", cen.L, "Pattern length")->required();
  c->add_flag("--report-missing", cen.report_missing, "List patterns never observed");
  c->add_option("--format", cen.format)->check(csv_json);
  c->add_option("--out", cen.out);

  CurveOptions cur;
  auto* p = app.add_subcommand("pc-curve", "Finite complexity curves g(L,T)");
  p->add_option("--process", cur.processes, "Process selectors (repeatable; 'reference' for the standard set)");
  p->add_option("--L", cur.L, "Pattern lengths, e.g. 6 or 3..7")->required();
  p->add_option("--t-grid", cur.t_grid, "Comma-separated T values");
  p->add_option("--t-max", cur.t_max);
  p->add_option("--t-step", cur.t_step);
  p->add_option("--realizations", cur.realizations);
  p->add_option("--seed", cur.seed);
  p->add_option("--transient", cur.transient);
  p->add_option("--stop", cur.stop)->check(CLI::IsMember({"all-or-stagnant", "all", "never"}));
  p->add_option("--format", cur.format)->check(csv_json);
  p->add_option("--out", cur.out);

  EntropyOptions ent;
  auto* e = app.add_subcommand("entropy", "Class-tailored permutation entropies Z/L");
  EntropyOptions rat;
  auto* r = app.add_subcommand("rate", "Entropy-rate sequences Z(L)/L");
  for (auto [sub, opt] : {std::pair{e, &ent}, std::pair{r, &rat}}) {
    sub->add_option("--input", opt->series.input, "Series file (CSV or binary)");
    sub->add_option("--process", opt->processes, "Process selectors (repeatable)");
    sub->add_option("--t", opt->series.t)->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt->series.seed);
    sub->add_option("--transient", opt->series.transient);
    sub->add_option("--L", opt->L, "Pattern lengths, e.g. 3..7");
    sub->add_option("--alpha", opt->alphas, "Entropy orders (0 = topological)")->delimiter(',');
    sub->add_option("--class", opt->cls, "exponential[:c=C] | factorial | sub-factorial:c=C");
    sub->add_option("--realizations", opt->realizations);
    sub->add_option("--format", opt->format)->check(csv_json);
    sub->add_option("--out", opt->out);
  }

  ClassifyOptions cla;
  auto* k = app.add_subcommand("classify", "Fit the growth of ln A_L");
  add_series_options(k, cla.series, true);
  k->add_option("--L", cla.L, "Pattern lengths for --process");
  k->add_option("--realizations", cla.realizations);
  k->add_option("--format", cla.format)->check(csv_json);
  k->add_option("--out", cla.out);

  OracleOptions ora;
  auto* o = app.add_subcommand("oracle", "Exact results for the full logistic map");
  o->add_option("--L", ora.L);
  o->add_option("--what", ora.what)->check(CLI::IsMember({"cells", "transitions", "probs"}));
  o->add_option("--format", ora.format)->check(csv_json);
  o->add_option("--out", ora.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*g) return cmd_generate(gen, out, err);
    if (*c) return cmd_census(cen, out);
    if (*p) return cmd_pc_curve(cur, out);
    if (*e) return cmd_entropy(ent, out);
    if (*r) return cmd_rate(rat, out);
    if (*k) return cmd_classify(cla, out);
    if (*o) return cmd_oracle(ora, out);
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << '\n';
    return 1;
  } catch (const IoError& ex) {
    err << "I/O error: " << ex.what() << '\n';
    return 1;
  } catch (const InvalidData& ex) {
    err << "data error: " << ex.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ordent::cli
