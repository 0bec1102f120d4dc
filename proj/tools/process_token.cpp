#include "process_token.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>

namespace ordent::cli {

namespace {

std::pair<std::string, Params> split_token(const std::string& token) {
  const auto colon = token.find(':');
  std::string name = token.substr(0, colon);
  Params params;
  if (colon == std::string::npos) return {name, params};
  std::string rest = token.substr(colon + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto comma = rest.find(',', start);
    const std::string kv = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("expected key=value in '" + token + "'");
    params[kv.substr(0, eq)] = parse_number(kv.substr(eq + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return {name, params};
}

// Looks up the first present alias and marks it consumed.
struct Reader {
  const Params& params;
  std::set<std::string> used;

  template <typename T>
  void get(std::initializer_list<const char*> keys, T& target) {
    for (const char* k : keys) {
      const auto it = params.find(k);
      if (it != params.end()) {
        target = it->second;
        used.insert(k);
        return;
      }
    }
  }
  void finish(const std::string& name) const {
    for (const auto& [k, v] : params) {
      if (!used.count(k)) throw std::invalid_argument("unknown parameter '" + k + "' for " + name);
    }
  }
};

}  // namespace

double parse_number(const std::string& text) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v)) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return v;
}

ProcessKind make_process(const std::string& name, const Params& params) {
  Reader r{params, {}};
  ProcessKind kind;
  if (name == "white-noise" || name == "wn") {
    kind = WhiteNoise{};
  } else if (name == "fgn") {
    FractionalGaussianNoise p;
    r.get({"hurst", "H"}, p.hurst);
    kind = p;
  } else if (name == "fbm") {
    FractionalBrownianMotion p;
    r.get({"hurst", "H"}, p.hurst);
    kind = p;
  } else if (name == "logistic") {
    Logistic p;
    r.get({"a"}, p.a);
    r.get({"x0"}, p.x0);
    kind = p;
  } else if (name == "noisy-logistic") {
    NoisyLogistic p;
    r.get({"a"}, p.a);
    r.get({"eps"}, p.eps);
    r.get({"x0"}, p.x0);
    double a_max = std::nan("");
    r.get({"a-max", "a_max"}, a_max);
    if (!std::isnan(a_max)) p.a_sweep_max = a_max;
    kind = p;
  } else if (name == "noisy-cubic" || name == "cubic") {
    NoisyCubic p;
    r.get({"amp", "amplitude"}, p.amplitude);
    r.get({"y0"}, p.y0);
    kind = p;
  } else if (name == "noisy-skew-tent" || name == "skew-tent") {
    NoisySkewTent p;
    r.get({"amp", "amplitude"}, p.amplitude);
    r.get({"y0"}, p.y0);
    kind = p;
  } else {
    throw std::invalid_argument("unknown process '" + name + "'");
  }
  r.finish(name);
  return kind;
}

ProcessKind parse_process(const std::string& token) {
  const auto [name, params] = split_token(token);
  return make_process(name, params);
}

std::vector<ProcessKind> parse_processes(const std::vector<std::string>& tokens) {
  std::vector<ProcessKind> out;
  for (const auto& t : tokens) {
    if (t == "reference") {
      out.insert(out.end(), {WhiteNoise{}, FractionalGaussianNoise{0.75}, FractionalBrownianMotion{0.2},
                             FractionalBrownianMotion{0.5}, FractionalBrownianMotion{0.7}, NoisyCubic{},
                             NoisySkewTent{}});
    } else {
      out.push_back(parse_process(t));
    }
  }
  if (out.empty()) throw std::invalid_argument("no process given");
  return out;
}

ComplexityClass parse_class(const std::string& token) {
  const auto [name, params] = split_token(token);
  Reader r{params, {}};
  double c = 1.0;
  r.get({"c"}, c);
  r.finish(name);
  if (name == "exponential" || name == "exp") return ComplexityClass::exponential(c);
  if (name == "factorial" || name == "fac") {
    if (c != 1.0) throw std::invalid_argument("the factorial class has c = 1; use sub-factorial:c=...");
    return ComplexityClass::factorial();
  }
  if (name == "sub-factorial" || name == "sub") {
    if (!params.count("c")) throw std::invalid_argument("sub-factorial needs c, e.g. sub-factorial:c=0.5");
    return ComplexityClass::sub_factorial(c);
  }
  throw std::invalid_argument("unknown class '" + name + "'");
}

std::vector<int> parse_int_list(const std::vector<std::string>& items) {
  auto to_int = [](const std::string& s) {
    int v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
  };
  std::set<int> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const auto comma = item.find(',', start);
      const std::string part = item.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      auto dots = part.find("..");
      std::size_t sep_len = 2;
      if (dots == std::string::npos) {
        dots = part.find('-', 1);
        sep_len = 1;
      }
      if (dots == std::string::npos) {
        out.insert(to_int(part));
      } else {
        const int lo = to_int(part.substr(0, dots)), hi = to_int(part.substr(dots + sep_len));
        if (hi < lo) throw std::invalid_argument("empty range '" + part + "'");
        for (int v = lo; v <= hi; ++v) out.insert(v);
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return {out.begin(), out.end()};
}

}  // namespace ordent::cli
