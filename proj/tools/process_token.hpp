#pragma once

// Process and class selectors on the command line: "name[:key=value,...]".
//
//   white-noise | wn
//   fgn[:hurst=H]            fbm[:hurst=H]
//   logistic[:a=A,x0=X]
//   noisy-logistic[:a=A,eps=E,x0=X,a-max=B]
//   noisy-cubic[:amp=A,y0=Y]  noisy-skew-tent[:amp=A,y0=Y]
//   reference                white noise, fGn(0.75), fBm(0.2, 0.5, 0.7), noisy cubic, noisy skew tent

#include <map>
#include <string>
#include <vector>

#include "ordent/complexity.hpp"
#include "ordent/process.hpp"

namespace ordent::cli {

using Params = std::map<std::string, double>;

/// Throws std::invalid_argument for unknown names or keys.
ProcessKind make_process(const std::string& name, const Params& params);
ProcessKind parse_process(const std::string& token);
/// Expands "reference" and keeps the order otherwise.
std::vector<ProcessKind> parse_processes(const std::vector<std::string>& tokens);

/// exponential[:c=C] | factorial | sub-factorial:c=C
ComplexityClass parse_class(const std::string& token);

/// "3..7", "3-7", "3,5,7" or a mix; duplicates removed, ascending.
std::vector<int> parse_int_list(const std::vector<std::string>& items);

double parse_number(const std::string& text);

}  // namespace ordent::cli
