#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "degbell/io.hpp"
#include "degbell/rational.hpp"
#include "degbell/series.hpp"

namespace degbell {

/// Caps every default series order when set to a non-negative integer.
inline constexpr const char* kSeriesOrderCapEnv = "DEGBELL_MAX_SERIES_ORDER";

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Table for one family over rows 0..n_max. With lambda absent values are
/// ASCII lambda-polynomials, otherwise exact rationals at that lambda.
/// Families: stirling1, stirling2, bracket, bernoulli (linear), bell (the
/// coefficient triangle plus one x = 1 row per n with k left empty).
/// Throws std::invalid_argument for an unknown family or n_max < 0.
Table make_table(std::string_view family, int n_max, const std::optional<Rational>& lambda);

/// Named generating series: elam (e_lambda(t)), loglam (log_lambda(1+t)),
/// bellgf (exp(x(e_lambda(t)-1))), bernoulligf (t/(e_lambda(t)-1)).
/// Throws std::invalid_argument for an unknown name.
Series make_series(std::string_view which, std::size_t order);

/// Applies the environment cap to a default order.
std::size_t capped_default_order(std::size_t order);

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degbell
