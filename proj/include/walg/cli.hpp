#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "walg/reduction.hpp"

namespace walg {

using Json = nlohmann::ordered_json;

/// One entry of --checks; "theorem:10" overrides the degree for that check.
struct CheckRequest {
  std::string name;
  std::optional<int> degree;
};

struct JobConfig {
  std::string algebra = "sl2";     // "sl<n>" or a JSON file path
  std::string nilpotent;           // builtin orbit, partition, or vector; empty = file value
  std::string ell = "zero";        // "zero", "lagrangian-auto", "file", or vectors joined by ';'
  int max_degree = 6;
  std::vector<CheckRequest> checks;
  std::string output;              // empty: no file
  std::size_t threads = 1;
  std::uint64_t seed = 20240601;   // transversality sample points
};

/// Registry order is the execution order.
const std::vector<std::string>& check_registry();

/// "theorem,poisson:4" -> requests. Throws ConfigError for unknown names,
/// duplicates, or malformed degrees.
std::vector<CheckRequest> parse_checks(const std::string& text);

/// Throws ConfigError.
void validate(const JobConfig& config);

/// WALG_THREADS if set (ConfigError when malformed), else the hardware count.
std::size_t threads_from_env();

/// A loaded algebra with whatever nilpotent / ell data its source carries.
struct AlgebraSource {
  std::string name;
  LieAlgebra algebra;
  std::optional<std::size_t> sl_rank;  // n for the builtin sl_n
  std::optional<Vector> nilpotent;
  std::optional<std::vector<Vector>> ell;
};

/// Builtin "sl<n>" (2 <= n <= 8) or a JSON file
///   { "labels": [...], "brackets": [ {"i":.., "j":.., "value": [[k, "p/q"], ..]}, .. ],
///     "nilpotent": ["p/q", ..], "ell": [[..], ..] }   (last two optional).
AlgebraSource load_algebra(const std::string& spec);

/// "regular", "minimal" (E_1n), "[p1,p2,..]" (sl_n only); a combination of
/// labels such as "E12+E23" or "2*E12 - 1/2*H1"; or a tuple "(c1, .., cd)".
Vector parse_nilpotent(const AlgebraSource& src, const std::string& text);
/// A label combination or tuple.
Vector parse_vector(const LieAlgebra& g, const std::string& text);

/// Greedy Lagrangian: adjoin the earliest g(-1) basis vector that is
/// omega-orthogonal to the current span; if none qualifies before half
/// dimension is reached, the first basis vector of span^perp outside span.
std::vector<Vector> lagrangian_auto(const SymplecticData& symp);
/// The same greedy rule scanning g(-1) from the last basis vector.
std::vector<Vector> lagrangian_auto_reversed(const SymplecticData& symp);

/// Runs all requested checks. Throws ConfigError for bad configs; module
/// errors inside a check become a failed status with a witness.
Json run(const JobConfig& config);

/// Grading, triple, subalgebra and slice data for describe.
Json describe(const std::string& algebra, const std::string& nilpotent,
              const std::string& ell, int max_degree);

bool report_passed(const Json& report);
/// The report without its "timing" object.
Json strip_timing(Json report);

std::string render_report(const Json& report);
std::string render_description(const Json& description);

}  // namespace walg
