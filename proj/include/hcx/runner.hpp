#pragma once

// Evaluation driver behind the command line: picks sample points, evaluates
// every invariant and class verdict, optionally compares against the
// closed-form expectations and cross-checks the jets against finite
// differences, and renders one record per (example, point, structure).

#include "hcx/catalog.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hcx {

enum class OutputFormat { Table, Records };

struct RunConfig {
  /// Catalog ids; empty together with an empty manifold_file means all.
  std::vector<std::string> examples;
  /// Declarative manifold file used instead of catalog ids.
  std::string manifold_file;
  /// Restrict to one named structure (default: every structure).
  std::string structure;
  /// Explicit points; take precedence over grid and random.
  std::vector<Point> points;
  /// N samples per axis over the example's box (points outside the guard dropped).
  int grid = 0;
  /// N seeded pseudo-random points inside the box and the guard.
  int random = 0;
  std::uint64_t seed = 1;
  std::optional<double> tol_zero;
  std::optional<double> tol_match;
  bool compare = false;
  /// Compare against the printed closed forms even where an erratum exists.
  bool printed = false;
  bool fd_check = false;
  OutputFormat format = OutputFormat::Table;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Ordered flat key space: "norm_N.1", "tau_star.2", "class.kaehler.1", ...
using Record = nlohmann::ordered_json;

struct RunResult {
  /// Sorted by example id, then point index, then structure order.
  std::vector<Record> records;
  /// Validation, domain and evaluation errors, each naming the example.
  std::vector<std::string> errors;
  /// Human-readable comparison failures "example/structure point k: key ...".
  std::vector<std::string> failures;
  /// 0 all good, 1 some comparison failed, 2 validation or domain error.
  int exit_code() const;
};

/// Deterministic points for one example: explicit > grid > random > defaults.
std::vector<Point> sample_points(const Example& ex, const RunConfig& cfg);

/// Portable pseudo-random points in the box satisfying the guard: the same
/// (seed, example id) always yields the same points.
std::vector<Point> random_points(const Example& ex, int count, std::uint64_t seed);

/// Tolerances after applying overrides.
Tolerances effective_tolerances(const Example& ex, const RunConfig& cfg);

/// Max deviation of the metric jets from central finite differences at p
/// (gradient at step 1e-4, Hessian at step 1e-3, each refined by one
/// Richardson step with the halved step).
struct FdCheck {
  double grad = 0.0;
  double hess = 0.0;
};
FdCheck fd_check(const Example& ex, const Point& p);

/// Value of an expectation key ("R.1221", "ricci.22", "norm_F.2",
/// "tau_star.1", "nu", ...) in a record. Throws ValidationError for an
/// unknown key.
double lookup_invariant(const Record& rec, const FrameSnapshot& snap, const std::string& key);

/// Whether `key` names a quantity lookup_invariant understands.
bool known_invariant(const std::string& key);
/// Whether `key` names a class verdict ("kaehler.1", "in_W", ...).
bool known_class(const std::string& key);

/// Match rule: |computed - expected| <= zero when expected == 0, otherwise
/// <= match * |expected|.
bool values_match(double computed, double expected, const Tolerances& tol);

/// Evaluates already compiled examples.
RunResult run(const std::vector<Example>& examples, const RunConfig& cfg);
/// Compiles the configured examples (catalog ids or manifold file) and runs
/// them; compilation errors land in RunResult::errors.
RunResult run(const RunConfig& cfg);

/// Renders numbers exactly as the records do.
std::string render_value(const nlohmann::ordered_json& v);
void write_records(std::ostream& os, const RunResult& r);
void write_table(std::ostream& os, const RunResult& r);

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Seeded random points per entry in addition to the default points.
  int random_points = 2;
  unsigned threads = 0;
  OutputFormat format = OutputFormat::Table;
};

struct VerifySummary {
  int examples = 0;
  int passed = 0;
  std::vector<std::string> failed; // ids
  int exit_code = 0;
};

/// Runs every entry with compare, fd-check and identity checks, then the
/// theorem cross-checks; prints an example x invariant-group matrix.
VerifySummary verify_all(const std::vector<ManifoldSpec>& specs, const VerifyOptions& opt, std::ostream& out);
/// The catalog entries.
VerifySummary verify_all(const VerifyOptions& opt, std::ostream& out);

} // namespace hcx
