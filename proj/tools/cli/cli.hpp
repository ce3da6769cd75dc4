#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "randext/closed_form.hpp"
#include "randext/compound_extremes.hpp"
#include "randext/numeric/random_source.hpp"

namespace randext::cli {

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

/// Bad flags, unknown model names, unreadable or malformed input files.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flags describing a model: a catalogue tag, or an (input, count, kind) triple.
struct ModelFlags {
  std::string model;
  std::string input;
  std::string count;
  std::string kind;
  double theta = 0.5;
  double lambda = 1.0;
  double a = 2.0;
  double k = 2.0;
};

/// A model resolved from flags; exactly one alternative is active.
class ModelSpec {
 public:
  static ModelSpec resolve(const ModelFlags& flags);

  [[nodiscard]] bool is_catalogue() const { return std::holds_alternative<ClosedFormModel>(model_); }
  [[nodiscard]] const ClosedFormModel* closed_form() const { return std::get_if<ClosedFormModel>(&model_); }
  /// The independent-count model, if there is one (empty for CSUG).
  [[nodiscard]] std::optional<ExtremeModel> extreme_model() const;

  [[nodiscard]] std::string name() const;
  [[nodiscard]] nlohmann::ordered_json parameters() const;
  [[nodiscard]] std::pair<double, double> support() const;

  [[nodiscard]] double pdf(double x, bool as_printed = false) const;
  [[nodiscard]] double cdf(double x) const;
  [[nodiscard]] double moment(int k) const;
  [[nodiscard]] double mgf(double t) const;
  [[nodiscard]] double mean() const;
  double sample(numeric::RandomSource& src) const;

 private:
  explicit ModelSpec(std::variant<ClosedFormModel, ExtremeModel> model, ModelFlags flags)
      : model_(std::move(model)), flags_(std::move(flags)) {}

  std::variant<ClosedFormModel, ExtremeModel> model_;
  ModelFlags flags_;
};

/// Rows of numbers plus `#`-prefixed metadata, written as CSV.
struct TableOutput {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_csv(const TableOutput& table, std::ostream& out);

/// 17 significant digits; round-trips exactly through strtod.
std::string format_number(double v);

/// `start:stop:step`, both ends included when step divides the range.
std::vector<double> parse_grid(const std::string& spec);

/// Reads one value per line (or a single-column CSV with optional header).
std::vector<double> read_sample_file(const std::string& path);

struct CheckOptions {
  std::uint64_t seed = 0;
  std::size_t draws = 100'000;
  bool as_printed = false;
};

/// Oracle cross-check report for one model.
nlohmann::ordered_json check(const ModelSpec& spec, const CheckOptions& options);

/// Density curves behind the SUG/CSUG figures: long format (theta, x, pdf),
/// 501 points across each model's support.
TableOutput figure(const std::string& name, const std::vector<double>& thetas);

/// Command-line entry point. Writes results to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace randext::cli
