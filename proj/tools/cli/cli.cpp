#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "randext/error.hpp"
#include "randext/estimation.hpp"
#include "randext/numeric/quadrature.hpp"

namespace randext::cli {

namespace {

// Tolerances the check report is graded against.
constexpr double kNormalizationTol = 1e-8;
constexpr double kSeriesTol = 1e-8;
constexpr double kMomentTol = 1e-8;
constexpr double kZScoreTol = 4.0;
constexpr int kSeriesGridPoints = 999;

std::optional<InputDistribution> parse_input(const std::string& name, double a) {
  if (name == "uniform") return InputDistribution::uniform();
  if (name == "beta22") return InputDistribution::beta22();
  if (name == "arcsine") return InputDistribution::arcsine();
  if (name == "topp-leone" || name == "tl") return InputDistribution::topp_leone(a);
  return std::nullopt;
}

std::optional<CountDistribution> parse_count(const std::string& name, const ModelFlags& f) {
  if (name == "geometric") return CountDistribution::geometric(f.theta);
  if (name == "shifted-geometric") return CountDistribution::shifted_geometric(f.theta);
  if (name == "poisson") return CountDistribution::truncated_poisson(f.lambda);
  if (name == "zipf") return CountDistribution::zipf(f.k);
  return std::nullopt;
}

double parse_double(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE) throw UsageError("cannot parse " + what + " '" + text + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// ModelSpec

ModelSpec ModelSpec::resolve(const ModelFlags& flags) {
  const bool triple = !flags.input.empty() || !flags.count.empty() || !flags.kind.empty();
  if (!flags.model.empty()) {
    if (triple) throw UsageError("give either --model or --input/--count/--kind, not both");
    const auto entry = parse_catalogue(flags.model);
    if (!entry) throw UsageError("unknown model '" + flags.model + "'");
    return ModelSpec(ClosedFormModel(*entry, {flags.theta, flags.lambda, flags.a}), flags);
  }
  if (!triple) throw UsageError("specify a model with --model or --input/--count/--kind");
  if (flags.input.empty() || flags.count.empty() || flags.kind.empty())
    throw UsageError("--input, --count and --kind must be given together");
  const auto input = parse_input(flags.input, flags.a);
  if (!input) throw UsageError("unknown input distribution '" + flags.input + "'");
  const auto count = parse_count(flags.count, flags);
  if (!count) throw UsageError("unknown count distribution '" + flags.count + "'");
  if (flags.kind != "max" && flags.kind != "min") throw UsageError("--kind must be max or min");
  const ExtremeKind kind = flags.kind == "max" ? ExtremeKind::Max : ExtremeKind::Min;
  return ModelSpec(ExtremeModel{*input, *count, kind}, flags);
}

std::optional<ExtremeModel> ModelSpec::extreme_model() const {
  if (const auto* cf = closed_form()) return to_extreme_model(*cf);
  return std::get<ExtremeModel>(model_);
}

std::string ModelSpec::name() const {
  if (const auto* cf = closed_form()) return std::string(cf->info().tag);
  const auto& m = std::get<ExtremeModel>(model_);
  return m.input.name() + "/" + m.count.name() + "/" + to_string(m.kind);
}

nlohmann::ordered_json ModelSpec::parameters() const {
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  if (const auto* cf = closed_form()) {
    const auto& info = cf->info();
    if (info.uses_theta) p["theta"] = cf->theta();
    if (info.uses_lambda) p["lambda"] = cf->lambda();
    if (info.uses_a) p["a"] = cf->a();
    return p;
  }
  const auto& m = std::get<ExtremeModel>(model_);
  if (m.input.family() == InputFamily::ToppLeone) p["a"] = m.input.shape();
  switch (m.count.family()) {
    case CountFamily::Geometric:
    case CountFamily::ShiftedGeometric:
      p["theta"] = m.count.parameter();
      break;
    case CountFamily::TruncPoisson:
      p["lambda"] = m.count.parameter();
      break;
    case CountFamily::Zipf:
      p["k"] = m.count.parameter();
      break;
  }
  return p;
}

std::pair<double, double> ModelSpec::support() const {
  if (const auto* cf = closed_form()) return cf->support();
  return {0.0, 1.0};
}

double ModelSpec::pdf(double x, bool as_printed) const {
  if (const auto* cf = closed_form()) return as_printed ? cf_pdf_as_printed(*cf, x) : cf_pdf(*cf, x);
  return extreme_pdf(std::get<ExtremeModel>(model_), x);
}

double ModelSpec::cdf(double x) const {
  if (const auto* cf = closed_form()) return cf_cdf(*cf, x);
  return extreme_cdf(std::get<ExtremeModel>(model_), x);
}

double ModelSpec::moment(int k) const {
  if (const auto* cf = closed_form()) return cf_moment(*cf, k);
  return extreme_moment(std::get<ExtremeModel>(model_), k);
}

double ModelSpec::mgf(double t) const {
  if (const auto* cf = closed_form()) {
    if (cf->entry() == Catalogue::UniformPoissonMax || cf->entry() == Catalogue::UniformPoissonMin)
      return uniform_poisson_stats(cf->kind(), cf->lambda()).mgf(t);
    const auto [lo, hi] = cf->support();
    return numeric::integrate([&](double x) { return std::exp(t * x) * cf_pdf(*cf, x); }, lo, hi);
  }
  return extreme_mgf(std::get<ExtremeModel>(model_), t);
}

double ModelSpec::mean() const {
  if (const auto* cf = closed_form()) return cf_mean_var(*cf).mean;
  return extreme_moment(std::get<ExtremeModel>(model_), 1);
}

double ModelSpec::sample(numeric::RandomSource& src) const {
  if (const auto* cf = closed_form()) return cf_sample(*cf, src);
  return extreme_sample(std::get<ExtremeModel>(model_), src);
}

// ---------------------------------------------------------------------------
// I/O helpers

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const TableOutput& table, std::ostream& out) {
  for (const auto& [key, value] : table.metadata) out << "# " << key << "=" << value << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << "\n";
  }
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw UsageError("grid must look like start:stop:step, got '" + spec + "'");
  const double start = parse_double(parts[0], "grid start");
  const double stop = parse_double(parts[1], "grid stop");
  const double step = parse_double(parts[2], "grid step");
  if (!(step > 0.0) || !std::isfinite(step)) throw UsageError("grid step must be > 0");
  if (!(start <= stop) || !std::isfinite(start) || !std::isfinite(stop)) throw UsageError("grid needs start <= stop");
  const double span = (stop - start) / step;
  if (span > 1e7) throw UsageError("grid has too many points");
  const auto intervals = static_cast<std::size_t>(std::floor(span + 1e-9));
  std::vector<double> xs;
  xs.reserve(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) xs.push_back(start + static_cast<double>(i) * step);
  if (std::abs(xs.back() - stop) <= 1e-9 * step) xs.back() = stop;
  return xs;
}

std::vector<double> read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read input file '" + path + "'");
  std::vector<double> values;
  std::string line;
  bool seen_data = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.find(',') != std::string::npos)
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected a single column");
    const char* begin = t.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
      if (!seen_data) {
        seen_data = true;  // header line
        continue;
      }
      throw UsageError(path + ":" + std::to_string(line_no) + ": not a number: '" + t + "'");
    }
    seen_data = true;
    if (!(v >= 0.0 && v <= 1.0))
      throw UsageError(path + ":" + std::to_string(line_no) + ": value outside [0,1]: '" + t + "'");
    values.push_back(v);
  }
  if (values.empty()) throw UsageError("input file '" + path + "' holds no values");
  return values;
}

// ---------------------------------------------------------------------------
// check

namespace {

using Json = nlohmann::ordered_json;

bool has_moment_formula(const ModelSpec& spec) {
  const auto* cf = spec.closed_form();
  if (!cf) return false;
  switch (cf->entry()) {
    case Catalogue::SugMax:
    case Catalogue::SugMin:
    case Catalogue::CsugMax:
    case Catalogue::CsugMin:
    case Catalogue::UniformPoissonMax:
    case Catalogue::UniformPoissonMin:
      return true;
    default:
      return false;
  }
}

// E[X^k] = lo^k + int_lo^hi k x^(k-1) (1 - F(x)) dx with F from the count PGF.
double tail_integral_moment(const ExtremeModel& m, int k) {
  return numeric::integrate(
      [&](double x) { return k * std::pow(x, k - 1) * (1.0 - extreme_cdf(m, x)); }, 0.0, 1.0);
}

template <class Fn>
Json guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const BudgetExceeded& e) {
    return Json{{"pass", false}, {"error", e.what()}, {"estimate", e.estimate()}, {"error_bound", e.error_bound()}};
  } catch (const NonFiniteValue& e) {
    return Json{{"pass", false}, {"error", e.what()}};
  }
}

}  // namespace

Json check(const ModelSpec& spec, const CheckOptions& options) {
  Json report;
  report["model"] = spec.name();
  report["parameters"] = spec.parameters();
  report["density"] = options.as_printed ? "as-printed" : "canonical";
  const auto [lo, hi] = spec.support();
  const auto extreme = spec.extreme_model();
  auto pdf = [&](double x) { return spec.pdf(x, options.as_printed); };

  Json checks;
  checks["normalization"] = guarded([&] {
    const double total = numeric::integrate(pdf, lo, hi);
    const double err = std::abs(total - 1.0);
    return Json{{"integral", total}, {"error", err}, {"tolerance", kNormalizationTol}, {"pass", err <= kNormalizationTol}};
  });

  if (!extreme) {
    checks["series"] = Json{{"skipped", "correlated model"}, {"pass", true}};
  } else {
    checks["series"] = guarded([&] {
      double worst = 0.0;
      double worst_x = lo;
      for (int i = 1; i <= kSeriesGridPoints; ++i) {
        const double x = lo + (hi - lo) * i / (kSeriesGridPoints + 1.0);
        const double diff = std::abs(pdf(x) - extreme_pdf_series(*extreme, x));
        if (diff > worst) {
          worst = diff;
          worst_x = x;
        }
      }
      return Json{{"grid_points", kSeriesGridPoints}, {"max_abs_diff", worst}, {"at_x", worst_x},
                  {"tolerance", kSeriesTol}, {"pass", worst <= kSeriesTol}};
    });
  }

  Json moments = Json::array();
  double reference_mean = std::nan("");
  for (int k = 1; k <= 2; ++k) {
    moments.push_back(guarded([&] {
      const double quad =
          numeric::integrate([&](double x) { return std::pow(x, k) * pdf(x); }, lo, hi);
      double reference;
      std::string route;
      if (has_moment_formula(spec)) {
        reference = spec.moment(k);
        route = "formula";
      } else {
        reference = tail_integral_moment(*extreme, k);
        route = "pgf-tail-integral";
      }
      if (k == 1) reference_mean = reference;
      const double diff = std::abs(quad - reference);
      return Json{{"k", k},           {"quadrature", quad}, {"reference", reference}, {"route", route},
                  {"abs_diff", diff}, {"tolerance", kMomentTol}, {"pass", diff <= kMomentTol}};
    }));
  }
  checks["moments"] = moments;

  checks["monte_carlo"] = guarded([&] {
    numeric::RandomSource src(options.seed, 1);
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t outside = 0;
    for (std::size_t i = 0; i < options.draws; ++i) {
      const double v = spec.sample(src);
      if (!(v >= lo && v <= hi)) ++outside;
      sum += v;
      sum_sq += v * v;
    }
    const double n = static_cast<double>(options.draws);
    const double mean = sum / n;
    const double sd = std::sqrt(std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)));
    const double ref = std::isnan(reference_mean) ? spec.mean() : reference_mean;
    const double z = (mean - ref) / (sd / std::sqrt(n));
    return Json{{"draws", options.draws},       {"seed", options.seed},        {"sample_mean", mean},
                {"sample_sd", sd},              {"reference_mean", ref},       {"z_score", z},
                {"outside_support", outside},   {"tolerance", kZScoreTol},
                {"pass", std::abs(z) <= kZScoreTol && outside == 0}};
  });

  bool pass = true;
  for (const auto& [name, value] : checks.items()) {
    if (value.is_array()) {
      for (const auto& item : value) pass = pass && item.value("pass", false);
    } else {
      pass = pass && value.value("pass", false);
    }
  }
  report["checks"] = checks;
  report["pass"] = pass;
  return report;
}

// ---------------------------------------------------------------------------
// figure

TableOutput figure(const std::string& name, const std::vector<double>& thetas) {
  const auto entry = parse_catalogue(name);
  if (!entry || (*entry != Catalogue::SugMax && *entry != Catalogue::SugMin && *entry != Catalogue::CsugMax &&
                 *entry != Catalogue::CsugMin))
    throw UsageError("figure must be one of sug-max, sug-min, csug-max, csug-min");
  if (thetas.empty()) throw UsageError("figure needs at least one theta");
  constexpr int kIntervals = 500;
  TableOutput table;
  table.metadata = {{"figure", name}, {"points_per_theta", std::to_string(kIntervals + 1)}};
  table.columns = {"theta", "x", "pdf"};
  for (double theta : thetas) {
    if (!(theta > 0.0 && theta < 1.0)) throw UsageError("figure theta values must lie in (0,1)");
    const ClosedFormModel m(*entry, {theta, 1.0, 2.0});
    const auto [lo, hi] = m.support();
    for (int i = 0; i <= kIntervals; ++i) {
      const double x = i == kIntervals ? hi : lo + (hi - lo) * i / kIntervals;
      table.rows.push_back({theta, x, cf_pdf(m, x)});
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// run

namespace {

void add_model_flags(CLI::App* sub, ModelFlags& f) {
  sub->add_option("--model", f.model, "Catalogue model tag, e.g. sug-max, csug-min, geom-tl-max");
  sub->add_option("--input", f.input, "Input law: uniform, beta22, arcsine, topp-leone");
  sub->add_option("--count", f.count, "Count law: geometric, shifted-geometric, poisson, zipf");
  sub->add_option("--kind", f.kind, "max or min");
  sub->add_option("--theta", f.theta, "Geometric parameter theta")->capture_default_str();
  sub->add_option("--lambda", f.lambda, "Poisson rate lambda")->capture_default_str();
  sub->add_option("--a", f.a, "Topp-Leone shape a")->capture_default_str();
  sub->add_option("--k", f.k, "Zipf exponent k")->capture_default_str();
}

std::vector<std::pair<std::string, std::string>> model_metadata(const ModelSpec& spec, const std::string& op) {
  std::vector<std::pair<std::string, std::string>> meta{{"model", spec.name()}};
  const auto params = spec.parameters();
  for (const auto& [key, value] : params.items()) meta.emplace_back(key, format_number(value.get<double>()));
  meta.emplace_back("operation", op);
  return meta;
}

void check_unit_grid(const std::vector<double>& xs) {
  for (double x : xs)
    if (!(x >= 0.0 && x <= 1.0)) throw UsageError("grid points must lie in [0,1]");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremes of a random number of i.i.d. [0,1] variables: densities, moments, sampling, estimation"};
  app.require_subcommand(1);

  ModelFlags flags;
  std::string out_path;
  std::string grid;
  std::string method = "mle";
  std::string input_path;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  int max_k = 4;
  bool as_printed = false;
  std::vector<double> thetas{0.2, 0.5, 0.8};

  auto* pdf_cmd = app.add_subcommand("pdf", "Density on a grid (CSV)");
  auto* cdf_cmd = app.add_subcommand("cdf", "Distribution function on a grid (CSV)");
  auto* moments_cmd = app.add_subcommand("moments", "Raw moments E[X^k], k = 1..max-k (CSV)");
  auto* mgf_cmd = app.add_subcommand("mgf", "Moment generating function on a t grid (CSV)");
  auto* sample_cmd = app.add_subcommand("sample", "Seeded draws (CSV)");
  auto* estimate_cmd = app.add_subcommand("estimate", "Estimate theta from a sample file (JSON)");
  auto* check_cmd = app.add_subcommand("check", "Cross-check a model against its oracles (JSON)");
  auto* figure_cmd = app.add_subcommand("figure", "Density curves for SUG/CSUG figures (CSV)");

  for (auto* sub : {pdf_cmd, cdf_cmd, moments_cmd, mgf_cmd, sample_cmd, check_cmd}) add_model_flags(sub, flags);
  for (auto* sub : {pdf_cmd, cdf_cmd, moments_cmd, mgf_cmd, sample_cmd, estimate_cmd, check_cmd, figure_cmd})
    sub->add_option("--out", out_path, "Write to this path instead of stdout");
  pdf_cmd->add_option("--grid", grid, "start:stop:step (default 0:1:0.01)");
  pdf_cmd->add_flag("--as-printed", as_printed, "Use the typeset variant of the geom-arcsine-min density");
  cdf_cmd->add_option("--grid", grid, "start:stop:step (default 0:1:0.01)");
  mgf_cmd->add_option("--grid", grid, "t grid start:stop:step (default -2:2:0.5; write --grid=-2:2:0.5)");
  moments_cmd->add_option("--max-k", max_k, "Highest moment order")->check(CLI::Range(1, 50))->capture_default_str();
  sample_cmd->add_option("--n", n, "Number of draws")->capture_default_str();
  sample_cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
  estimate_cmd->add_option("--model", flags.model, "sug-max, sug-min, csug-max or csug-min")->required();
  estimate_cmd->add_option("--method", method, "mle or moment")
      ->check(CLI::IsMember({"mle", "moment"}))
      ->capture_default_str();
  estimate_cmd->add_option("--input", input_path, "Sample file, one value per line")->required();
  check_cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
  check_cmd->add_option("--n", n, "Monte Carlo draws (default 100000)");
  check_cmd->add_flag("--as-printed", as_printed, "Check the typeset variant of the geom-arcsine-min density");
  figure_cmd->add_option("--model", flags.model, "sug-max, sug-min, csug-max or csug-min")->required();
  figure_cmd->add_option("--theta", thetas, "Comma-separated theta values")->delimiter(',')->capture_default_str();

  std::vector<const char*> argv{"randext"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::ofstream file;
    std::ostream* sink = &out;
    auto open_sink = [&] {
      if (out_path.empty()) return;
      file.open(out_path, std::ios::binary | std::ios::trunc);
      if (!file) throw UsageError("cannot open output file '" + out_path + "'");
      sink = &file;
    };

    if (pdf_cmd->parsed() || cdf_cmd->parsed()) {
      const bool is_pdf = pdf_cmd->parsed();
      const auto spec = ModelSpec::resolve(flags);
      const auto xs = parse_grid(grid.empty() ? "0:1:0.01" : grid);
      check_unit_grid(xs);
      TableOutput table;
      table.metadata = model_metadata(spec, is_pdf ? "pdf" : "cdf");
      if (is_pdf && as_printed) table.metadata.emplace_back("density", "as-printed");
      table.metadata.emplace_back("tolerance", "abs=1e-10,rel=1e-10");
      table.columns = {"x", is_pdf ? "pdf" : "cdf"};
      for (double x : xs) table.rows.push_back({x, is_pdf ? spec.pdf(x, as_printed) : spec.cdf(x)});
      open_sink();
      write_csv(table, *sink);
    } else if (moments_cmd->parsed()) {
      const auto spec = ModelSpec::resolve(flags);
      TableOutput table;
      table.metadata = model_metadata(spec, "moments");
      table.metadata.emplace_back("tolerance", "abs=1e-10,rel=1e-10");
      table.columns = {"k", "moment"};
      for (int k = 1; k <= max_k; ++k) table.rows.push_back({static_cast<double>(k), spec.moment(k)});
      open_sink();
      write_csv(table, *sink);
    } else if (mgf_cmd->parsed()) {
      const auto spec = ModelSpec::resolve(flags);
      const auto ts = parse_grid(grid.empty() ? "-2:2:0.5" : grid);
      TableOutput table;
      table.metadata = model_metadata(spec, "mgf");
      table.metadata.emplace_back("tolerance", "abs=1e-10,rel=1e-10");
      table.columns = {"t", "mgf"};
      for (double t : ts) table.rows.push_back({t, spec.mgf(t)});
      open_sink();
      write_csv(table, *sink);
    } else if (sample_cmd->parsed()) {
      const auto spec = ModelSpec::resolve(flags);
      TableOutput table;
      table.metadata = model_metadata(spec, "sample");
      table.metadata.emplace_back("seed", std::to_string(seed));
      table.metadata.emplace_back("n", std::to_string(n));
      table.columns = {"value"};
      numeric::RandomSource src(seed, 0);
      table.rows.reserve(n);
      for (std::size_t i = 0; i < n; ++i) table.rows.push_back({spec.sample(src)});
      open_sink();
      write_csv(table, *sink);
    } else if (estimate_cmd->parsed()) {
      const auto entry = parse_catalogue(flags.model);
      if (!entry || (*entry != Catalogue::SugMax && *entry != Catalogue::SugMin && *entry != Catalogue::CsugMax &&
                     *entry != Catalogue::CsugMin))
        throw UsageError("estimate supports sug-max, sug-min, csug-max and csug-min");
      const Sample sample(read_sample_file(input_path), *entry);
      const auto& info = catalogue_info(*entry);
      const ModelFamily family = info.correlated ? ModelFamily::CSUG : ModelFamily::SUG;
      EstimateResult r;
      if (method == "moment") {
        r = moment_inversion(info.kind, family, sample.mean());
      } else if (family == ModelFamily::CSUG) {
        r = csug_mle(info.kind, sample);
      } else {
        r = sug_mle_numeric(info.kind, sample);
      }
      Json j;
      j["model"] = std::string(info.tag);
      j["method"] = to_string(r.method);
      j["theta_hat"] = r.theta_hat;
      if (r.loglik) j["loglik"] = *r.loglik;
      j["evals"] = r.evals;
      j["n"] = sample.size();
      j["sample_mean"] = sample.mean();
      j["near_boundary"] = r.near_boundary;
      open_sink();
      *sink << j.dump(2) << "\n";
    } else if (check_cmd->parsed()) {
      const auto spec = ModelSpec::resolve(flags);
      CheckOptions options;
      options.seed = seed;
      options.draws = check_cmd->count("--n") ? n : 100'000;
      options.as_printed = as_printed;
      if (options.draws < 2) throw UsageError("check needs --n >= 2");
      const auto report = check(spec, options);
      open_sink();
      *sink << report.dump(2) << "\n";
    } else if (figure_cmd->parsed()) {
      const auto table = figure(flags.model, thetas);
      open_sink();
      write_csv(table, *sink);
    }
    if (file.is_open()) {
      file.close();
      if (!file) throw UsageError("failed writing '" + out_path + "'");
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateSample& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (estimate " << format_number(e.estimate()) << ", bound "
        << format_number(e.error_bound()) << ")\n";
    return kExitNumerical;
  } catch (const NonFiniteValue& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace randext::cli
