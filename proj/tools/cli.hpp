#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hogeom/suites.hpp"

namespace hogeom::cli {

constexpr int kJobSchemaVersion = 1;

enum ExitCode { kOk = 0, kSuiteFailure = 1, kConfigError = 2, kNumericalError = 3 };

struct AxisGrid {
  double start = 0.0, stop = 0.0;
  int count = 1;
};

// Everything needed to replay a command; serialized with --dump-config.
struct JobConfig {
  int schema_version = kJobSchemaVersion;
  std::string command;
  int rank = 0;  // 0: inferred from lambda / x
  Mult m{2, 1, 1};
  double ell = 0.0;
  bool lambda_rho = false;
  std::vector<cplx> lambda;
  std::vector<std::vector<double>> points;
  std::vector<AxisGrid> grid;
  std::optional<AxisGrid> ell_grid;  // sweep only
  std::string function = "f";        // f, g: tau functions; F, G: deformed HO functions
  Method method = Method::Auto;
  EvalOptions eval;
  std::uint64_t seed = 7;
  double tolerance = 1e-9;
  std::string suite = "all";
  bool json = false;
};

nlohmann::json to_json(const JobConfig& job);
JobConfig job_from_json(const nlohmann::json& j);

Mult parse_mult(const std::string& s);
// "1.5,2" or "1:0.5,2:-1" (re:im); "rho" is handled by the caller.
std::vector<cplx> parse_lambda(const std::string& s);
std::vector<double> parse_reals(const std::string& s);
AxisGrid parse_axis(const std::string& s);

// Resolved rank, lambda and the list of x points.
int resolve_rank(const JobConfig& job);
Covec resolve_lambda(const JobConfig& job, int rank, double ell);
std::vector<Point> resolve_points(const JobConfig& job, int rank);

std::string csv_field(const std::string& s);
std::string fmt17(double v);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hogeom::cli
