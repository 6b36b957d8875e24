#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hogeom/verify.hpp"

namespace hogeom {

constexpr int kSuiteSchemaVersion = 1;

struct SuiteConfig {
  int schema_version = kSuiteSchemaVersion;
  std::uint64_t seed = 7;
  std::vector<int> ranks{1, 2};
  std::vector<Mult> multiplicities{{2, 1, 1}, {4, 4, 1}, {0, 2, 1}};
  // The sharp-ratio window depends on m; the asymptotic constant for (4,4,1)
  // at lam0 = 0 is near 1e6, so that suite uses moderate multiplicities.
  std::vector<Mult> sharp_multiplicities{{2, 1, 1}, {0, 2, 1}};
  int ell_points = 4;       // equally spaced over [ell_min, ell_max]
  int lambda_samples = 3;   // per (rank, m, ell)
  int x_samples = 6;        // per function
  int bounded_samples = 40; // lambda samples per (rank, m) in the boundedness suite
  double tolerance = 1e-9;
  int threads = 0;          // 0: HOGEOM_THREADS / hardware
  EvalOptions eval;
};

struct SuiteCase {
  std::size_t index = 0;
  std::string label;
  double margin = 0.0;  // >= 0 passes
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<SuiteCase> cases;
  bool passed = true;
  double worst_margin = 0.0;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

nlohmann::json to_json(const SuiteConfig& cfg);
SuiteConfig suite_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SuiteReport& rep, bool include_cases = true);

}  // namespace hogeom
