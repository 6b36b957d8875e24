#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hogeom/cfunction.hpp"
#include "hogeom/parallel.hpp"

namespace hogeom::cli {

namespace {

Error config_error(const std::string& msg) { return Error(ErrorCode::InvalidArgument, msg); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw config_error("not a number: '" + s + "'");
  }
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos != s.size()) throw config_error("not a number: '" + s + "'");
  if (!std::isfinite(v)) throw config_error("non-finite number: '" + s + "'");
  return v;
}

nlohmann::json axis_json(const AxisGrid& a) { return {a.start, a.stop, a.count}; }

AxisGrid axis_from_json(const nlohmann::json& j) {
  const auto v = j.get<std::vector<double>>();
  if (v.size() != 3) throw config_error("grid axis needs [start, stop, count]");
  AxisGrid a{v[0], v[1], static_cast<int>(v[2])};
  if (a.count < 1 || a.count != v[2]) throw config_error("grid count must be a positive integer");
  return a;
}

std::vector<double> axis_values(const AxisGrid& a) {
  std::vector<double> v;
  for (int k = 0; k < a.count; ++k)
    v.push_back(a.count == 1 ? a.start : a.start + (a.stop - a.start) * k / (a.count - 1));
  return v;
}

nlohmann::json cplx_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void emit_error(std::ostream& err, const std::string& code, const std::string& msg, int exit_code) {
  nlohmann::json j;
  j["error"] = code;
  j["message"] = msg;
  j["exit_code"] = exit_code;
  err << j.dump() << "\n";
}

// One evaluator per (ell, lambda), shared across grid points.
class Evaluator {
 public:
  Evaluator(const RootSystem& rs, const JobConfig& job, double ell, const Covec& lam)
      : upper_(job.function == "F" || job.function == "G"),
        want_g_(job.function == "g" || job.function == "G") {
    if (upper_ || (job.m.l != 1.0 && ell == 0.0)) {
      ho_.emplace(rs, upper_ ? deform(job.m, ell) : job.m, lam, job.method, job.eval);
    } else {
      if (job.m.l != 1.0)
        throw config_error("tau functions with ell != 0 need m_l = 1; use --function F|G for m(ell)");
      TauRequest req;
      req.m = job.m;
      req.ell = ell;
      req.lam = lam;
      req.method = job.method;
      req.opt = job.eval;
      tau_.emplace(rs, req);
    }
  }

  Estimate operator()(const Point& x) const {
    if (ho_) return want_g_ ? ho_->G(x) : ho_->F(x);
    return want_g_ ? tau_->g(x) : tau_->f(x);
  }

 private:
  bool upper_, want_g_;
  std::optional<HOFunction> ho_;
  std::optional<TauFunction> tau_;
};

struct Row {
  double ell = 0;
  Point x;
  Estimate e;
};

std::vector<Row> evaluate_rows(const JobConfig& job, const std::vector<double>& ells) {
  const int r = resolve_rank(job);
  const RootSystem rs(r);
  const auto pts = resolve_points(job, r);
  if (pts.empty()) throw config_error("no evaluation points; use --x or --grid");
  std::vector<Row> rows(ells.size() * pts.size());
  std::vector<std::optional<Error>> errs(rows.size());
  for (std::size_t k = 0; k < ells.size(); ++k) {
    const Evaluator ev(rs, job, ells[k], resolve_lambda(job, r, ells[k]));
    parallel_for(pts.size(), [&](std::size_t i) {
      Row& row = rows[k * pts.size() + i];
      row.ell = ells[k];
      row.x = pts[i];
      try {
        row.e = ev(pts[i]);
        if (!std::isfinite(row.e.value.real()) || !std::isfinite(row.e.value.imag()))
          throw Error(ErrorCode::NonConvergent, "non-finite value");
      } catch (const Error& e) {
        errs[k * pts.size() + i] = e;
      }
    });
  }
  for (std::size_t i = 0; i < errs.size(); ++i)
    if (errs[i]) {
      std::ostringstream os;
      os << errs[i]->what() << " at x = (";
      for (int j = 0; j < rows[i].x.size(); ++j) os << (j ? "," : "") << fmt17(rows[i].x(j));
      os << ")";
      throw Error(errs[i]->code(), os.str());
    }
  return rows;
}

void write_rows(std::ostream& os, const JobConfig& job, const std::vector<Row>& rows, bool with_ell) {
  const int r = resolve_rank(job);
  if (job.json) {
    nlohmann::json j;
    j["config"] = to_json(job);
    auto& arr = j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json rj;
      if (with_ell) rj["ell"] = row.ell;
      rj["x"] = std::vector<double>(row.x.data(), row.x.data() + row.x.size());
      rj["re"] = row.e.value.real();
      rj["im"] = row.e.value.imag();
      rj["method"] = row.e.method;
      rj["est_error"] = row.e.error;
      rj["outside_trust_radius"] = row.e.outside_trust_radius;
      arr.push_back(rj);
    }
    os << j.dump(2) << "\n";
    return;
  }
  if (with_ell) os << "ell,";
  for (int i = 0; i < r; ++i) os << "x_" << i + 1 << ",";
  os << "re,im,method,est_error\n";
  for (const auto& row : rows) {
    if (with_ell) os << fmt17(row.ell) << ",";
    for (int i = 0; i < r; ++i) os << fmt17(row.x(i)) << ",";
    os << fmt17(row.e.value.real()) << "," << fmt17(row.e.value.imag()) << ","
       << csv_field(row.e.method) << "," << fmt17(row.e.error) << "\n";
  }
}

nlohmann::json regions_json(const Mult& m) {
  const auto f = region_flags(m);
  nlohmann::json j;
  j["m"] = {m.s, m.m, m.l};
  j["Mplus"] = f.in_Mplus;
  j["M0"] = f.in_M0;
  j["M1"] = f.in_M1;
  j["M2"] = f.in_M2;
  j["M3"] = f.in_M3;
  const auto st = try_standardize(m);
  if (st) {
    const auto [lo, hi] = ell_range(st->m);
    j["standardized"] = {{"m", {st->m.s, st->m.m, st->m.l}}, {"ell", st->ell}};
    j["ell_range"] = {lo, hi};
  } else {
    j["standardized"] = nullptr;
    j["ell_range"] = nullptr;
  }
  const auto [lo, hi] = ell_range(m);
  j["input_ell_range"] = {lo, hi};
  return j;
}

nlohmann::json cfunc_json(const JobConfig& job) {
  const int r = resolve_rank(job);
  const RootSystem rs(r);
  const Covec lam = resolve_lambda(job, r, 0.0);
  const Mult m = deform(job.m, job.ell);
  const CValue ct = c_tilde(rs, m, lam);
  nlohmann::json j;
  j["m"] = {m.s, m.m, m.l};
  j["c_tilde"] = cplx_json(ct.value);
  j["log_c_tilde"] = cplx_json(ct.log_value);
  j["numerator_pole"] = ct.numerator_pole;
  j["denominator_pole"] = ct.denominator_pole;
  if (!ct.offending.empty()) j["offending"] = ct.offending;
  j["b0_regular"] = b0_regular(rs, m, lam);
  try {
    j["c"] = cplx_json(c_function(rs, m, lam));
  } catch (const Error& e) {
    j["c"] = nullptr;
    j["c_error"] = std::string(to_string(e.code())) + ": " + e.what();
  }
  return j;
}

nlohmann::json bounded_json(const JobConfig& job) {
  const int r = resolve_rank(job);
  const RootSystem rs(r);
  const Covec lam = resolve_lambda(job, r, 0.0);
  BoundednessOptions bo;
  bo.eval = job.eval;
  const auto res = classify_boundedness(rs, job.m, job.ell, lam, bo);
  nlohmann::json j;
  j["in_tube"] = res.in_tube;
  j["verdict"] = res.bounded ? "bounded" : "unbounded";
  j["sup_abs"] = res.sup_abs;
  j["growth_rate"] = res.growth_rate;
  return j;
}

int verify(const JobConfig& job, const std::optional<nlohmann::json>& suite_cfg, bool verbose,
           std::ostream& out) {
  SuiteConfig cfg = suite_cfg ? suite_config_from_json(*suite_cfg) : SuiteConfig{};
  cfg.seed = job.seed;
  cfg.tolerance = job.tolerance;
  std::vector<std::string> names;
  if (job.suite == "all") names = suite_names();
  else names = split(job.suite, ',');
  nlohmann::json j;
  j["config"] = to_json(cfg);
  auto& arr = j["suites"] = nlohmann::json::array();
  bool ok = true;
  for (const auto& n : names) {
    const SuiteReport rep = run_suite(n, cfg);
    ok = ok && rep.passed;
    nlohmann::json rj = to_json(rep, verbose);
    if (!verbose) {
      auto& fails = rj["failures"] = nlohmann::json::array();
      for (const auto& c : rep.cases)
        if (!c.passed) fails.push_back({{"label", c.label}, {"detail", c.detail}});
    }
    arr.push_back(rj);
  }
  j["passed"] = ok;
  out << j.dump(2) << "\n";
  return ok ? kOk : kSuiteFailure;
}

}  // namespace

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

Mult parse_mult(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw config_error("--m needs three comma-separated values s,m,l");
  return {to_double(parts[0]), to_double(parts[1]), to_double(parts[2])};
}

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> v;
  for (const auto& p : split(s, ',')) v.push_back(to_double(p));
  if (v.empty()) throw config_error("empty list");
  return v;
}

std::vector<cplx> parse_lambda(const std::string& s) {
  std::vector<cplx> v;
  for (const auto& p : split(s, ',')) {
    const auto colon = p.find(':');
    if (colon == std::string::npos) v.emplace_back(to_double(p), 0.0);
    else v.emplace_back(to_double(p.substr(0, colon)), to_double(p.substr(colon + 1)));
  }
  if (v.empty()) throw config_error("empty --lambda");
  return v;
}

AxisGrid parse_axis(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw config_error("grid axis must be start:stop:count");
  AxisGrid a{to_double(parts[0]), to_double(parts[1]), 0};
  const double c = to_double(parts[2]);
  if (c < 1 || c != std::floor(c) || c > 1e6) throw config_error("grid count must be a positive integer");
  a.count = static_cast<int>(c);
  return a;
}

int resolve_rank(const JobConfig& job) {
  int r = job.rank;
  if (r == 0 && !job.lambda_rho && !job.lambda.empty()) r = static_cast<int>(job.lambda.size());
  if (r == 0 && !job.points.empty()) r = static_cast<int>(job.points.front().size());
  if (r == 0 && job.grid.size() > 1) r = static_cast<int>(job.grid.size());
  if (r == 0) r = 1;
  if (r < 1 || r > kMaxRank)
    throw Error(ErrorCode::RankUnsupported, "rank must be between 1 and " + std::to_string(kMaxRank));
  return r;
}

Covec resolve_lambda(const JobConfig& job, int rank, double ell) {
  const RootSystem rs(rank);
  if (job.lambda_rho) return to_covec(rho(rs, deform(job.m, ell)));
  if (job.lambda.empty()) throw config_error("--lambda is required");
  if (static_cast<int>(job.lambda.size()) != rank)
    throw config_error("--lambda has " + std::to_string(job.lambda.size()) + " entries, rank is " +
                       std::to_string(rank));
  Covec lam(rank);
  for (int i = 0; i < rank; ++i) lam(i) = job.lambda[i];
  return lam;
}

std::vector<Point> resolve_points(const JobConfig& job, int rank) {
  std::vector<Point> pts;
  for (const auto& p : job.points) {
    if (static_cast<int>(p.size()) != rank)
      throw config_error("--x point has " + std::to_string(p.size()) + " coordinates, rank is " +
                         std::to_string(rank));
    pts.push_back(Eigen::Map<const Point>(p.data(), rank));
  }
  if (!job.grid.empty()) {
    std::vector<AxisGrid> axes = job.grid;
    if (axes.size() == 1) axes.assign(rank, axes.front());
    if (static_cast<int>(axes.size()) != rank) throw config_error("--grid needs one axis or one per coordinate");
    std::vector<std::vector<double>> vals;
    std::size_t total = 1;
    for (const auto& a : axes) {
      vals.push_back(axis_values(a));
      total *= vals.back().size();
    }
    if (total > 10'000'000) throw config_error("grid too large");
    // Last coordinate varies fastest.
    for (std::size_t k = 0; k < total; ++k) {
      Point x(rank);
      std::size_t rem = k;
      for (int i = rank - 1; i >= 0; --i) {
        x(i) = vals[i][rem % vals[i].size()];
        rem /= vals[i].size();
      }
      pts.push_back(x);
    }
  }
  return pts;
}

nlohmann::json to_json(const JobConfig& job) {
  nlohmann::json j;
  j["schema_version"] = job.schema_version;
  j["command"] = job.command;
  j["rank"] = job.rank;
  j["m"] = {job.m.s, job.m.m, job.m.l};
  j["ell"] = job.ell;
  if (job.lambda_rho) {
    j["lambda"] = "rho";
  } else {
    auto& l = j["lambda"] = nlohmann::json::array();
    for (const auto& z : job.lambda) l.push_back({z.real(), z.imag()});
  }
  j["points"] = job.points;
  auto& g = j["grid"] = nlohmann::json::array();
  for (const auto& a : job.grid) g.push_back(axis_json(a));
  j["ell_grid"] = job.ell_grid ? axis_json(*job.ell_grid) : nlohmann::json(nullptr);
  j["function"] = job.function;
  j["method"] = to_string(job.method);
  j["max_height"] = job.eval.max_height;
  j["degree"] = job.eval.degree;
  j["delta"] = job.eval.delta;
  j["trust_radius"] = job.eval.trust_radius;
  j["seed"] = job.seed;
  j["tolerance"] = job.tolerance;
  j["suite"] = job.suite;
  j["json"] = job.json;
  return j;
}

JobConfig job_from_json(const nlohmann::json& j) {
  JobConfig job;
  try {
    job.schema_version = j.at("schema_version").get<int>();
    if (job.schema_version != kJobSchemaVersion) throw config_error("unsupported schema_version");
    job.command = j.value("command", job.command);
    job.rank = j.value("rank", job.rank);
    if (j.contains("m")) {
      const auto v = j.at("m").get<std::vector<double>>();
      if (v.size() != 3) throw config_error("m needs three entries");
      job.m = {v[0], v[1], v[2]};
    }
    job.ell = j.value("ell", job.ell);
    if (j.contains("lambda")) {
      const auto& l = j.at("lambda");
      if (l.is_string()) {
        if (l.get<std::string>() != "rho") throw config_error("lambda string must be \"rho\"");
        job.lambda_rho = true;
      } else {
        for (const auto& z : l) {
          if (z.is_number()) job.lambda.emplace_back(z.get<double>(), 0.0);
          else job.lambda.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
        }
      }
    }
    if (j.contains("points")) job.points = j.at("points").get<std::vector<std::vector<double>>>();
    if (j.contains("grid"))
      for (const auto& a : j.at("grid")) job.grid.push_back(axis_from_json(a));
    if (j.contains("ell_grid") && !j.at("ell_grid").is_null()) job.ell_grid = axis_from_json(j.at("ell_grid"));
    job.function = j.value("function", job.function);
    if (j.contains("method")) job.method = parse_method(j.at("method").get<std::string>());
    job.eval.max_height = j.value("max_height", job.eval.max_height);
    job.eval.degree = j.value("degree", job.eval.degree);
    job.eval.delta = j.value("delta", job.eval.delta);
    job.eval.trust_radius = j.value("trust_radius", job.eval.trust_radius);
    job.seed = j.value("seed", job.seed);
    job.tolerance = j.value("tolerance", job.tolerance);
    job.suite = j.value("suite", job.suite);
    job.json = j.value("json", job.json);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("bad job config: ") + e.what());
  }
  return job;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergeometric functions for BC_r with deformed multiplicities"};
  app.require_subcommand(1);

  struct Raw {
    int rank = 0;
    std::string m, lambda, method, function, suite, config, out, ell_grid;
    std::vector<std::string> x, grid;
    double ell = 0, tolerance = 0;
    int max_height = 0, degree = 0;
    std::uint64_t seed = 0;
    bool json = false, dump = false, verbose = false;
  } raw;

  auto common = [&](CLI::App* s, bool points) {
    s->add_option("--config", raw.config, "JSON job config file");
    s->add_option("--rank", raw.rank, "rank r (1..8)");
    s->add_option("--m", raw.m, "multiplicity s,m,l");
    s->add_option("--ell", raw.ell, "deformation parameter");
    s->add_option("--lambda", raw.lambda, "spectral parameter: reals, re:im pairs, or rho");
    s->add_option("--method", raw.method, "auto, hcseries, taylor, rankone");
    s->add_option("--max-height", raw.max_height, "series truncation height");
    s->add_option("--degree", raw.degree, "Taylor degree");
    s->add_option("--out", raw.out, "write output to FILE");
    s->add_flag("--dump-config", raw.dump, "print the resolved job config and exit");
    if (points) {
      s->add_option("--x", raw.x, "point x_1,...,x_r (repeatable; ';' separates points)");
      s->add_option("--grid", raw.grid, "start:stop:count, once or per coordinate");
      s->add_option("--function", raw.function, "f, g (tau functions) or F, G (m(ell))");
      s->add_flag("--json", raw.json, "JSON instead of CSV");
    }
  };

  auto* eval = app.add_subcommand("eval", "evaluate on points or a grid");
  common(eval, true);
  auto* sweep = app.add_subcommand("sweep", "evaluate over a grid of ell values");
  common(sweep, true);
  sweep->add_option("--ell-grid", raw.ell_grid, "start:stop:count")->required();
  auto* regions = app.add_subcommand("regions", "multiplicity region membership");
  regions->add_option("--m", raw.m, "multiplicity s,m,l")->required();
  regions->add_option("--out", raw.out, "write output to FILE");
  auto* cfunc = app.add_subcommand("cfunc", "c-function value and pole data");
  common(cfunc, false);
  auto* bounded = app.add_subcommand("bounded", "boundedness verdict");
  common(bounded, false);
  auto* verify_cmd = app.add_subcommand("verify", "run property suites");
  verify_cmd->add_option("--suite", raw.suite, "suite name, comma list, or all")->default_val("all");
  verify_cmd->add_option("--seed", raw.seed, "random seed")->default_val(7);
  verify_cmd->add_option("--tolerance", raw.tolerance, "inequality slack")->default_val(1e-9);
  verify_cmd->add_option("--config", raw.config, "JSON suite config file");
  verify_cmd->add_option("--out", raw.out, "write output to FILE");
  verify_cmd->add_flag("--verbose", raw.verbose, "report every case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "InvalidArgument", e.what(), kConfigError);
    return kConfigError;
  }

  std::ostringstream buf;
  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    auto given = [&](const std::string& flag) {
      const CLI::Option* o = sub->get_option_no_throw(flag);
      return o != nullptr && o->count() > 0;
    };
    auto load_json = [&](const std::string& path) {
      std::ifstream f(path);
      if (!f) throw config_error("cannot open config file '" + path + "'");
      try {
        return nlohmann::json::parse(f);
      } catch (const nlohmann::json::exception& e) {
        throw config_error("config file '" + path + "': " + e.what());
      }
    };

    int code = kOk;
    if (name == "regions") {
      buf << regions_json(parse_mult(raw.m)).dump(2) << "\n";
    } else if (name == "verify") {
      JobConfig job;
      job.command = "verify";
      job.seed = raw.seed;
      job.tolerance = raw.tolerance;
      job.suite = raw.suite;
      std::optional<nlohmann::json> sc;
      if (!raw.config.empty()) sc = load_json(raw.config);
      code = verify(job, sc, raw.verbose, buf);
    } else {
      JobConfig job = given("--config") ? job_from_json(load_json(raw.config)) : JobConfig{};
      job.command = name;
      if (given("--rank")) job.rank = raw.rank;
      if (given("--m")) job.m = parse_mult(raw.m);
      if (given("--ell")) job.ell = raw.ell;
      if (given("--lambda")) {
        job.lambda_rho = raw.lambda == "rho";
        job.lambda = job.lambda_rho ? std::vector<cplx>{} : parse_lambda(raw.lambda);
      }
      if (given("--method")) job.method = parse_method(raw.method);
      if (given("--max-height")) job.eval.max_height = raw.max_height;
      if (given("--degree")) job.eval.degree = raw.degree;
      if (given("--x")) {
        job.points.clear();
        for (const auto& xs : raw.x)
          for (const auto& p : split(xs, ';'))
            if (!p.empty()) job.points.push_back(parse_reals(p));
      }
      if (given("--grid")) {
        job.grid.clear();
        for (const auto& g : raw.grid)
          for (const auto& a : split(g, ',')) job.grid.push_back(parse_axis(a));
      }
      if (given("--function")) job.function = raw.function;
      if (given("--json")) job.json = raw.json;
      if (name == "sweep") job.ell_grid = parse_axis(raw.ell_grid);
      if (job.function != "f" && job.function != "g" && job.function != "F" && job.function != "G")
        throw config_error("--function must be f, g, F or G");
      if (job.eval.max_height < 1 || job.eval.max_height > 200) throw config_error("--max-height out of range");
      if (job.eval.degree < 0 || job.eval.degree > 127) throw config_error("--degree out of range");
      resolve_rank(job);

      if (raw.dump) {
        buf << to_json(job).dump(2) << "\n";
      } else if (name == "eval") {
        write_rows(buf, job, evaluate_rows(job, {job.ell}), false);
      } else if (name == "sweep") {
        write_rows(buf, job, evaluate_rows(job, axis_values(*job.ell_grid)), true);
      } else if (name == "cfunc") {
        buf << cfunc_json(job).dump(2) << "\n";
      } else if (name == "bounded") {
        buf << bounded_json(job).dump(2) << "\n";
      }
    }

    if (!raw.out.empty()) {
      std::ofstream f(raw.out, std::ios::binary);
      if (!f) throw config_error("cannot write '" + raw.out + "'");
      f << buf.str();
    } else {
      out << buf.str();
    }
    return code;
  } catch (const Error& e) {
    const int code = is_config_error(e.code()) ? kConfigError : kNumericalError;
    emit_error(err, to_string(e.code()), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    emit_error(err, "InternalError", e.what(), kNumericalError);
    return kNumericalError;
  }
}

}  // namespace hogeom::cli
