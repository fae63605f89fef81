#include "gft/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gft/error.hpp"
#include "gft/io.hpp"
#include "gft/radius.hpp"
#include "gft/verify.hpp"
#include "gft/volterra.hpp"
#include "random.hpp"

namespace gft::cli {

namespace {

constexpr double kIdentityTolerance = 1e-12;
constexpr double kLemmaTolerance = 1e-8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t seed = 42;
  int order = 1024;
  GridSpec grid;
  std::string format = "csv";
  std::string out_path;
};

struct TheoremFlags {
  std::string theorem;
  std::string alpha = "0";
  std::string A = "2,0";
  std::string B = "1,0";
  std::string gamma = "1";
  std::string beta = "1";
  std::string k = "2";
};

double parse_real(const std::string& text, const std::string& flag) {
  std::istringstream is(text);
  is.imbue(std::locale::classic());
  double x = 0.0;
  if (!(is >> x) || !(is >> std::ws).eof() || !std::isfinite(x)) {
    throw UsageError("--" + flag + ": expected a real number, got '" + text + "'");
  }
  return x;
}

Complex parse_complex(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text, flag), 0.0};
  return {parse_real(text.substr(0, comma), flag), parse_real(text.substr(comma + 1), flag)};
}

/// "v" or "start:stop:step" (inclusive); start > stop yields no values.
std::vector<double> parse_range(const std::string& text, const std::string& flag) {
  if (text.find(':') == std::string::npos) return {parse_real(text, flag)};
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw UsageError("--" + flag + ": ranges are start:stop:step, got '" + text + "'");
  const double start = parse_real(parts[0], flag);
  const double stop = parse_real(parts[1], flag);
  const double step = parse_real(parts[2], flag);
  if (!(step > 0.0)) throw UsageError("--" + flag + ": range step must be positive");
  std::vector<double> values;
  for (long i = 0;; ++i) {
    const double v = start + static_cast<double>(i) * step;
    if (v > stop + 1e-9 * step) break;
    values.push_back(v);
    if (values.size() > 100000) throw UsageError("--" + flag + ": range has too many points");
  }
  return values;
}

Theorem parse_theorem(const std::string& text) {
  const auto t = theorem_from_string(text);
  if (!t) throw UsageError("--theorem: expected one of t41..t46, got '" + text + "'");
  return *t;
}

RadiusQuery single_query(const TheoremFlags& flags) {
  RadiusQuery q;
  q.theorem = parse_theorem(flags.theorem);
  q.alpha = parse_real(flags.alpha, "alpha");
  q.A = parse_complex(flags.A, "A");
  q.B = parse_complex(flags.B, "B");
  q.gamma = parse_real(flags.gamma, "gamma");
  q.beta = parse_real(flags.beta, "beta");
  q.k = parse_real(flags.k, "k");
  return q;
}

std::string fmt10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

void add_theorem_flags(CLI::App* sub, TheoremFlags& flags, bool ranges) {
  const std::string suffix = ranges ? " (value or start:stop:step)" : "";
  sub->add_option("--theorem", flags.theorem, "t41..t46");
  sub->add_option("--alpha", flags.alpha, "order alpha in [0,1)" + suffix);
  sub->add_option("--A", flags.A, "Janowski A as re,im");
  sub->add_option("--B", flags.B, "Janowski B as re,im");
  sub->add_option("--gamma", flags.gamma, "UL order gamma >= 1" + suffix);
  sub->add_option("--beta", flags.beta, "G(beta) parameter in (0,1]" + suffix);
  sub->add_option("--k", flags.k, "boundary rotation bound k >= 2" + suffix);
}

// Lets "--B -1,0" through: CLI11 would read "-1,0" as a short option.
std::vector<std::string> attach_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const bool long_flag = a.rfind("--", 0) == 0 && a.find('=') == std::string::npos;
    if (long_flag && i + 1 < args.size()) {
      const std::string& next = args[i + 1];
      if (next.size() > 1 && next[0] == '-' && (std::isdigit(static_cast<unsigned char>(next[1])) || next[1] == '.')) {
        out.push_back(a + "=" + next);
        ++i;
        continue;
      }
    }
    out.push_back(a);
  }
  return out;
}

class Output {
 public:
  Output(const RunConfig& config, std::ostream& fallback) : stream_(&fallback) {
    if (!config.out_path.empty()) {
      file_.open(config.out_path);
      if (!file_) throw UsageError("--out: cannot open '" + config.out_path + "' for writing");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void write_reports(const std::vector<RadiusReport>& reports, const RunConfig& config, std::ostream& os) {
  if (config.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    os << arr.dump(2) << '\n';
    return;
  }
  os << report_csv_header() << '\n';
  for (const auto& r : reports) os << report_csv_row(r) << '\n';
}

int cmd_radius(const TheoremFlags& flags, std::ostream& out) {
  if (flags.theorem.empty()) throw UsageError("radius: --theorem is required");
  const RadiusValue v = radius_formula(single_query(flags));
  out << "r=" << fmt10(v.r) << " branch=" << to_string(v.branch) << '\n';
  return kOk;
}

int cmd_identity(int pairs, const RunConfig& config, std::ostream& os) {
  bool ok = true;
  nlohmann::json arr = nlohmann::json::array();
  if (config.format == "csv") os << "pair,seed,order_N,max_residual\n";
  for (int i = 0; i < pairs; ++i) {
    const PowerSeries f = random_normalized_series(detail::derive_seed(config.seed, 2 * std::uint64_t(i)), config.order);
    const PowerSeries g =
        random_normalized_series(detail::derive_seed(config.seed, 2 * std::uint64_t(i) + 1), config.order);
    const PowerSeries residual = *j_g(f, g).series + *t_g(f, g).series - *m_g(f, g).series;
    double worst = 0.0;
    for (const Complex c : residual.coeffs()) worst = std::max(worst, std::abs(c));
    ok = ok && worst <= kIdentityTolerance;
    if (config.format == "csv") {
      os << i << ',' << config.seed << ',' << config.order << ',' << format_double(worst) << '\n';
    } else {
      arr.push_back({{"pair", i}, {"seed", config.seed}, {"order_N", config.order}, {"max_residual", worst}});
    }
  }
  if (config.format == "json") os << arr.dump(2) << '\n';
  return ok ? kOk : kVerificationFailed;
}

int cmd_lemmas(const RunConfig& config, std::ostream& os) {
  struct Row {
    Lemma lemma;
    ClassSpec member;
  };
  const std::vector<Row> rows{
      {{LemmaKind::L31, 2.0}, ClassSpec::universal_lif(2.0)},
      {{LemmaKind::L32, 1.0}, ClassSpec::convex(0.0)},
      {{LemmaKind::L33, 0.0}, ClassSpec::univalent()},
      {{LemmaKind::L34, 1.0}, ClassSpec::g_beta(1.0)},
      {{LemmaKind::RobertsonVk, 4.0}, ClassSpec::boundary_rotation(4.0)},
  };
  GridSpec grid = membership_grid();
  grid.n_theta = config.grid.n_theta;
  bool ok = true;
  nlohmann::json arr = nlohmann::json::array();
  if (config.format == "csv") os << "lemma,param,function,max_violation,argmax_re,argmax_im,real_axis_gap\n";
  for (const auto& row : rows) {
    const AnalyticFn f = extremal(row.member);
    const AuditResult a = lemma_audit(f, row.lemma, grid);
    ok = ok && a.max_violation <= kLemmaTolerance;
    if (config.format == "csv") {
      os << to_string(row.lemma.kind) << ',' << format_double(row.lemma.param) << ',' << f.label() << ','
         << format_double(a.max_violation) << ',' << format_double(a.argmax.real()) << ','
         << format_double(a.argmax.imag()) << ',' << format_double(a.real_axis_gap) << '\n';
    } else {
      arr.push_back({{"lemma", std::string(to_string(row.lemma.kind))},
                     {"param", row.lemma.param},
                     {"function", f.label()},
                     {"max_violation", a.max_violation},
                     {"argmax", {a.argmax.real(), a.argmax.imag()}},
                     {"real_axis_gap", a.real_axis_gap}});
    }
  }
  if (config.format == "json") os << arr.dump(2) << '\n';
  return ok ? kOk : kVerificationFailed;
}

int cmd_verify(const TheoremFlags& flags, const std::string& mode, int n, bool identity, bool lemmas,
               int factors, const RunConfig& config, std::ostream& os) {
  if (identity + lemmas + !flags.theorem.empty() != 1) {
    throw UsageError("verify: give exactly one of --theorem, --identity, --lemmas");
  }
  if (n < 0) throw UsageError("verify: --n must be >= 0");
  if (identity) return cmd_identity(n, config, os);
  if (lemmas) return cmd_lemmas(config, os);

  VerifyOptions options;
  if (mode == "extremal") {
    options.mode = VerifyMode::extremal;
  } else if (mode == "sampled") {
    options.mode = VerifyMode::sampled;
  } else {
    throw UsageError("verify: --mode must be extremal or sampled, got '" + mode + "'");
  }
  options.samples = n;
  options.seed = config.seed;
  options.order = config.order;
  options.factors = factors;
  const auto reports = verify_theorem(single_query(flags), options, config.grid);
  write_reports(reports, config, os);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const RadiusReport& r) { return r.sound(); });
  return ok ? kOk : kVerificationFailed;
}

int cmd_sweep(const TheoremFlags& flags, const RunConfig& config, std::ostream& os) {
  if (flags.theorem.empty()) throw UsageError("sweep: --theorem is required");
  const Theorem theorem = parse_theorem(flags.theorem);
  const auto alphas = parse_range(flags.alpha, "alpha");
  const auto gammas = parse_range(flags.gamma, "gamma");
  const auto betas = parse_range(flags.beta, "beta");
  const auto ks = parse_range(flags.k, "k");
  const Complex A = parse_complex(flags.A, "A");
  const Complex B = parse_complex(flags.B, "B");

  std::vector<RadiusQuery> queries;
  for (const double alpha : alphas) {
    for (const double gamma : gammas) {
      for (const double beta : betas) {
        for (const double k : ks) {
          RadiusQuery q{theorem, alpha, A, B, gamma, beta, k};
          q.validate();
          queries.push_back(q);
        }
      }
    }
  }
  VerifyOptions options;
  options.seed = config.seed;
  options.order = config.order;
  std::vector<RadiusReport> reports;
  for (const auto& q : queries) {
    auto r = verify_theorem(q, options, config.grid);
    for (auto& rep : r) {
      rep.order = config.order;
      reports.push_back(std::move(rep));
    }
  }
  write_reports(reports, config, os);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radius-of-convexity calculator and verifier for the Volterra-type operator T_g"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  app.add_option("--seed", config.seed, "RNG seed");
  app.add_option("--order", config.order, "series truncation order N");
  app.add_option("--ntheta", config.grid.n_theta, "angular samples per circle");
  app.add_option("--rcap", config.grid.r_cap, "largest radius probed by the estimator");
  app.add_option("--tol", config.grid.tol, "bisection tolerance in r");
  app.add_option("--out", config.out_path, "write output to this file instead of stdout");
  app.add_option("--format", config.format, "csv or json");

  TheoremFlags radius_flags, verify_flags, sweep_flags;
  auto* radius = app.add_subcommand("radius", "closed-form radius of convexity");
  add_theorem_flags(radius, radius_flags, false);

  auto* verify = app.add_subcommand("verify", "numerically certify a radius, the operator identity, or the lemmas");
  add_theorem_flags(verify, verify_flags, false);
  std::string mode = "extremal";
  int n = 20;
  int factors = 2;
  bool identity = false;
  bool lemmas = false;
  verify->add_option("--mode", mode, "extremal or sampled");
  verify->add_option("--n", n, "number of sampled pairs (or identity pairs)");
  verify->add_option("--factors", factors, "Schur factors per sampled member");
  verify->add_flag("--identity", identity, "check J_g f + T_g f = f g on random normalized pairs");
  verify->add_flag("--lemmas", lemmas, "audit the distortion bounds on their extremals");

  auto* sweep = app.add_subcommand("sweep", "radius formula and estimate over parameter ranges");
  add_theorem_flags(sweep, sweep_flags, true);

  try {
    auto args = attach_negative_values(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
    if (config.format != "csv" && config.format != "json") {
      throw UsageError("--format must be csv or json, got '" + config.format + "'");
    }
    if (config.order < kMinOrder) throw UsageError("--order must be >= " + std::to_string(kMinOrder));
    config.grid.validate();

    Output output(config, out);
    if (*radius) return cmd_radius(radius_flags, output.get());
    if (*verify) return cmd_verify(verify_flags, mode, n, identity, lemmas, factors, config, output.get());
    if (*sweep) return cmd_sweep(sweep_flags, config, output.get());
    return kUsage;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::InvalidParams ? kUsage : kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace gft::cli
