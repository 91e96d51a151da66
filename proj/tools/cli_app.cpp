#include "cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "opbianchi/bianchi.hpp"
#include "opbianchi/expression.hpp"
#include "opbianchi/oscillator.hpp"
#include "opbianchi/quantum_bianchi.hpp"
#include "report.hpp"

namespace opbianchi::cli {
namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Rational omega = 1;
  Rational p0 = 2;
  Rational a{1, 2};
  int t_samples = 100;
  std::optional<double> t_end;
  std::optional<BianchiTag> type;
  report::Format format = report::Format::Text;
  bool format_given = false;
};

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

Rational parse_positive(const std::string& text, const char* what) {
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " must be a rational number, got '" + text + "'");
  }
  if (r <= 0) throw UsageError(std::string(what) + " must be positive");
  return r;
}

BianchiType make_type(BianchiTag tag, const RunConfig& cfg) {
  try {
    if (tag == BianchiTag::VIIa || tag == BianchiTag::VIa) return BianchiType::make(tag, cfg.a);
    return BianchiType::make(tag);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<BianchiType> selected_types(const RunConfig& cfg) {
  if (cfg.type) return {make_type(*cfg.type, cfg)};
  std::vector<BianchiType> out;
  for (BianchiTag tag : all_bianchi_tags()) out.push_back(make_type(tag, cfg));
  return out;
}

std::string fmt_double(double v) {
  if (v == 0) v = 0;  // drop the sign of negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::uint64_t seed() {
  if (const char* env = std::getenv("OPERADIC_BIANCHI_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("OPERADIC_BIANCHI_SEED must be an unsigned integer");
    }
  }
  return 20081001;
}

class RationalSource {
 public:
  RationalSource() : rng_(seed()) {}
  Rational next() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    Rational r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

 private:
  std::mt19937_64 rng_;
};

// Verification suites

Check check_matrix_lax(const RunConfig& cfg) {
  RationalSource src;
  constexpr int kPoints = 1000;
  int failures = 0;
  for (int i = 0; i < kPoints; ++i) {
    if (!matrix_lax_residual(src.next(), src.next(), cfg.omega).is_zero()) ++failures;
  }
  return {"matrix-lax", failures == 0,
          std::to_string(kPoints) + " rational points at omega = " + to_string(cfg.omega) +
              ", nonzero residuals: " + std::to_string(failures) +
              (failures == 0 ? ", max |residual| = 0" : "")};
}

Check check_operadic_lax(const RunConfig& cfg) {
  RationalSource src;
  const Rational radicand = 2 * cfg.p0;
  int failures = 0, trials = 0;
  for (int nu = 1; nu <= 9; ++nu, ++trials) {
    LaxFamilyParams c;
    c.C(nu) = 1;
    if (!operadic_lax_residual(c, cfg.omega).is_zero()) ++failures;
  }
  for (int i = 0; i < 100; ++i, ++trials) {
    LaxFamilyParams c;
    for (auto& x : c.c) x = ExtScalar(src.next(), src.coin() ? src.next() : Rational(0), radicand);
    if (!operadic_lax_residual(c, cfg.omega).is_zero()) ++failures;
  }
  return {"operadic-lax", failures == 0,
          "9 single-parameter probes and 100 random parameter vectors, nonzero residuals: " +
              std::to_string(failures)};
}

bool expected_rigid(BianchiTag tag) {
  return tag == BianchiTag::I || tag == BianchiTag::VII || tag == BianchiTag::VIII ||
         tag == BianchiTag::IX;
}

std::vector<double> window_times(const RunConfig& cfg) {
  const double w = to_double(cfg.omega);
  std::vector<double> ts;
  for (int k = 0; k < cfg.t_samples; ++k) {
    if (cfg.t_end) {
      ts.push_back(*cfg.t_end * k / (cfg.t_samples - 1));
    } else {
      ts.push_back(std::numbers::pi * k / (w * cfg.t_samples));
    }
  }
  return ts;
}

std::array<double, 4> flow_point(const RunConfig& cfg, double t) {
  const OscillatorState st = exact_flow(to_double(cfg.omega), to_double(cfg.p0), t);
  const QuasiCoords qc = quasi_coords(st);
  return {st.q, st.p, qc.a_plus, qc.a_minus};
}

std::vector<Check> check_classical(const RunConfig& cfg) {
  std::vector<Check> checks;
  const auto times = window_times(cfg);
  for (const auto& t : selected_types(cfg)) {
    const auto mu = deform(t, cfg.omega, cfg.p0);
    const bool initial = at_initial_point(mu, cfg.p0) == lift_exact(structure_constants(t));
    const bool tables = mu == transcribed_deformation(t, cfg.omega, cfg.p0);
    const bool rigid_ok = is_rigid(t, cfg.omega, cfg.p0) == expected_rigid(t.tag());
    bool symbolic = true;
    for (const auto& j : classical_jacobian(mu, cfg.omega, cfg.p0)) symbolic &= j.is_zero();
    double worst = 0;
    const auto defect = jacobi_defect(mu);
    for (double tk : times) {
      const auto point = flow_point(cfg, tk);
      for (const auto& j : defect) worst = std::max(worst, std::abs(evaluate(j, point)));
    }
    const bool numeric = worst < 1e-10;
    const std::string name = "jacobi-classical " + t.name();
    checks.push_back({name, initial && tables && rigid_ok && symbolic && numeric,
                      std::string("t=0 constants ") + (initial ? "ok" : "MISMATCH") +
                          "; table agreement " + (tables ? "ok" : "MISMATCH") + "; rigid " +
                          (is_rigid(t, cfg.omega, cfg.p0) ? "yes" : "no") +
                          (rigid_ok ? "" : " (UNEXPECTED)") + "; on-shell Jacobian " +
                          (symbolic ? "zero" : "NONZERO") + "; max |J| along flow = " +
                          fmt_double(worst)});
  }
  return checks;
}

AnomalyKind expected_kind(BianchiTag tag) {
  switch (tag) {
    case BianchiTag::I:
    case BianchiTag::VII:
    case BianchiTag::VIII:
    case BianchiTag::IX:
      return AnomalyKind::Rigid;
    case BianchiTag::II:
    case BianchiTag::VI:
      return AnomalyKind::QuantumLie;
    case BianchiTag::IV:
    case BianchiTag::V:
      return AnomalyKind::AnomalousI;
    default:
      return AnomalyKind::AnomalousII;
  }
}

std::vector<Check> check_quantum(const RunConfig& cfg, std::vector<AnomalyCertificate>& certs) {
  std::vector<Check> checks;
  for (const auto& t : selected_types(cfg)) {
    auto cert = classify(t, cfg.omega, cfg.p0);
    const AnomalyKind want = expected_kind(t.tag());
    bool ok = cert.kind == want;
    if (want == AnomalyKind::AnomalousII) ok = ok && cert.tau == -1;
    checks.push_back({"jacobi-quantum " + t.name(), ok,
                      kind_name(cert.kind) + (cert.tau ? " tau = " + std::to_string(*cert.tau) : "") +
                          (ok ? "" : " (expected " + kind_name(want) + ")")});
    certs.push_back(std::move(cert));
  }
  return checks;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + '"';
}

std::string render_verify(const std::vector<Check>& checks,
                          const std::vector<AnomalyCertificate>& certs, report::Format format) {
  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  std::ostringstream out;
  switch (format) {
    case report::Format::Json: {
      nlohmann::ordered_json j;
      j["passed"] = all;
      j["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      j["certificates"] = nlohmann::ordered_json::array();
      for (const auto& c : certs) j["certificates"].push_back(report::to_json(c));
      out << j.dump(2) << '\n';
      break;
    }
    case report::Format::Csv:
      out << "check,passed,detail\n";
      for (const auto& c : checks)
        out << csv_field(c.name) << ',' << (c.passed ? "true" : "false") << ',' << csv_field(c.detail)
            << '\n';
      break;
    case report::Format::Text:
      for (const auto& c : checks)
        out << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << '\n';
      if (!certs.empty()) out << "\ncertificates\n";
      for (const auto& c : certs) out << report::render_text(c);
      out << '\n' << (all ? "all checks passed" : "SOME CHECKS FAILED") << '\n';
      break;
  }
  return out.str();
}

// Commands

int cmd_tables(const std::string& which, const RunConfig& cfg, std::string& text) {
  report::TableDocument doc;
  doc.table = which;
  if (which != "bianchi") {
    doc.omega = cfg.omega;
    doc.p0 = cfg.p0;
  }
  for (const auto& t : selected_types(cfg)) {
    if (which == "bianchi") {
      doc.rows.push_back(report::make_row(t, structure_constants(t)));
    } else if (which == "deformed") {
      doc.rows.push_back(report::make_row(t, deform(t, cfg.omega, cfg.p0)));
    } else {
      doc.rows.push_back(report::make_row(t, quantize(t, cfg.omega, cfg.p0)));
    }
  }
  text = report::render(doc, cfg.format);
  return kExitOk;
}

int cmd_verify(const std::string& scope, const RunConfig& cfg, std::string& text) {
  std::vector<Check> checks;
  std::vector<AnomalyCertificate> certs;
  const bool all = scope == "all";
  if (all || scope == "matrix-lax") checks.push_back(check_matrix_lax(cfg));
  if (all || scope == "operadic-lax") checks.push_back(check_operadic_lax(cfg));
  if (all || scope == "jacobi-classical") {
    for (auto& c : check_classical(cfg)) checks.push_back(std::move(c));
  }
  if (all || scope == "jacobi-quantum") {
    for (auto& c : check_quantum(cfg, certs)) checks.push_back(std::move(c));
  }
  text = render_verify(checks, certs, cfg.format);
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_trace(const BianchiType& t, const RunConfig& cfg, std::string& text) {
  if (cfg.t_samples < 2) throw UsageError("--t-samples must be at least 2");
  if (cfg.t_end) {
    if (!(*cfg.t_end > 0)) throw UsageError("--t-end must be positive");
    if (to_double(cfg.omega) * *cfg.t_end >= std::numbers::pi) {
      throw UsageError("--t-end leaves the principal window omega t < pi");
    }
  }
  const auto mu = deform(t, cfg.omega, cfg.p0);
  std::vector<std::string> columns{"t", "q", "p", "Ap", "Am"};
  for (const auto& e : kIndependentEntries) columns.push_back(entry_label(e[0], e[1], e[2]));

  std::vector<std::vector<double>> rows;
  for (double tk : window_times(cfg)) {
    const auto point = flow_point(cfg, tk);
    std::vector<double> row{tk, point[0], point[1], point[2], point[3]};
    for (const auto& e : kIndependentEntries) row.push_back(evaluate(mu(e[0], e[1], e[2]), point));
    rows.push_back(std::move(row));
  }

  std::ostringstream out;
  if (cfg.format == report::Format::Json) {
    nlohmann::ordered_json j;
    j["type"] = tag_name(t.tag());
    j["a"] = t.a_if_any() ? nlohmann::ordered_json(to_string(*t.a_if_any())) : nlohmann::ordered_json(nullptr);
    j["omega"] = to_string(cfg.omega);
    j["p0"] = to_string(cfg.p0);
    j["columns"] = columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (double v : row) r.push_back(fmt_double(v));
      j["rows"].push_back(std::move(r));
    }
    out << j.dump(2) << '\n';
  } else {
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << fmt_double(row[c]);
      out << '\n';
    }
  }
  text = out.str();
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for operadic Lax representations of the harmonic oscillator "
               "and the dynamical Bianchi algebras"};
  app.name("opbianchi");
  app.require_subcommand(1);

  std::string omega_text = "1", p0_text = "2", a_text = "1/2", format_text, type_text, out_path;
  RunConfig cfg;
  app.add_option("--omega", omega_text, "oscillator frequency (rational, > 0)")->capture_default_str();
  app.add_option("--p0", p0_text, "initial momentum p0 (rational, > 0)")->capture_default_str();
  app.add_option("--a", a_text, "parameter a of VII_a and VI_a (rational, > 0)")->capture_default_str();
  app.add_option("--type", type_text, "restrict to one Bianchi type (e.g. V, VII_a, III)");
  app.add_option("--format", format_text, "json, csv or text (trace: csv or json)");
  app.add_option("--t-samples", cfg.t_samples, "number of trace samples")->capture_default_str();
  app.add_option("--t-end", cfg.t_end, "last trace time, sampled inclusively; needs omega t_end < pi");
  app.add_option("--out", out_path, "write output to FILE instead of stdout");

  std::string which, scope, trace_type;
  auto* tables = app.add_subcommand("tables", "export the Bianchi structure constants, their "
                                              "dynamical deformations, or the quantum tensors");
  tables->add_option("which", which, "bianchi, deformed or quantum")
      ->required()
      ->check(CLI::IsMember({"bianchi", "deformed", "quantum"}));
  auto* verify = app.add_subcommand("verify", "run exact verification suites");
  verify->add_option("scope", scope, "matrix-lax, operadic-lax, jacobi-classical, jacobi-quantum or all")
      ->required()
      ->check(CLI::IsMember({"matrix-lax", "operadic-lax", "jacobi-classical", "jacobi-quantum", "all"}));
  auto* trace = app.add_subcommand("trace", "CSV time series of the deformed structure constants");
  trace->add_option("type", trace_type, "Bianchi type")->required();
  for (auto* sub : {tables, verify, trace}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << (e.get_name() == "CallForAllHelp" ? app.help("", CLI::AppFormatMode::All) : app.help());
      return kExitOk;
    }
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kExitUsage;
  }

  std::string text;
  int code = kExitOk;
  try {
    cfg.omega = parse_positive(omega_text, "--omega");
    cfg.p0 = parse_positive(p0_text, "--p0");
    cfg.a = parse_positive(a_text, "--a");
    if (!format_text.empty()) {
      try {
        cfg.format = report::parse_format(format_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      cfg.format_given = true;
    }
    auto parse_tag = [](const std::string& name) {
      try {
        return parse_bianchi_tag(name);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    };
    if (!type_text.empty()) cfg.type = parse_tag(type_text);

    if (tables->parsed()) {
      code = cmd_tables(which, cfg, text);
    } else if (verify->parsed()) {
      code = cmd_verify(scope, cfg, text);
    } else {
      if (!cfg.format_given) cfg.format = report::Format::Csv;
      if (cfg.format == report::Format::Text) throw UsageError("trace emits csv or json");
      code = cmd_trace(make_type(parse_tag(trace_type), cfg), cfg, text);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace opbianchi::cli
