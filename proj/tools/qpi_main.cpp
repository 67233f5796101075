// qpi: exact verification of a family of q-series identities, their WZ-pair
// structure, and the classical pi / pi^2 series they degenerate to.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qpi/arithfns.hpp"
#include "qpi/catalog.hpp"
#include "qpi/hyperphi.hpp"
#include "qpi/json_io.hpp"
#include "qpi/numerics.hpp"
#include "qpi/qproducts.hpp"
#include "qpi/series.hpp"
#include "qpi/wz.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct CliConfig {
  std::string format = "text";  // text | json | csv
  std::string out;              // empty = stdout
  std::int64_t order = 0;       // 0 = entry default / builtin default
  std::string config_path;
};

// Optional JSON config file; explicit flags win over it, it wins over the
// QPI_DEFAULT_ORDER environment variable.
void apply_config_defaults(CliConfig& cfg, const CLI::App& cmd) {
  nlohmann::json file;
  if (!cfg.config_path.empty()) {
    std::ifstream in(cfg.config_path);
    if (!in) throw qpi::Error("cannot open config file: " + cfg.config_path);
    in >> file;
  }
  auto unset = [&cmd](const std::string& flag) {
    const CLI::Option* opt = cmd.get_option_no_throw(flag);
    return opt != nullptr && opt->count() == 0;
  };
  if (unset("--order")) {
    if (file.contains("order")) {
      cfg.order = file["order"].get<std::int64_t>();
    } else if (const char* env = std::getenv("QPI_DEFAULT_ORDER")) {
      cfg.order = std::strtoll(env, nullptr, 10);
    }
  }
  if (unset("--format") && file.contains("format"))
    cfg.format = file["format"].get<std::string>();
  if (unset("--out") && file.contains("out")) cfg.out = file["out"].get<std::string>();
}

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw qpi::Error("cannot open output file: " + cfg.out);
  out << text;
}

void add_common(CLI::App* cmd, CliConfig& cfg, bool with_order = true) {
  if (with_order) cmd->add_option("--order", cfg.order, "truncation order in q-exponent units");
  cmd->add_option("--format", cfg.format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", cfg.out, "write the report to a file instead of stdout");
  cmd->add_option("--config", cfg.config_path, "JSON config file (flags win)");
}

std::string report_text(const qpi::VerificationReport& r) {
  std::ostringstream out;
  out << r.id << " @ order " << r.order << ": " << qpi::to_string(r.status);
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    out << " at t^" << m.t_exponent << " (scale " << m.scale
        << "): " << qpi::rat_to_string(m.lhs) << " != " << qpi::rat_to_string(m.rhs);
    if (!m.case_label.empty()) out << " [" << m.case_label << "]";
  }
  if (!r.detail.empty()) out << " (" << r.detail << ")";
  out << " [" << r.elapsed_ms << " ms]";
  return out.str();
}

int reports_exit_code(const std::vector<qpi::VerificationReport>& reports) {
  bool any_mismatch = false;
  for (const auto& r : reports) {
    if (r.status == qpi::VerifyStatus::error) return kExitInternal;
    if (r.status == qpi::VerifyStatus::mismatch) any_mismatch = true;
  }
  return any_mismatch ? kExitCheckFailed : kExitOk;
}

int run_reports(const CliConfig& cfg, const std::vector<qpi::VerificationReport>& reports) {
  if (cfg.format == "json") {
    emit(cfg, qpi::to_json_string(reports));
  } else if (cfg.format == "csv") {
    emit(cfg, qpi::reports_to_csv(reports));
  } else {
    std::ostringstream out;
    for (const auto& r : reports) out << report_text(r) << '\n';
    emit(cfg, out.str());
  }
  return reports_exit_code(reports);
}

std::string series_text(const qpi::LaurentSeries& s) {
  // Plain coefficient list for ordinary power series at scale 1; exponent
  // pairs otherwise.
  std::ostringstream out;
  if (s.scale() == 1 && s.floor() >= 0) {
    bool first = true;
    for (std::int64_t e = 0; e < s.order(); ++e) {
      if (!first) out << ", ";
      out << qpi::rat_to_string(s.coeff(e));
      first = false;
    }
  } else {
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
      qpi::BigRational qe(s.floor() + static_cast<std::int64_t>(i), s.scale());
      qe.canonicalize();
      out << "q^" << qpi::rat_to_string(qe) << ": " << qpi::rat_to_string(s.coeffs()[i]) << '\n';
    }
  }
  return out.str();
}

qpi::BigRational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return qpi::rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return qpi::BigRational(j.get<std::int64_t>());
  throw qpi::Error("expected a rational as integer or \"p/q\" string");
}

qpi::QMonomial monomial_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw qpi::Error("expected a monomial as [coefficient, exponent]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

qpi::PhiSpec phi_spec_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  qpi::PhiSpec spec;
  for (const auto& u : j.at("upper")) spec.upper.push_back(monomial_from_json(u));
  for (const auto& l : j.at("lower")) spec.lower.push_back(monomial_from_json(l));
  spec.base = rational_from_json(j.at("base"));
  spec.argument = monomial_from_json(j.at("argument"));
  if (j.contains("order")) spec.order = j["order"].get<std::int64_t>();
  return spec;
}

std::vector<double> parse_eps_list(const std::string& text) {
  std::vector<double> eps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) eps.push_back(std::stod(item));
  }
  return eps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qpi: exact q-series identity verification and pi-series numerics"};
  app.require_subcommand(1);

  CliConfig cfg;

  // verify <id>
  std::string verify_id;
  auto* cmd_verify = app.add_subcommand("verify", "verify one catalog identity");
  cmd_verify->add_option("id", verify_id, "catalog identity id")->required();
  add_common(cmd_verify, cfg);

  // verify-all
  auto* cmd_verify_all = app.add_subcommand("verify-all", "verify every catalog identity");
  add_common(cmd_verify_all, cfg);

  // expand <name>
  std::string expand_name;
  std::string phi_json;
  auto* cmd_expand = app.add_subcommand("expand", "expand a named series or a phi spec");
  cmd_expand->add_option("name", expand_name,
                         "series name, e.g. qid.lhs, pi2.rhs, psi.sum, lambert.pi2");
  cmd_expand->add_option("--phi", phi_json,
                         "JSON phi spec {upper:[[c,r]..], lower:[..], base, argument, order}");
  add_common(cmd_expand, cfg);

  // wz-check
  std::string wz_a = "1/2";
  std::int64_t wz_nmax = 5, wz_kmax = 5;
  auto* cmd_wz = app.add_subcommand("wz-check", "check the WZ pair relation on a grid");
  cmd_wz->add_option("--a", wz_a, "rational offset, e.g. 1/2");
  cmd_wz->add_option("--nmax", wz_nmax, "largest n");
  cmd_wz->add_option("--kmax", wz_kmax, "largest k");
  add_common(cmd_wz, cfg);

  // limit <id>
  std::string limit_id;
  std::string limit_eps = "0.1,0.03,0.01";
  auto* cmd_limit = app.add_subcommand("limit", "q->1 limit experiment");
  cmd_limit->add_option("id", limit_id, "expression id: pi, pi2.rhs, pi2.lhs, qid.rhs")
      ->required();
  cmd_limit->add_option("--eps", limit_eps, "comma list of strictly decreasing epsilons");
  add_common(cmd_limit, cfg, /*with_order=*/false);

  // classical <name>
  std::string classical_name;
  int classical_terms = 40;
  auto* cmd_classical = app.add_subcommand("classical", "classical pi / pi^2 series partial sum");
  cmd_classical->add_option("name", classical_name, "series name, e.g. guillera")->required();
  cmd_classical->add_option("--terms", classical_terms, "number of terms");
  add_common(cmd_classical, cfg, /*with_order=*/false);

  // arith
  std::int64_t arith_max = 100;
  auto* cmd_arith = app.add_subcommand("arith", "t2 representation-count table");
  cmd_arith->add_option("--max", arith_max, "largest n in the table");
  add_common(cmd_arith, cfg, /*with_order=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    apply_config_defaults(cfg, *cmd);
    const qpi::Catalog catalog = qpi::Catalog::builtin();

    if (cmd == cmd_verify) {
      if (!catalog.find(verify_id)) {
        std::cerr << "unknown identity: " << verify_id << '\n';
        return kExitUsage;
      }
      return run_reports(cfg, {catalog.verify(verify_id, cfg.order)});
    }

    if (cmd == cmd_verify_all) {
      return run_reports(cfg, catalog.verify_all(cfg.order));
    }

    if (cmd == cmd_expand) {
      qpi::LaurentSeries series;
      if (!phi_json.empty()) {
        qpi::PhiSpec spec = phi_spec_from_json(phi_json);
        if (cfg.order > 0) spec.order = cfg.order;
        if (spec.order <= 0) spec.order = 20;
        series = qpi::phi(spec);
      } else if (!expand_name.empty()) {
        const std::int64_t order = cfg.order > 0 ? cfg.order : 20;
        try {
          series = catalog.expand(expand_name, order);
        } catch (const qpi::UnknownNameError&) {
          series = qpi::product_side(expand_name, order);  // pi1.rhs style names
        }
      } else {
        std::cerr << "expand needs a series name or --phi\n";
        return kExitUsage;
      }
      if (cfg.format == "json")
        emit(cfg, qpi::to_json_string(series));
      else if (cfg.format == "csv")
        emit(cfg, qpi::series_to_csv(series));
      else
        emit(cfg, series_text(series));
      return kExitOk;
    }

    if (cmd == cmd_wz) {
      const qpi::BigRational a = qpi::rat_from_string(wz_a);
      const std::int64_t order = cfg.order > 0 ? cfg.order : 60;
      const qpi::WzGridReport report = qpi::wz_grid_check(a, wz_nmax, wz_kmax, order);
      if (cfg.format == "text") {
        std::ostringstream out;
        out << "wz pair relation, a=" << qpi::rat_to_string(report.a) << ", grid "
            << report.nmax << "x" << report.kmax << ", order " << report.order << ": "
            << (report.all_equal ? "all equal" : "FAILED") << " (" << report.checked
            << " points)\n";
        emit(cfg, out.str());
      } else {
        emit(cfg, qpi::to_json_string(report));
      }
      return report.all_equal ? kExitOk : kExitCheckFailed;
    }

    if (cmd == cmd_limit) {
      const qpi::LimitExperiment ex = qpi::q_limit(limit_id, parse_eps_list(limit_eps));
      std::ostringstream out;
      if (cfg.format == "csv") {
        out << "eps,value,abs_error\n";
        for (std::size_t i = 0; i < ex.eps.size(); ++i)
          out << ex.eps[i] << ',' << ex.values[i] << ',' << ex.errors[i] << '\n';
      } else {
        out << ex.id << " -> target " << ex.target << '\n';
        for (std::size_t i = 0; i < ex.eps.size(); ++i)
          out << "  eps=" << ex.eps[i] << "  value=" << ex.values[i]
              << "  abs_error=" << ex.errors[i] << '\n';
        out << (ex.errors_strictly_decreasing ? "errors strictly decreasing\n"
                                              : "errors NOT strictly decreasing\n");
      }
      emit(cfg, out.str());
      return kExitOk;
    }

    if (cmd == cmd_classical) {
      const double value = qpi::classical_series(classical_name, classical_terms);
      const double target = qpi::classical_target(classical_name);
      std::ostringstream out;
      out.precision(15);
      out << classical_name << " terms=" << classical_terms << " value=" << value
          << " target=" << target << " abs_error=" << std::abs(value - target) << '\n';
      emit(cfg, out.str());
      return kExitOk;
    }

    if (cmd == cmd_arith) {
      std::ostringstream out;
      out << "n,t2_brute,t2_formula,match\n";
      bool all = true;
      for (std::int64_t n = 0; n <= arith_max; ++n) {
        const qpi::DivisorSumResult row = qpi::t2_check(n);
        all = all && row.match();
        out << row.n << ',' << row.brute << ',' << row.formula << ','
            << (row.match() ? 1 : 0) << '\n';
      }
      emit(cfg, out.str());
      return all ? kExitOk : kExitCheckFailed;
    }

    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const qpi::UnknownNameError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
