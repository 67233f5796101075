#include "qpi/json_io.hpp"

#include <json.hpp>
#include <sstream>

namespace qpi {

namespace {

using nlohmann::json;

json series_json(const LaurentSeries& s) {
  json coeffs = json::array();
  const std::int64_t order =
      s.is_exact() ? s.floor() + static_cast<std::int64_t>(s.coeffs().size()) : s.order();
  for (const auto& c : s.coeffs())
    coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return json{{"coeffs", std::move(coeffs)},
              {"floor", s.floor()},
              {"order", order},
              {"scale", s.scale()}};
}

json mismatch_json(const Mismatch& m) {
  json j{{"lhs", rat_to_string(m.lhs)},
         {"rhs", rat_to_string(m.rhs)},
         {"scale", m.scale},
         {"t_exponent", m.t_exponent}};
  if (!m.case_label.empty()) j["case"] = m.case_label;
  return j;
}

json report_json(const VerificationReport& r) {
  json j{{"elapsed_ms", r.elapsed_ms},
         {"id", r.id},
         {"order", r.order},
         {"status", to_string(r.status)}};
  j["first_mismatch"] = r.first_mismatch ? mismatch_json(*r.first_mismatch) : json(nullptr);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

}  // namespace

std::string to_json_string(const LaurentSeries& s) { return series_json(s).dump(); }

std::string to_json_string(const VerificationReport& r) { return report_json(r).dump(); }

std::string to_json_string(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump();
}

std::string to_json_string(const WzGridReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"k", f.k},
                        {"lhs", rat_to_string(f.cmp.lhs)},
                        {"n", f.n},
                        {"rhs", rat_to_string(f.cmp.rhs)},
                        {"t_exponent", f.cmp.t_exponent}});
  }
  json j{{"a", rat_to_string(report.a)},
         {"all_equal", report.all_equal},
         {"checked", report.checked},
         {"failures", std::move(failures)},
         {"kmax", report.kmax},
         {"nmax", report.nmax},
         {"order", report.order}};
  return j.dump();
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "id,order,status,first_mismatch,elapsed_ms\n";
  for (const auto& r : reports) {
    out << r.id << ',' << r.order << ',' << to_string(r.status) << ',';
    if (r.first_mismatch) {
      const auto& m = *r.first_mismatch;
      out << "t^" << m.t_exponent << " lhs=" << rat_to_string(m.lhs)
          << " rhs=" << rat_to_string(m.rhs);
    }
    out << ',' << r.elapsed_ms << '\n';
  }
  return out.str();
}

std::string series_to_csv(const LaurentSeries& s) {
  std::ostringstream out;
  out << "q_exponent,numerator,denominator\n";
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    const std::int64_t e = s.floor() + static_cast<std::int64_t>(i);
    BigRational qe(e, s.scale());
    qe.canonicalize();
    out << rat_to_string(qe) << ',' << s.coeffs()[i].get_num().get_str() << ','
        << s.coeffs()[i].get_den().get_str() << '\n';
  }
  return out.str();
}

}  // namespace qpi
