#include "qpi/catalog.hpp"

#include <chrono>
#include <future>

#include "qpi/hyperphi.hpp"
#include "qpi/qproducts.hpp"

namespace qpi {

std::string to_string(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::verified: return "verified";
    case VerifyStatus::mismatch: return "mismatch";
    case VerifyStatus::error: return "error";
  }
  return "error";
}

void Catalog::add(IdentityEntry entry) {
  if (find(entry.id)) throw Error("duplicate catalog id: " + entry.id);
  if (entry.cases.empty()) throw Error("catalog entry without cases: " + entry.id);
  entries_.push_back(std::move(entry));
}

const IdentityEntry* Catalog::find(std::string_view id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<std::string> Catalog::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.id);
  return out;
}

VerificationReport Catalog::verify(std::string_view id, std::int64_t order) const {
  const IdentityEntry* entry = find(id);
  if (!entry) throw UnknownNameError("unknown identity: " + std::string(id));
  VerificationReport report;
  report.id = entry->id;
  report.order = order > 0 ? order : entry->default_order;

  const auto start = std::chrono::steady_clock::now();
  report.status = VerifyStatus::verified;
  for (const auto& vc : entry->cases) {
    try {
      const LaurentSeries lhs = vc.lhs(report.order);
      const LaurentSeries rhs = vc.rhs(report.order);
      const SeriesCompare cmp = ts_eq_to_q_order(lhs, rhs, report.order);
      if (!cmp.equal) {
        report.status = VerifyStatus::mismatch;
        report.first_mismatch = Mismatch{cmp.t_exponent, cmp.scale, cmp.lhs, cmp.rhs, vc.label};
        break;
      }
    } catch (const std::exception& e) {
      report.status = VerifyStatus::error;
      report.detail = vc.label.empty() ? e.what() : vc.label + ": " + e.what();
      break;
    }
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::vector<VerificationReport> Catalog::verify_all(std::int64_t order_override,
                                                    bool parallel) const {
  std::vector<VerificationReport> out;
  out.reserve(entries_.size());
  if (!parallel) {
    for (const auto& e : entries_) out.push_back(verify(e.id, order_override));
    return out;
  }
  std::vector<std::future<VerificationReport>> futures;
  futures.reserve(entries_.size());
  for (const auto& e : entries_) {
    futures.push_back(std::async(std::launch::async, [this, &e, order_override] {
      return verify(e.id, order_override);
    }));
  }
  for (auto& f : futures) out.push_back(f.get());  // registration order
  return out;
}

LaurentSeries Catalog::expand(std::string_view name, std::int64_t order) const {
  if (name == "psi.sum") return psi_sum(order);
  if (name == "psi.product") return psi_product(order);
  if (name == "lambert.pi1") return lambert_expand(LambertKind::pi1, order);
  if (name == "lambert.pi2") return lambert_expand(LambertKind::pi2, order);

  const auto dot = name.rfind('.');
  if (dot != std::string_view::npos) {
    const std::string_view id = name.substr(0, dot);
    const std::string_view side = name.substr(dot + 1);
    if (const IdentityEntry* entry = find(id); entry && (side == "lhs" || side == "rhs")) {
      if (entry->cases.size() != 1)
        throw UnknownNameError("grid entry '" + std::string(id) +
                               "' has no single series expansion");
      const auto& vc = entry->cases.front();
      return side == "lhs" ? vc.lhs(order) : vc.rhs(order);
    }
  }
  throw UnknownNameError("unknown series name: " + std::string(name));
}

LaurentSeries lambert_expand(LambertKind kind, std::int64_t order) {
  if (order < 1) throw Error("lambert_expand needs order >= 1");
  if (kind == LambertKind::q2rhs) return product_side("q2.rhs", order);
  std::vector<BigRational> coeffs(static_cast<std::size_t>(order));
  for (std::int64_t k = 0;; ++k) {
    const std::int64_t start = (kind == LambertKind::pi2) ? k * (k + 3) / 2 : k;
    if (start >= order) break;
    const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    for (std::int64_t e = start; e < order; e += 2 * k + 1)
      coeffs[static_cast<std::size_t>(e)] += sign;
  }
  return LaurentSeries::window(1, 0, order, std::move(coeffs));
}

Catalog Catalog::builtin() {
  Catalog cat;

  auto single = [&cat](std::string id, std::string description, std::string source,
                       std::int64_t order, SeriesBuilder lhs, SeriesBuilder rhs) {
    IdentityEntry e;
    e.id = std::move(id);
    e.description = std::move(description);
    e.source = std::move(source);
    e.default_order = order;
    e.cases.push_back({"", std::move(lhs), std::move(rhs)});
    cat.add(std::move(e));
  };

  single("pi1", "sum (-q)^k/(1-q^{2k+1}) = (q^4;q^4)^2/(q^2;q^4)^2,  a q-analogue of Leibniz",
         "Ramanujan (second notebook)", 1000,
         [](std::int64_t o) { return pi1_lhs(o); },
         [](std::int64_t o) { return product_side("pi1.rhs", o); });

  single("pi2",
         "sum (-1)^k q^{k(k+3)/2}/(1-q^{2k+1}) = (q^2;q^2)(q^8;q^8)/((q;q^2)(q^4;q^8)),"
         " a second q-analogue of Leibniz",
         "theta-quotient identity", 1000,
         [](std::int64_t o) { return pi2_lhs(o); },
         [](std::int64_t o) { return product_side("pi2.rhs", o); });

  single("gl1", "q-analogue of Ramanujan's 6n+1 series for 4/pi",
         "Guo-Liu", 300,
         [](std::int64_t o) { return gl_lhs(1, o); },
         [](std::int64_t o) { return product_side("gl1.rhs", o); });

  single("gl2", "alternating q-analogue of Ramanujan's 6n+1 series for 2*sqrt(2)/pi",
         "Guo-Liu", 300,
         [](std::int64_t o) { return gl_lhs(2, o); },
         [](std::int64_t o) { return product_side("gl2.rhs", o); });

  single("q2", "telescoped q-analogue of Guillera's series for pi^2/2 (Lambert form)",
         "q-analogue of Guillera's WZ pair", 300,
         [](std::int64_t o) { return q2_lhs(o); },
         [](std::int64_t o) { return product_side("q2.rhs", o); });

  single("qid", "sum q^{n(n+1)/2}(1-q^{3n+2})/(1-q) (q;q)_n^3(-q;q)_n/(q^3;q^2)_n^3"
                " = (1-q)^2 (q^2;q^2)^4/(q;q^2)^4",
         "q-analogue of Guillera's series for pi^2/2", 300,
         [](std::int64_t o) { return qid_lhs(o); },
         [](std::int64_t o) { return product_side("qid.rhs", o); });

  single("gauss-psi", "psi(q) = sum q^{T_n} = (q^2;q^2)/(q;q^2)",
         "Gauss", 1000,
         [](std::int64_t o) { return psi_sum(o); },
         [](std::int64_t o) { return psi_product(o); });

  single("sum-2phi2", "2phi2[q,q; -q^2,-q^3; q^2, q^3] = (-q^4;q^4)^2/(-q^3;q^2)",
         "Gasper-Rahman summation, monomial instance", 300,
         [](std::int64_t o) { return phi22_summation_lhs(q_pow(1), qmono(-1, 3), 2, o); },
         [](std::int64_t o) { return phi22_summation_rhs(q_pow(1), qmono(-1, 3), 2, o); });

  single("reduced-3phi3",
         "3phi3[q,sqrt(q),-sqrt(q); -q^{3/2},q^{3/2},0; q,q^2] (q^3;q^2)^2"
         " = (q^2;q^2)(q^4;q^2) 2phi2[q,q;-q^2,-q^3;q^2,q^3]",
         "base-change reduction at scale 2", 300,
         [](std::int64_t o) { return reduced3phi3_lhs(o); },
         [](std::int64_t o) { return reduced3phi3_rhs(o); });

  {
    // The d = q^3 and d = q^4 points of the printed grid are degenerate
    // (0/0 summands, and a vanishing denominator factor at n >= 2), so the
    // grid samples clean monomials instead, including a fractional exponent
    // and a non-unit coefficient.
    IdentityEntry e;
    e.id = "ck2-grid";
    e.description = "cubic-argument quadratic transformation at a=q^2, b=c=q over monomial d";
    e.source = "Gasper-Rahman quadratic transformation, monomial instances";
    e.default_order = 80;
    const std::vector<std::pair<std::string, QMonomial>> grid = {
        {"d=q", q_pow(1)},
        {"d=q^2", q_pow(2)},
        {"d=q^(5/2)", q_pow(BigRational(5, 2))},
        {"d=2q^3", qmono(2, 3)},
    };
    for (const auto& [label, d] : grid) {
      e.cases.push_back({label,
                         [d](std::int64_t o) { return ck2_lhs(d, o); },
                         [d](std::int64_t o) { return ck2_rhs(d, o); }});
    }
    cat.add(std::move(e));
  }

  {
    IdentityEntry e;
    e.id = "red-grid";
    e.description = "terminating quadratic summation over (N, d), Laurent intermediates included";
    e.source = "Gasper-Rahman quadratic summation after the terminating substitution";
    e.default_order = 80;
    for (std::int64_t N = 1; N <= 4; ++N) {
      const std::vector<std::pair<std::string, QMonomial>> ds = {
          {"d=q^2", q_pow(2)},
          {"d=q^4", q_pow(4)},
          {"d=q^-" + std::to_string(2 * N), q_pow(-2 * N)},
      };
      for (const auto& [dlabel, d] : ds) {
        e.cases.push_back({"N=" + std::to_string(N) + "," + dlabel,
                           [N, d](std::int64_t o) { return red_lhs(N, d, o); },
                           [N, d](std::int64_t o) { return red_rhs(N, d, o); }});
      }
    }
    cat.add(std::move(e));
  }

  return cat;
}

}  // namespace qpi
