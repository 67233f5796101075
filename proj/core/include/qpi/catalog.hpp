#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpi/series.hpp"

namespace qpi {

using SeriesBuilder = std::function<LaurentSeries(std::int64_t order)>;

/// One comparison a catalog entry runs: both sides built independently at the
/// requested order.  Grid entries carry one case per parameter point.
struct VerificationCase {
  std::string label;  // empty for single identities, "d=q^2" style for grids
  SeriesBuilder lhs;
  SeriesBuilder rhs;
};

struct IdentityEntry {
  std::string id;
  std::string description;
  std::string source;  // literature attribution
  std::int64_t default_order = 100;
  std::vector<VerificationCase> cases;
};

enum class VerifyStatus { verified, mismatch, error };

std::string to_string(VerifyStatus status);

struct Mismatch {
  std::int64_t t_exponent = 0;
  int scale = 1;
  BigRational lhs;
  BigRational rhs;
  std::string case_label;
};

struct VerificationReport {
  std::string id;
  std::int64_t order = 0;
  VerifyStatus status = VerifyStatus::error;
  std::optional<Mismatch> first_mismatch;  // present exactly when status == mismatch
  std::string detail;                      // diagnostics for status == error
  std::int64_t elapsed_ms = 0;
};

/// Registry binding every identity to two independent series builders.
class Catalog {
public:
  /// All builtin entries: pi1, pi2, gl1, gl2, q2, qid, gauss-psi, sum-2phi2,
  /// reduced-3phi3, ck2-grid, red-grid.
  static Catalog builtin();

  void add(IdentityEntry entry);  // duplicate id is an error
  const IdentityEntry* find(std::string_view id) const;
  std::vector<std::string> ids() const;  // registration order
  std::size_t size() const { return entries_.size(); }

  /// Builds both sides of every case at `order` (0 = the entry's default) and
  /// compares exactly.  Builder exceptions land in status = error.
  VerificationReport verify(std::string_view id, std::int64_t order = 0) const;

  /// Runs every entry, concurrently when `parallel`, reporting in
  /// registration order.  Individual failures never abort the run.
  std::vector<VerificationReport> verify_all(std::int64_t order_override = 0,
                                             bool parallel = true) const;

  /// Named series for the CLI: "<id>.lhs" / "<id>.rhs" of single-case
  /// entries, plus "psi.sum", "psi.product", "lambert.pi1", "lambert.pi2".
  LaurentSeries expand(std::string_view name, std::int64_t order) const;

private:
  std::vector<IdentityEntry> entries_;
};

/// Ordinary power-series expansions of the Lambert-type sum sides:
///   pi1:   sum_k (-1)^k sum_m q^{k + (2k+1) m}
///   pi2:   sum_k (-1)^k sum_m q^{k(k+3)/2 + (2k+1) m}
///   q2rhs: (1/2) sum_n q^{2n} / (1 - q^{2n+1})^2
enum class LambertKind { pi1, pi2, q2rhs };
LaurentSeries lambert_expand(LambertKind kind, std::int64_t order);

}  // namespace qpi
