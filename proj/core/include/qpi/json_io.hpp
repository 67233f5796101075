#pragma once

#include <string>
#include <vector>

#include "qpi/catalog.hpp"
#include "qpi/series.hpp"
#include "qpi/wz.hpp"

namespace qpi {

/// Canonical JSON: alphabetically ordered keys, and only integers / strings
/// for exact data, so parse -> dump round-trips byte-identically.
std::string to_json_string(const LaurentSeries& s);
std::string to_json_string(const VerificationReport& r);
std::string to_json_string(const std::vector<VerificationReport>& reports);
std::string to_json_string(const WzGridReport& report);

/// CSV with columns id,order,status,first_mismatch,elapsed_ms.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);
/// CSV with columns q_exponent,numerator,denominator.
std::string series_to_csv(const LaurentSeries& s);

}  // namespace qpi
