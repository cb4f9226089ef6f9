#pragma once

#include <string>

#include "json.hpp"
#include "netctrl/driver.hpp"
#include "netctrl/oracle.hpp"

namespace netctrl {

/// Stable field order, stable member order; two runs over the same input
/// produce byte-identical text.
nlohmann::ordered_json report_to_json(const DriverReport& r);
std::string report_to_text(const DriverReport& r);

nlohmann::ordered_json verification_to_json(const VerificationResult& v);
std::string verification_to_text(const VerificationResult& v);

}  // namespace netctrl
