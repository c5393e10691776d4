#ifndef METRO_REPORT_HPP
#define METRO_REPORT_HPP

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

namespace metro {

// 64-bit FNV-1a content digest, rendered as 16 hex characters.
std::string fnv1a_hex(std::string_view bytes);

// Fixed 9-significant-digit rendering used for every numeric value that
// leaves the toolkit, so identical inputs serialize byte-identically.
std::string format_number(double value);

// Deterministic JSON serialization: keys sorted (nlohmann objects iterate
// in key order), two-space indentation, floating point values rendered via
// format_number. Throws NumericalError on non-finite values.
std::string canonical_dump(const nlohmann::json& value);

// Standard report wrapper written by every analysis command.
nlohmann::json make_envelope(
    const std::string& command,
    const std::map<std::string, std::pair<std::string, std::string>>& inputs,
    nlohmann::json parameters, nlohmann::json result);

}  // namespace metro

#endif
