#include "metro/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

#include "metro/errors.hpp"

namespace metro {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string format_number(double value) {
  if (!std::isfinite(value)) throw NumericalError("non-finite value in report output");
  if (value == 0.0) value = 0.0;  // collapse negative zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

namespace {

void dump(const nlohmann::json& value, std::string& out, int depth) {
  const std::string pad(2 * depth, ' ');
  const std::string pad_in(2 * (depth + 1), ' ');
  switch (value.type()) {
    case nlohmann::json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + nlohmann::json(it.key()).dump() + ": ";
        dump(it.value(), out, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : value) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump(item, out, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      out += format_number(value.get<double>());
      return;
    default:
      out += value.dump();
      return;
  }
}

}  // namespace

std::string canonical_dump(const nlohmann::json& value) {
  std::string out;
  dump(value, out, 0);
  out += "\n";
  return out;
}

nlohmann::json make_envelope(
    const std::string& command,
    const std::map<std::string, std::pair<std::string, std::string>>& inputs,
    nlohmann::json parameters, nlohmann::json result) {
  nlohmann::json files = nlohmann::json::object();
  for (const auto& [role, entry] : inputs)
    files[role] = {{"path", entry.first}, {"digest", "fnv1a:" + entry.second}};
  return nlohmann::json{{"command", command},
                        {"inputs", files},
                        {"parameters", std::move(parameters)},
                        {"result", std::move(result)},
                        {"schema_version", 1}};
}

}  // namespace metro
