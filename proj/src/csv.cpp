#include "metro/csv.hpp"

#include <fstream>
#include <sstream>

#include "metro/errors.hpp"

namespace metro {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

std::vector<std::string> split_line(const std::string& line, const std::string& path,
                                    std::size_t line_number) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  if (quoted)
    throw ValidationError(path + ":" + std::to_string(line_number) + ": unterminated quote");
  fields.push_back(field);
  return fields;
}

}  // namespace

CsvTable read_csv(const std::string& path) {
  std::string content = read_file(path);
  CsvTable table;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t end = content.find('\n', pos);
    std::string line =
        (end == std::string::npos) ? content.substr(pos) : content.substr(pos, end - pos);
    pos = (end == std::string::npos) ? content.size() + 1 : end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    auto fields = split_line(line, path, line_number);
    if (table.header.empty()) {
      table.header = std::move(fields);
    } else {
      if (fields.size() != table.header.size())
        throw ValidationError(path + ":" + std::to_string(line_number) + ": expected " +
                              std::to_string(table.header.size()) + " fields, found " +
                              std::to_string(fields.size()));
      table.rows.push_back(std::move(fields));
      table.line_numbers.push_back(line_number);
    }
  }
  if (table.header.empty()) throw ValidationError(path + ": empty file");
  return table;
}

}  // namespace metro
