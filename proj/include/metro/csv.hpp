#ifndef METRO_CSV_HPP
#define METRO_CSV_HPP

#include <string>
#include <vector>

namespace metro {

// Minimal CSV reader: comma separator, optional double-quoted fields with
// "" escapes, CRLF tolerated. Keeps the 1-based source line of every row
// for diagnostics.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
};

CsvTable read_csv(const std::string& path);

// Reads a whole file as bytes. Throws ValidationError if unreadable.
std::string read_file(const std::string& path);

}  // namespace metro

#endif
