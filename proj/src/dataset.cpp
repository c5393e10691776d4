#include "metro/dataset.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "metro/csv.hpp"
#include "metro/errors.hpp"
#include "metro/report.hpp"

namespace metro {

namespace {

std::string where(const std::string& path, std::size_t line) {
  return path + ":" + std::to_string(line) + ": ";
}

void require_header(const CsvTable& table, const std::vector<std::string>& expected,
                    const std::string& path) {
  if (table.header != expected) {
    std::string want;
    for (const auto& h : expected) want += (want.empty() ? "" : ",") + h;
    throw ValidationError(path + ": header must be exactly '" + want + "'");
  }
}

double parse_real(const std::string& text, const std::string& context) {
  const char* begin = text.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw ValidationError(context + "invalid number '" + text + "'");
  return v;
}

int parse_int(const std::string& text, const std::string& context) {
  const char* begin = text.c_str();
  char* end = nullptr;
  long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0')
    throw ValidationError(context + "invalid integer '" + text + "'");
  return static_cast<int>(v);
}

}  // namespace

Dataset load_dataset(const DatasetPaths& paths) {
  Dataset ds;

  std::string stations_bytes = read_file(paths.stations);
  std::string edges_bytes = read_file(paths.edges);
  ds.inputs["stations"] = {paths.stations, fnv1a_hex(stations_bytes)};
  ds.inputs["edges"] = {paths.edges, fnv1a_hex(edges_bytes)};

  CsvTable station_rows = read_csv(paths.stations);
  require_header(station_rows, {"id", "name", "lat", "lon", "zone"}, paths.stations);
  std::vector<Station> stations;
  std::set<std::string> ids;
  for (std::size_t r = 0; r < station_rows.rows.size(); ++r) {
    const auto& row = station_rows.rows[r];
    const std::string ctx = where(paths.stations, station_rows.line_numbers[r]);
    Station s;
    s.id = row[0];
    s.name = row[1];
    s.lat = parse_real(row[2], ctx);
    s.lon = parse_real(row[3], ctx);
    s.zone = parse_int(row[4], ctx);
    if (s.id.empty()) throw ValidationError(ctx + "empty station id");
    if (!ids.insert(s.id).second)
      throw ValidationError(ctx + "duplicate station id '" + s.id + "'");
    if (s.lat < -90.0 || s.lat > 90.0) throw ValidationError(ctx + "latitude out of range");
    if (s.lon < -180.0 || s.lon > 180.0) throw ValidationError(ctx + "longitude out of range");
    stations.push_back(std::move(s));
  }

  CsvTable edge_rows = read_csv(paths.edges);
  require_header(edge_rows, {"from_id", "to_id", "line"}, paths.edges);
  std::vector<Link> links;
  std::set<std::pair<std::pair<std::string, std::string>, std::string>> seen_pair_line;
  for (std::size_t r = 0; r < edge_rows.rows.size(); ++r) {
    const auto& row = edge_rows.rows[r];
    const std::string ctx = where(paths.edges, edge_rows.line_numbers[r]);
    std::string from = row[0], to = row[1], line = row[2];
    if (!ids.count(from))
      throw ValidationError(ctx + "edge references unknown station '" + from + "'");
    if (!ids.count(to))
      throw ValidationError(ctx + "edge references unknown station '" + to + "'");
    if (from == to) throw ValidationError(ctx + "self loop at station '" + from + "'");
    if (line.empty()) throw ValidationError(ctx + "empty line name");
    std::pair<std::string, std::string> key{std::min(from, to), std::max(from, to)};
    if (!seen_pair_line.insert({key, line}).second)
      throw ValidationError(ctx + "duplicate edge " + from + "-" + to + " on line '" + line +
                            "' (pairs are unordered)");
    links.push_back(Link{from, to, {line}});
  }

  ds.graph = build_graph(std::move(stations), std::move(links));

  if (paths.flows) {
    std::string flows_bytes = read_file(*paths.flows);
    ds.inputs["flows"] = {*paths.flows, fnv1a_hex(flows_bytes)};

    CsvTable flow_rows = read_csv(*paths.flows);
    require_header(flow_rows, {"station_id", "entries_am", "exits_am", "entries_pm", "exits_pm"},
                   *paths.flows);
    std::map<std::string, StationFlows> by_id;
    for (std::size_t r = 0; r < flow_rows.rows.size(); ++r) {
      const auto& row = flow_rows.rows[r];
      const std::string ctx = where(*paths.flows, flow_rows.line_numbers[r]);
      const std::string& id = row[0];
      if (!ids.count(id))
        throw ValidationError(ctx + "flow row references unknown station '" + id + "'");
      if (by_id.count(id))
        throw ValidationError(ctx + "duplicate flow row for station '" + id + "'");
      StationFlows f;
      f.entries_am = parse_real(row[1], ctx);
      f.exits_am = parse_real(row[2], ctx);
      f.entries_pm = parse_real(row[3], ctx);
      f.exits_pm = parse_real(row[4], ctx);
      for (double v : {f.entries_am, f.exits_am, f.entries_pm, f.exits_pm})
        if (v < 0.0) throw ValidationError(ctx + "negative passenger count");
      by_id[id] = f;
    }

    std::vector<std::string> missing;
    for (const Station& s : ds.graph.stations())
      if (!by_id.count(s.id)) missing.push_back(s.id);
    if (!missing.empty()) {
      std::string list;
      for (const auto& id : missing) list += (list.empty() ? "" : ", ") + id;
      throw ValidationError(*paths.flows + ": missing flow rows for stations: " + list);
    }

    FlowTable table;
    table.rows.reserve(ds.graph.size());
    for (const Station& s : ds.graph.stations()) table.rows.push_back(by_id[s.id]);
    ds.flows = std::move(table);
  }

  return ds;
}

}  // namespace metro
