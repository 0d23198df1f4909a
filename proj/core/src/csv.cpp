#include "coriolis/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace coriolis {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_field(const std::string& field, int line, const char* name) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw CsvError("line " + std::to_string(line) + ": field '" + name +
                   "' is not a number: '" + field + "'");
  }
}

std::vector<std::string> split_row(const std::string& row) {
  std::vector<std::string> fields;
  std::stringstream ss(row);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!row.empty() && row.back() == ',') fields.push_back("");
  return fields;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw CsvError("cannot open for writing: " + path);
  out << content;
}

}  // namespace

std::string shot_table_to_csv(std::span<const ScanPoint> points) {
  std::string out = kShotCsvHeader;
  out += "\n";
  for (const auto& point : points) {
    for (std::size_t i = 0; i < point.shots.size(); ++i) {
      const ShotRecord& s = point.shots[i];
      out += fmt(point.parameter_value) + "," + std::to_string(i) + "," +
             fmt(s.pop_a) + "," + fmt(s.pop_b) + "," + fmt(s.pop_c) + "," +
             fmt(s.pop_d) + "," + fmt(s.x()) + "," + fmt(s.y()) + "\n";
    }
  }
  return out;
}

void write_shot_csv(const std::string& path,
                    std::span<const ScanPoint> points) {
  write_file(path, shot_table_to_csv(points));
}

std::vector<ScanPoint> parse_shot_csv(const std::string& text) {
  std::stringstream stream(text);
  std::string row;
  int line = 0;

  if (!std::getline(stream, row)) {
    throw CsvError("line 1: empty file, expected header");
  }
  ++line;
  if (!row.empty() && row.back() == '\r') row.pop_back();
  if (row != kShotCsvHeader) {
    throw CsvError("line 1: bad header, expected '" +
                   std::string(kShotCsvHeader) + "'");
  }

  std::vector<ScanPoint> points;
  while (std::getline(stream, row)) {
    ++line;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (row.empty()) continue;
    const auto fields = split_row(row);
    if (fields.size() != 8) {
      throw CsvError("line " + std::to_string(line) + ": expected 8 fields, got " +
                     std::to_string(fields.size()));
    }
    const double value = parse_field(fields[0], line, "parameter_value");
    ShotRecord s;
    s.pop_a = parse_field(fields[2], line, "pop_a");
    s.pop_b = parse_field(fields[3], line, "pop_b");
    s.pop_c = parse_field(fields[4], line, "pop_c");
    s.pop_d = parse_field(fields[5], line, "pop_d");
    for (double p : {s.pop_a, s.pop_b, s.pop_c, s.pop_d}) {
      if (p < 0.0 || p > 1.0) {
        throw CsvError("line " + std::to_string(line) +
                       ": population outside [0, 1]");
      }
    }
    // x and y columns are derived; they are validated, not stored.
    const double x = parse_field(fields[6], line, "x");
    const double y = parse_field(fields[7], line, "y");
    if (std::abs(x) > 1.0 + 1e-12 || std::abs(y) > 1.0 + 1e-12) {
      throw CsvError("line " + std::to_string(line) +
                     ": normalized difference outside [-1, 1]");
    }

    if (points.empty() || points.back().parameter_value != value) {
      points.push_back(ScanPoint{value, {}});
    }
    points.back().shots.push_back(s);
  }
  return points;
}

std::vector<ScanPoint> read_shot_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_shot_csv(buffer.str());
}

std::string binned_to_csv(std::span<const BinnedContrast> binned) {
  std::string out = kBinnedCsvHeader;
  out += "\n";
  for (const auto& b : binned) {
    out += fmt(b.parameter_value) + "," + fmt(b.mean_contrast) + "," +
           fmt(b.standard_error) + "," + std::to_string(b.bin_count) + "\n";
  }
  return out;
}

void write_binned_csv(const std::string& path,
                      std::span<const BinnedContrast> binned) {
  write_file(path, binned_to_csv(binned));
}

}  // namespace coriolis
