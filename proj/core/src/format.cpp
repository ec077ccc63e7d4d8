#include "gaussquad/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace gaussquad {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

std::string format_int(std::int64_t v) { return std::to_string(v); }

namespace {

void write_csv(std::ostream& os, const TextTable& t) {
  for (const auto& note : t.notes) os << "# " << note << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
}

void write_markdown(std::ostream& os, const TextTable& t) {
  for (const auto& note : t.notes) os << note << '\n';
  if (!t.notes.empty()) os << '\n';
  std::vector<std::size_t> width(t.columns.size(), 3);
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = std::max(width[i], t.columns[i].size());
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    os << '|';
    for (std::size_t i = 0; i < width.size(); ++i) {
      const std::string& c = i < cells.size() ? cells[i] : std::string();
      os << ' ' << c << std::string(width[i] - c.size(), ' ') << " |";
    }
    os << '\n';
  };
  line(t.columns);
  os << '|';
  for (std::size_t w : width) os << std::string(w + 2, '-') << '|';
  os << '\n';
  for (const auto& row : t.rows) line(row);
}

}  // namespace

void write_table(std::ostream& os, const TextTable& table, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    write_csv(os, table);
  } else {
    write_markdown(os, table);
  }
}

}  // namespace gaussquad
