#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gaussquad {

enum class OutputFormat { Csv, Markdown };

/// Rows of preformatted cells plus free-text notes printed before the header
/// ("# " lines in CSV, a paragraph in Markdown).
struct TextTable {
  std::vector<std::string> notes;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// 17 significant digits in scientific notation; "inf", "-inf", "nan".
std::string format_real(double x);
std::string format_int(std::int64_t v);

/// LF line endings in both formats. Markdown columns are padded to align.
void write_table(std::ostream& os, const TextTable& table, OutputFormat format);

}  // namespace gaussquad
