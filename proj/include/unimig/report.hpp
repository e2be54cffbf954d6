#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "unimig/operators.hpp"

namespace unimig {

enum class OutputFormat { JsonLines, Csv, Human };

OutputFormat parse_format(std::string_view name);

/// Records keep insertion order so json-lines output is byte-stable run to
/// run (the summary's elapsed_ms field is the one documented exception).
using Record = nlohmann::ordered_json;

struct Report {
  Record header;
  std::vector<Record> records;
  Record summary;
  bool failed = false;
};

/// json-lines: one compact object per line, header first, summary last.
/// csv: columns named by header["csv_columns"], or a bare matrix when
/// header["csv_matrix"] is set. human: aligned text.
std::string emit_report(const Report& report, OutputFormat format);

std::string frac_text(int index, int n);
std::string triple_text(const NeutralTriple& t, int n);
std::vector<std::string> table_rows_text(const OperatorTable& t);

/// Shortest round-trip decimal ("0.7", "1"); keeps CSV plot-ready and
/// byte-stable.
std::string decimal_text(double v);

}  // namespace unimig
