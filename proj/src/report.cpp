#include "unimig/report.hpp"

#include <charconv>
#include <sstream>

#include "unimig/errors.hpp"

namespace unimig {

OutputFormat parse_format(std::string_view name) {
  if (name == "json-lines") return OutputFormat::JsonLines;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "human") return OutputFormat::Human;
  throw ValidationError("unknown format '" + std::string(name) + "'");
}

std::string frac_text(int index, int n) {
  return std::to_string(index) + "/" + std::to_string(n);
}

std::string triple_text(const NeutralTriple& t, int n) {
  return frac_text(t.e.index, n) + " " + frac_text(t.a.index, n) + " " + frac_text(t.f.index, n);
}

std::string decimal_text(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw Error("decimal formatting failed");
  return {buf, end};
}

std::vector<std::string> table_rows_text(const OperatorTable& t) {
  std::vector<std::string> rows;
  rows.reserve(t.n1());
  for (int i = 0; i < t.n1(); ++i) {
    std::string row;
    for (int j = 0; j < t.n1(); ++j) {
      if (j) row += ' ';
      row += frac_text(t.at_index(i, j), t.n());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string csv_cell(const Record& r, const std::string& key) {
  if (!r.contains(key)) return "";
  const auto& v = r.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  return v.dump();
}

std::string emit_json_lines(const Report& rep) {
  std::string out = rep.header.dump() + "\n";
  for (const Record& r : rep.records) out += r.dump() + "\n";
  out += rep.summary.dump() + "\n";
  return out;
}

std::string emit_csv(const Report& rep) {
  std::string out;
  if (rep.header.value("csv_matrix", false)) {
    for (const Record& r : rep.records) {
      const auto& values = r.at("values");
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += values[i].is_string() ? values[i].get<std::string>() : values[i].dump();
      }
      out += '\n';
    }
    return out;
  }
  if (!rep.header.contains("csv_columns"))
    throw ValidationError("this command has no csv layout; use json-lines or human");
  const auto& cols = rep.header.at("csv_columns");
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ',';
    out += cols[i].get<std::string>();
  }
  out += '\n';
  for (const Record& r : rep.records) {
    bool renders = false;
    for (const auto& c : cols)
      if (r.contains(c.get<std::string>())) renders = true;
    if (!renders) continue;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(r, cols[i].get<std::string>());
    }
    out += '\n';
  }
  return out;
}

void render_value(std::ostringstream& os, const Record& v) {
  if (v.is_string()) os << v.get<std::string>();
  else os << v.dump();
}

std::string emit_human(const Report& rep) {
  std::ostringstream os;
  os << "unimig";
  for (const auto& [k, v] : rep.header.items()) {
    if (k == "record" || k == "format_version" || k == "csv_columns" || k == "csv_matrix" ||
        k == "tool")
      continue;
    os << "  " << k << "=";
    render_value(os, v);
  }
  os << "\n";
  for (const Record& r : rep.records) {
    os << "  ";
    bool first = true;
    for (const auto& [k, v] : r.items()) {
      if (!first) os << "  ";
      first = false;
      if (k == "record") {
        os << "[";
        render_value(os, v);
        os << "]";
      } else {
        os << k << "=";
        render_value(os, v);
      }
    }
    os << "\n";
  }
  os << "summary:";
  for (const auto& [k, v] : rep.summary.items()) {
    if (k == "record") continue;
    os << "  " << k << "=";
    render_value(os, v);
  }
  os << "\n";
  return os.str();
}

}  // namespace

std::string emit_report(const Report& rep, OutputFormat format) {
  switch (format) {
    case OutputFormat::JsonLines: return emit_json_lines(rep);
    case OutputFormat::Csv: return emit_csv(rep);
    case OutputFormat::Human: return emit_human(rep);
  }
  throw Error("unreachable");
}

}  // namespace unimig
