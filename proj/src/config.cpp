#include "unimig/config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace unimig {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void reject(int line, const std::string& what) {
  throw ValidationError("line " + std::to_string(line) + ": " + what);
}

std::array<Fraction, 3> parse_triple_text(std::string_view text, int line) {
  std::istringstream in{std::string(text)};
  std::string a, b, c, extra;
  if (!(in >> a >> b >> c) || (in >> extra))
    fail(line, "triple needs exactly three values 'e a f'");
  return {parse_fraction(a), parse_fraction(b), parse_fraction(c)};
}

const std::map<std::string, std::vector<std::string>> kFamilyParams = {
    {"min", {}},
    {"max", {}},
    {"product", {}},
    {"lukasiewicz", {}},
    {"drastic", {}},
    {"dual", {"inner"}},
    {"uninorm-min", {"e", "t", "s"}},
    {"uninorm-max", {"e", "t", "s"}},
    {"nullnorm", {"a", "s", "t"}},
    {"example-2uninorm", {"e", "a", "f"}},
    {"glued-2uninorm", {"a", "low", "high"}},
    {"table", {}},
};

}  // namespace

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  RawOperator* current = nullptr;
  int lineno = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(lineno, "unterminated section header");
      std::istringstream in{std::string(line.substr(1, line.size() - 2))};
      std::string kind, name, extra;
      if (!(in >> kind >> name) || (in >> extra) || kind != "operator")
        fail(lineno, "expected '[operator NAME]'");
      for (const RawOperator& op : cfg.operators)
        if (op.name == name) reject(lineno, "duplicate operator name '" + name + "'");
      cfg.operators.push_back({name, lineno, "", {}, {}, std::nullopt});
      current = &cfg.operators.back();
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(lineno, "expected 'key = value'");
    const std::string key{trim(line.substr(0, eq))};
    const std::string value{trim(line.substr(eq + 1))};
    if (key.empty() || value.empty()) fail(lineno, "expected 'key = value'");

    try {
      if (current) {
        if (key == "family") {
          if (!kFamilyParams.count(value)) reject(lineno, "unknown family '" + value + "'");
          current->family = value;
        } else if (key == "row") {
          current->rows.push_back(value);
        } else if (key == "triple") {
          current->triple = parse_triple_text(value, lineno);
        } else if (key == "e" || key == "a" || key == "f" || key == "t" || key == "s" ||
                   key == "low" || key == "high" || key == "inner") {
          if (current->params.count(key)) reject(lineno, "duplicate key '" + key + "'");
          current->params[key] = value;
        } else {
          fail(lineno, "unknown operator key '" + key + "'");
        }
        continue;
      }

      if (key == "grid") {
        int n = 0;
        const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (ec != std::errc() || p != value.data() + value.size() || n < 1)
          reject(lineno, "grid must be a positive integer");
        cfg.grid_n = n;
      } else if (key == "mode") {
        if (value == "exact") cfg.mode = CompareMode::Exact;
        else if (value == "float") cfg.mode = CompareMode::Float;
        else reject(lineno, "mode must be exact or float");
      } else if (key == "eps") {
        cfg.eps = std::stod(value);
        if (cfg.eps < 0) reject(lineno, "eps must be non-negative");
      } else if (key == "u1") {
        cfg.u1 = value;
      } else if (key == "u2") {
        cfg.u2 = value;
      } else if (key == "subject") {
        cfg.subject = value;
      } else if (key == "alpha") {
        cfg.alpha = parse_fraction(value);
      } else if (key == "triple") {
        if (value == "all") cfg.triple_all = true;
        else cfg.triple = parse_triple_text(value, lineno);
      } else if (key == "cap") {
        cfg.cap = std::stoull(value);
      } else if (key == "emit_tables") {
        if (value == "true") cfg.emit_tables = true;
        else if (value == "false") cfg.emit_tables = false;
        else reject(lineno, "emit_tables must be true or false");
      } else {
        fail(lineno, "unknown key '" + key + "'");
      }
    } catch (const ParseError& e) {
      if (std::string_view(e.what()).substr(0, 5) == "line ") throw;
      fail(lineno, e.what());
    } catch (const std::invalid_argument&) {
      fail(lineno, "malformed number '" + value + "'");
    } catch (const std::out_of_range&) {
      fail(lineno, "number out of range '" + value + "'");
    }
  }

  for (const RawOperator& op : cfg.operators)
    if (op.family.empty()) reject(op.line, "operator '" + op.name + "' has no family");
  return cfg;
}

namespace {

const std::string& param(const RawOperator& op, const std::string& key) {
  const auto it = op.params.find(key);
  if (it == op.params.end())
    throw ValidationError("line " + std::to_string(op.line) + ": family '" + op.family +
                          "' requires key '" + key + "'");
  return it->second;
}

SpecPtr ref(const RawOperator& op, const std::string& key,
            const std::map<std::string, ResolvedOperator>& done) {
  const std::string& name = param(op, key);
  const auto it = done.find(name);
  if (it == done.end())
    throw ValidationError("line " + std::to_string(op.line) + ": reference '" + name +
                          "' is not defined above");
  return it->second.spec;
}

Fraction frac_param(const RawOperator& op, const std::string& key) {
  try {
    return parse_fraction(param(op, key));
  } catch (const ParseError& e) {
    throw ValidationError("line " + std::to_string(op.line) + ": " + e.what());
  }
}

OperatorTable parse_table_rows(const RawOperator& op, const UnitGrid& grid,
                               const ToleranceConfig& tol) {
  const int n1 = grid.size();
  if (static_cast<int>(op.rows.size()) != n1)
    throw ValidationError("line " + std::to_string(op.line) + ": table needs " +
                          std::to_string(n1) + " rows, got " + std::to_string(op.rows.size()));
  std::vector<std::uint8_t> cells;
  cells.reserve(static_cast<std::size_t>(n1) * n1);
  for (const std::string& row : op.rows) {
    std::istringstream in{row};
    std::string tok;
    int got = 0;
    while (in >> tok) {
      if (++got > n1) break;
      cells.push_back(static_cast<std::uint8_t>(snap(parse_fraction(tok), grid, tol).index));
    }
    if (got != n1)
      throw ValidationError("line " + std::to_string(op.line) + ": table rows need " +
                            std::to_string(n1) + " entries");
  }
  return {grid, std::move(cells)};
}

}  // namespace

std::map<std::string, ResolvedOperator> resolve_operators(const RunConfig& cfg,
                                                          const UnitGrid& grid,
                                                          const ToleranceConfig& tol) {
  std::map<std::string, ResolvedOperator> done;
  for (const RawOperator& op : cfg.operators) {
    SpecPtr spec;
    try {
      if (op.family == "min") spec = make_spec(MinOp{});
      else if (op.family == "max") spec = make_spec(MaxOp{});
      else if (op.family == "product") spec = make_spec(ProductOp{});
      else if (op.family == "lukasiewicz") spec = make_spec(LukasiewiczOp{});
      else if (op.family == "drastic") spec = make_spec(DrasticOp{});
      else if (op.family == "dual") spec = make_spec(DualConorm{ref(op, "inner", done)});
      else if (op.family == "uninorm-min")
        spec = make_spec(UninormMinClass{frac_param(op, "e"), ref(op, "t", done), ref(op, "s", done)});
      else if (op.family == "uninorm-max")
        spec = make_spec(UninormMaxClass{frac_param(op, "e"), ref(op, "t", done), ref(op, "s", done)});
      else if (op.family == "nullnorm")
        spec = make_spec(NullnormSpec{frac_param(op, "a"), ref(op, "s", done), ref(op, "t", done)});
      else if (op.family == "example-2uninorm")
        spec = make_spec(Example2Uninorm{frac_param(op, "e"), frac_param(op, "a"), frac_param(op, "f")});
      else if (op.family == "glued-2uninorm")
        spec = make_spec(GluedTwoUninorm{frac_param(op, "a"), ref(op, "low", done), ref(op, "high", done)});
      else if (op.family == "table")
        spec = make_spec(TableSpec{parse_table_rows(op, grid, tol)});
      else
        throw ValidationError("unknown family '" + op.family + "'");

      // Exact mode refuses off-grid parameters outright rather than snapping;
      // probing one evaluation surfaces misalignment with the stanza's line.
      if (tol.is_exact()) evaluate(*spec, grid, grid.zero(), grid.zero());
    } catch (const NotOnGridError& e) {
      throw ValidationError("line " + std::to_string(op.line) + ": operator '" + op.name +
                            "': " + e.what());
    }
    done.emplace(op.name, ResolvedOperator{spec, op.triple});
  }
  return done;
}

}  // namespace unimig
