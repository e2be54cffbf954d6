#include "unimig/run.hpp"

#include <chrono>

#include "unimig/kernels.hpp"

namespace unimig {

Command parse_command(std::string_view name) {
  if (name == "verify") return Command::Verify;
  if (name == "migrative") return Command::Migrative;
  if (name == "sweep") return Command::Sweep;
  if (name == "enumerate") return Command::Enumerate;
  if (name == "audit") return Command::Audit;
  if (name == "heatmap") return Command::Heatmap;
  throw ValidationError("unknown command '" + std::string(name) + "'");
}

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Migrative: return "migrative";
    case Command::Sweep: return "sweep";
    case Command::Enumerate: return "enumerate";
    case Command::Audit: return "audit";
    case Command::Heatmap: return "heatmap";
  }
  return "?";
}

struct Ctx {
  const RunOptions& opt;
  UnitGrid grid;
  ToleranceConfig tol;
  std::map<std::string, ResolvedOperator> ops;

  explicit Ctx(const RunOptions& o)
      : opt(o),
        grid(make_grid(o.grid_override.value_or(o.cfg.grid_n))),
        tol(resolve_mode(o) == CompareMode::Exact ? ToleranceConfig::exact()
                                                  : ToleranceConfig::floating(o.cfg.eps)) {
    ops = resolve_operators(o.cfg, grid, tol);
  }

  static CompareMode resolve_mode(const RunOptions& o) {
    return o.mode_override.value_or(o.cfg.mode);
  }

  const ResolvedOperator& lookup(const std::string& name) const {
    const auto it = ops.find(name);
    if (it == ops.end()) throw ValidationError("operator '" + name + "' is not defined");
    return it->second;
  }

  const std::string& required(const std::optional<std::string>& key, const char* what) const {
    if (!key) throw ValidationError(std::string("this command needs '") + what + "' in the config");
    return *key;
  }

  NeutralTriple snap_triple(const std::array<Fraction, 3>& t) const {
    return make_triple(snap(t[0], grid, tol), snap(t[1], grid, tol), snap(t[2], grid, tol));
  }

  Verified2Uninorm verified(const std::string& name) const {
    const ResolvedOperator& ro = lookup(name);
    OperatorTable table = discretize(*ro.spec, grid, tol);
    std::optional<NeutralTriple> triple;
    if (ro.triple) triple = snap_triple(*ro.triple);
    if (!triple) triple = canonical_triple(*ro.spec, grid);
    if (!triple) {
      const auto found = find_2neutral(table);
      if (found.size() == 1) triple = found.front();
      else if (found.empty())
        throw ValidationError("operator '" + name + "' has no 2-neutral element");
      else
        throw ValidationError("operator '" + name + "' has " + std::to_string(found.size()) +
                              " 2-neutral triples; fix one with 'triple = e a f'");
    }
    try {
      return Verified2Uninorm::verify(std::move(table), *triple);
    } catch (const PreconditionError& e) {
      throw ValidationError("operator '" + name + "': " + e.what());
    }
  }

  Record header(Command cmd) const {
    Record h;
    h["record"] = "header";
    h["format_version"] = 1;
    h["tool"] = "unimig";
    h["command"] = command_name(cmd);
    h["grid"] = grid.n();
    h["mode"] = tol.is_exact() ? "exact" : "float";
    h["kernel"] = kernels::active_kernels().name;
    return h;
  }
};

std::string witness_text(const EqWitness& w, int n) {
  return "x=" + frac_text(w.x.index, n) + " y=" + frac_text(w.y.index, n) +
         " lhs=" + frac_text(w.lhs.index, n) + " rhs=" + frac_text(w.rhs.index, n);
}

std::string failure_text(const CondFailure& f, int n) {
  return "'" + f.condition + "' fails at x=" + frac_text(f.x.index, n) + ": " +
         frac_text(f.lhs.index, n) + " != " + frac_text(f.rhs.index, n);
}

Record verdict_record(const MigrativityVerdict& v, int n) {
  Record r;
  r["record"] = "migrative";
  r["route"] = std::string(to_string(v.route));
  r["migrative"] = v.migrative;
  r["case"] = v.theorem_case ? std::string(to_string(*v.theorem_case)) : v.subclass_item;
  std::string detail;
  if (v.witness) detail = witness_text(*v.witness, n);
  if (v.condition_failure) detail = failure_text(*v.condition_failure, n);
  r["detail"] = detail;
  if (!v.case_conditions.empty()) r["case_conditions"] = v.case_conditions;
  return r;
}

Report run_verify(const Ctx& ctx) {
  Report rep;
  rep.header = ctx.header(Command::Verify);
  const std::string& name = ctx.required(ctx.opt.cfg.subject, "subject");
  rep.header["subject"] = name;
  rep.header["csv_columns"] = {"check", "ok", "detail"};

  const ResolvedOperator& ro = ctx.lookup(name);
  const OperatorTable table = discretize(*ro.spec, ctx.grid, ctx.tol);
  const AxiomReport ax = run_axiom_suite(table);
  const int n = ctx.grid.n();

  auto axiom_record = [&](const char* check, bool ok, const std::string& detail) {
    Record r;
    r["record"] = "axiom";
    r["check"] = check;
    r["ok"] = ok;
    r["detail"] = detail;
    rep.records.push_back(r);
  };
  axiom_record("commutative", ax.commutative.ok,
               ax.commutative.ok ? ""
                                 : "x=" + frac_text(ax.commutative.witness->x.index, n) +
                                       " y=" + frac_text(ax.commutative.witness->y.index, n));
  axiom_record("associative", ax.associative.ok,
               ax.associative.ok ? ""
                                 : "x=" + frac_text(ax.associative.witness->x.index, n) +
                                       " y=" + frac_text(ax.associative.witness->y.index, n) +
                                       " z=" + frac_text(ax.associative.witness->z.index, n));
  axiom_record("monotone", ax.monotone.ok,
               ax.monotone.ok
                   ? ""
                   : std::string(ax.monotone.witness->axis == MonotoneAxis::Row ? "row "
                                                                                : "column ") +
                         frac_text(ax.monotone.witness->fixed.index, n) + " between " +
                         frac_text(ax.monotone.witness->at.index, n) + " and " +
                         frac_text(ax.monotone.witness->next.index, n));

  Record tr;
  tr["record"] = "neutral";
  tr["check"] = "2-neutral-triples";
  tr["ok"] = !ax.triples.empty();
  tr["detail"] = std::to_string(ax.triples.size()) + " found";
  std::vector<std::string> triple_texts;
  for (const NeutralTriple& t : ax.triples) triple_texts.push_back(triple_text(t, n));
  tr["triples"] = triple_texts;
  rep.records.push_back(tr);

  std::optional<NeutralTriple> chosen;
  if (ro.triple) chosen = ctx.snap_triple(*ro.triple);
  if (!chosen) chosen = canonical_triple(*ro.spec, ctx.grid);
  if (!chosen && !ax.triples.empty()) chosen = ax.triples.front();

  bool triple_ok = true;
  if (chosen) {
    triple_ok = std::find(ax.triples.begin(), ax.triples.end(), *chosen) != ax.triples.end();
    Record r;
    r["record"] = "neutral";
    r["check"] = "triple";
    r["ok"] = triple_ok;
    r["detail"] = triple_text(*chosen, n) +
                  " (" + std::string(to_string(classify(*chosen, ctx.grid))) + ")";
    rep.records.push_back(r);
  }

  bool structural_ok = true;
  if (ax.all_axioms_ok() && chosen && triple_ok) {
    const StructuralReport sr = check_structural_props(table, *chosen);
    for (int i = 0; i < 7; ++i) {
      Record r;
      r["record"] = "structural";
      r["check"] = "structural-" + std::to_string(i + 1);
      r["ok"] = sr.items[i].ok;
      r["detail"] = sr.items[i].ok ? ""
                                   : "x=" + frac_text(sr.items[i].witness->x.index, n) +
                                         " y=" + frac_text(sr.items[i].witness->y.index, n);
      rep.records.push_back(r);
    }
    structural_ok = sr.all_ok();
  }

  rep.failed = !ax.all_axioms_ok() || ax.triples.empty() || !triple_ok || !structural_ok;
  return rep;
}

Report run_migrative(const Ctx& ctx) {
  Report rep;
  rep.header = ctx.header(Command::Migrative);
  rep.header["csv_columns"] = {"route", "migrative", "case", "detail"};
  const Verified2Uninorm u1 = ctx.verified(ctx.required(ctx.opt.cfg.u1, "u1"));
  const Verified2Uninorm u2 = ctx.verified(ctx.required(ctx.opt.cfg.u2, "u2"));
  if (!ctx.opt.cfg.alpha) throw ValidationError("this command needs 'alpha' in the config");
  const GridPoint alpha = snap(*ctx.opt.cfg.alpha, ctx.grid, ctx.tol);
  rep.header["u1"] = *ctx.opt.cfg.u1;
  rep.header["u2"] = *ctx.opt.cfg.u2;
  rep.header["alpha"] = frac_text(alpha.index, ctx.grid.n());

  const MigrativePair pair = make_pair(u1, u2, alpha);
  const int n = ctx.grid.n();

  const MigrativityVerdict brute = brute_force_migrative(pair);
  const MigrativityVerdict t31 = characterize_by_lambda(pair);
  const MigrativityVerdict t32 = characterize_by_mu(pair);
  rep.records.push_back(verdict_record(brute, n));
  rep.records.push_back(verdict_record(t31, n));
  rep.records.push_back(verdict_record(t32, n));

  bool agree = brute.migrative == t31.migrative && brute.migrative == t32.migrative;
  const auto items =
      subclass_items(classify(pair.t1, ctx.grid), classify(pair.t2, ctx.grid));
  for (int item : items) {
    const MigrativityVerdict cv = subclass_item_verdict(pair, item);
    rep.records.push_back(verdict_record(cv, n));
    agree = agree && cv.migrative == t31.migrative;
  }

  Record ag;
  ag["record"] = "agreement";
  ag["route"] = "all-routes";
  ag["migrative"] = brute.migrative;
  ag["case"] = "";
  ag["detail"] = agree ? "routes agree" : "ROUTES DISAGREE";
  rep.records.push_back(ag);

  rep.failed = !agree;
  return rep;
}

Report run_sweep(const Ctx& ctx) {
  Report rep;
  rep.header = ctx.header(Command::Sweep);
  rep.header["csv_columns"] = {"alpha", "verdict", "route", "case"};
  rep.header["note"] = "alphas are the closed grid values i/n";
  const Verified2Uninorm u1 = ctx.verified(ctx.required(ctx.opt.cfg.u1, "u1"));
  const Verified2Uninorm u2 = ctx.verified(ctx.required(ctx.opt.cfg.u2, "u2"));
  rep.header["u1"] = *ctx.opt.cfg.u1;
  rep.header["u2"] = *ctx.opt.cfg.u2;

  const int n = ctx.grid.n();
  std::vector<std::string> migrative_set;
  int disagreements = 0;
  for (int a = 0; a <= n; ++a) {
    const MigrativePair pair = make_pair(u1, u2, {a});
    const MigrativityVerdict brute = brute_force_migrative(pair);
    const MigrativityVerdict t31 = characterize_by_lambda(pair);
    const MigrativityVerdict t32 = characterize_by_mu(pair);
    const bool agree = brute.migrative == t31.migrative && brute.migrative == t32.migrative;
    if (!agree) ++disagreements;
    if (brute.migrative) migrative_set.push_back(frac_text(a, n));

    Record r;
    r["record"] = "sweep";
    r["alpha"] = decimal_text(ctx.grid.value_real({a}));
    r["alpha_exact"] = frac_text(a, n);
    r["verdict"] = brute.migrative ? 1 : 0;
    r["route"] = std::string(to_string(t31.route));
    r["case"] = t31.theorem_case ? std::string(to_string(*t31.theorem_case)) : "";
    r["agree"] = agree;
    rep.records.push_back(r);
  }
  rep.summary["migrative_set"] = migrative_set;
  rep.summary["disagreements"] = disagreements;
  rep.failed = disagreements > 0;
  return rep;
}

Report run_enumerate(const Ctx& ctx) {
  Report rep;
  rep.header = ctx.header(Command::Enumerate);
  rep.header["csv_columns"] = {"triple", "tables", "nodes", "pruned_monotone", "pruned_assoc",
                               "completed"};
  if (!ctx.tol.is_exact()) throw ValidationError("enumeration runs in exact mode only");

  std::vector<NeutralTriple> triples;
  if (ctx.opt.cfg.triple) triples.push_back(ctx.snap_triple(*ctx.opt.cfg.triple));
  else triples = all_triples(ctx.grid);

  const auto deadline = ctx.opt.budget
                            ? std::optional(std::chrono::steady_clock::now() + *ctx.opt.budget)
                            : std::nullopt;
  EnumStats totals;
  const int n = ctx.grid.n();
  for (const NeutralTriple& triple : triples) {
    EnumJob job{ctx.grid, triple, {ctx.opt.cfg.cap, std::nullopt}};
    if (deadline) {
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          *deadline - std::chrono::steady_clock::now());
      if (left <= std::chrono::milliseconds(0)) {
        totals.completed = false;
        break;
      }
      job.limits.budget = left;
    }
    EnumStats st;
    if (ctx.opt.cfg.emit_tables) {
      st = enumerate_2uninorms(job, [&](const OperatorTable& t) {
        Record r;
        r["record"] = "table";
        r["triple"] = triple_text(triple, n);
        r["rows"] = table_rows_text(t);
        rep.records.push_back(r);
        return true;
      });
    } else {
      st = enumerate_2uninorms(job, [](const OperatorTable&) { return true; });
    }
    totals.add(st);

    Record r;
    r["record"] = "enumerate";
    r["triple"] = triple_text(triple, n);
    r["tables"] = st.tables_emitted;
    r["nodes"] = st.nodes_explored;
    r["pruned_monotone"] = st.pruned_monotone;
    r["pruned_assoc"] = st.pruned_assoc;
    r["completed"] = st.completed;
    rep.records.push_back(r);
  }
  rep.summary["tables"] = totals.tables_emitted;
  rep.summary["nodes"] = totals.nodes_explored;
  rep.summary["final_rejects"] = totals.final_rejects;
  rep.summary["completed"] = totals.completed;
  rep.failed = totals.final_rejects > 0;
  return rep;
}

Report run_audit(const Ctx& ctx) {
  Report rep;
  rep.header = ctx.header(Command::Audit);
  rep.header["csv_columns"] = {"section", "checked", "violations"};
  if (!ctx.tol.is_exact()) throw ValidationError("the audit runs in exact mode only");

  // One budget for both phases: whatever the census build leaves over goes
  // to the pair audit.
  const auto phase_start = std::chrono::steady_clock::now();
  const Census census = build_census(ctx.grid, {ctx.opt.cfg.cap, ctx.opt.budget});
  AuditOptions options;
  options.jobs = ctx.opt.jobs;
  if (ctx.opt.budget) {
    const auto used = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - phase_start);
    options.budget = std::max(*ctx.opt.budget - used, std::chrono::milliseconds(1));
  }
  const CensusAuditReport r = census_audit(census, options);

  Record census_rec;
  census_rec["record"] = "census";
  census_rec["entries"] = r.census_entries;
  census_rec["distinct_tables"] = r.distinct_tables;
  census_rec["nodes"] = r.enum_stats.nodes_explored;
  census_rec["complete"] = r.census_complete;
  rep.records.push_back(census_rec);

  auto section = [&](const char* name, std::uint64_t checked, std::uint64_t violations) {
    Record s;
    s["record"] = "audit";
    s["section"] = name;
    s["checked"] = checked;
    s["violations"] = violations;
    rep.records.push_back(s);
  };
  const AuditReport& a = r.audit;
  section("oracle", a.pairs_checked, a.oracle_disagreements);
  section("boundary", a.boundary_checked, a.boundary_disagreements);
  section("pivot-bounds", a.pivot_bounds_checked, a.pivot_bounds_violations);
  section("anchor-image", a.anchor_image_applicable, a.anchor_image_violations);
  section("one-sided-iff", a.onesided_iff_applicable, a.onesided_iff_disagreements);
  section("piecewise-iff", a.piecewise_iff_applicable, a.piecewise_iff_disagreements);
  section("identity", a.identity_checked, a.identity_violations);
  section("subclass", a.subclass_applicable, a.subclass_disagreements);
  section("structural", r.structural_tables, r.structural_failures);

  for (const DecodedDisagreement& d : r.disagreements)
    rep.records.push_back(disagreement_record(d, ctx.grid.n()));

  rep.summary["pairs"] = a.pairs;
  rep.summary["pairs_checked"] = a.pairs_checked;
  rep.summary["migrative"] = a.migrative;
  rep.summary["violations"] = a.total_violations() + r.structural_failures;
  rep.summary["completed"] = a.completed && r.census_complete;
  rep.failed = !r.clean();
  return rep;
}

Report run_heatmap(const Ctx& ctx) {
  Report rep;
  rep.header = ctx.header(Command::Heatmap);
  rep.header["csv_matrix"] = true;
  const std::string& name = ctx.required(ctx.opt.cfg.subject, "subject");
  rep.header["subject"] = name;
  const OperatorSpec& spec = *ctx.lookup(name).spec;
  const int n1 = ctx.grid.size();

  // Exact mode dumps the discretized table; float mode plots the raw closed
  // form, which is the one place off-grid values are welcome.
  std::optional<OperatorTable> table;
  if (ctx.tol.is_exact()) table = discretize(spec, ctx.grid, ctx.tol);
  for (int i = 0; i < n1; ++i) {
    Record r;
    r["record"] = "heatmap-row";
    r["x"] = frac_text(i, ctx.grid.n());
    std::vector<std::string> values;
    for (int j = 0; j < n1; ++j) {
      const double v = table ? ctx.grid.value_real({table->at_index(i, j)})
                             : evaluate_real(spec, ctx.grid.value_real({i}),
                                             ctx.grid.value_real({j}));
      values.push_back(decimal_text(v));
    }
    r["values"] = values;
    rep.records.push_back(r);
  }
  rep.summary["cells"] = static_cast<std::uint64_t>(n1) * n1;
  return rep;
}

}  // namespace

Record disagreement_record(const DecodedDisagreement& d, int grid_n) {
  Record r;
  r["record"] = "disagreement";
  r["kind"] = d.kind;
  r["pair_index"] = d.pair_index;
  r["u1_index"] = d.u1_index;
  r["u2_index"] = d.u2_index;
  r["t1"] = triple_text(d.t1, grid_n);
  r["t2"] = triple_text(d.t2, grid_n);
  r["alpha"] = frac_text(d.alpha.index, grid_n);
  r["brute"] = d.brute;
  r["by_lambda"] = d.by_lambda;
  r["by_mu"] = d.by_mu;
  r["u1_rows"] = table_rows_text(d.u1_table);
  r["u2_rows"] = table_rows_text(d.u2_table);
  return r;
}

Report run_command(const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Ctx ctx(options);
  Report rep;
  switch (options.command) {
    case Command::Verify: rep = run_verify(ctx); break;
    case Command::Migrative: rep = run_migrative(ctx); break;
    case Command::Sweep: rep = run_sweep(ctx); break;
    case Command::Enumerate: rep = run_enumerate(ctx); break;
    case Command::Audit: rep = run_audit(ctx); break;
    case Command::Heatmap: rep = run_heatmap(ctx); break;
  }
  Record summary;
  summary["record"] = "summary";
  summary["status"] = rep.failed ? "failed" : "ok";
  for (const auto& [k, v] : rep.summary.items()) summary[k] = v;
  summary["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  rep.summary = summary;
  return rep;
}

}  // namespace unimig
