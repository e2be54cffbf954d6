#include "unimig/migrativity.hpp"

#include <algorithm>
#include <cassert>
#include <thread>

#include "unimig/kernels.hpp"

namespace unimig {

Verified2Uninorm Verified2Uninorm::verify(OperatorTable table, NeutralTriple triple) {
  if (!is_2uninorm(table, triple))
    throw PreconditionError("table is not a 2-uninorm with the given triple");
  return {std::move(table), triple};
}

MigrativePair make_pair(const Verified2Uninorm& u1, const Verified2Uninorm& u2,
                        GridPoint alpha) {
  if (!(u1.table.grid() == u2.table.grid()))
    throw PreconditionError("operators of a pair must share one grid");
  if (!u1.table.grid().contains(alpha)) throw PreconditionError("alpha off the grid");
  return {&u1.table, u1.triple, &u2.table, u2.triple, alpha};
}

MigrativePair make_pair_checked(const OperatorTable& u1, NeutralTriple t1,
                                const OperatorTable& u2, NeutralTriple t2, GridPoint alpha) {
  if (!is_2uninorm(u1, t1)) throw PreconditionError("u1 is not a 2-uninorm with its triple");
  if (!is_2uninorm(u2, t2)) throw PreconditionError("u2 is not a 2-uninorm with its triple");
  if (!(u1.grid() == u2.grid()))
    throw PreconditionError("operators of a pair must share one grid");
  if (!u1.grid().contains(alpha)) throw PreconditionError("alpha off the grid");
  return {&u1, t1, &u2, t2, alpha};
}

LambdaMu lambda_mu(const MigrativePair& p) {
  const std::uint8_t* u2a = p.u2->row(p.alpha.index);
  return {{u2a[p.t1.e.index]}, {u2a[p.t1.f.index]}};
}

std::string_view to_string(Route r) {
  switch (r) {
    case Route::BruteForce: return "brute-force";
    case Route::ByLambda: return "by-lambda";
    case Route::ByMu: return "by-mu";
    case Route::Subclass: return "subclass";
  }
  return "?";
}

std::string_view to_string(CaseTag c) {
  switch (c) {
    case CaseTag::I: return "i";
    case CaseTag::II: return "ii";
    case CaseTag::III: return "iii";
    case CaseTag::IV: return "iv";
  }
  return "?";
}

namespace {

std::string frac_str(int idx, int n) {
  return std::to_string(idx) + "/" + std::to_string(n);
}

/// A pointwise identity lhs[x] = rhs[x] over x in [lo, hi].
struct RowCond {
  std::string label;
  const std::uint8_t* lhs;
  const std::uint8_t* rhs;
  int lo, hi;
};

std::optional<CondFailure> first_failure(const std::vector<RowCond>& conds) {
  for (const RowCond& c : conds)
    for (int x = c.lo; x <= c.hi; ++x)
      if (c.lhs[x] != c.rhs[x])
        return CondFailure{c.label, {x}, {c.lhs[x]}, {c.rhs[x]}};
  return std::nullopt;
}

/// Rows and pivots shared by every characterization of one pair.
struct PairContext {
  const MigrativePair& p;
  int n;
  int e1, a1, f1;
  const std::uint8_t* u2a;  // row alpha of u2: u2(alpha, .)
  int lambda, mu;           // u2(alpha,e1), u2(alpha,f1)
  const std::uint8_t* u1_lambda;
  const std::uint8_t* u1_mu;
  const std::uint8_t* u1_a1;

  explicit PairContext(const MigrativePair& pair)
      : p(pair),
        n(pair.u1->n()),
        e1(pair.t1.e.index),
        a1(pair.t1.a.index),
        f1(pair.t1.f.index),
        u2a(pair.u2->row(pair.alpha.index)),
        lambda(u2a[e1]),
        mu(u2a[f1]),
        u1_lambda(pair.u1->row(lambda)),
        u1_mu(pair.u1->row(mu)),
        u1_a1(pair.u1->row(a1)) {}

  RowCond full_lambda() const {
    return {"U1(lambda,x) = U2(alpha,x) on [0,1]", u1_lambda, u2a, 0, n};
  }
  RowCond full_mu() const {
    return {"U1(mu,x) = U2(alpha,x) on [0,1]", u1_mu, u2a, 0, n};
  }
  RowCond piecewise_low() const {
    return {"U2(alpha,x) = U1(lambda,x) on [0,a1]", u2a, u1_lambda, 0, a1};
  }
  RowCond piecewise_high() const {
    return {"U2(alpha,x) = U1(mu,x) on [a1,1]", u2a, u1_mu, a1, n};
  }
  RowCond lambda_anchor() const {
    return {"U1(lambda,x) = U1(a1,x) on [a1,1]", u1_lambda, u1_a1, a1, n};
  }
  RowCond mu_anchor() const {
    return {"U1(mu,x) = U1(a1,x) on [0,a1]", u1_mu, u1_a1, 0, a1};
  }

  /// Both characterizations attach the same condition body to a case tag;
  /// they differ only in how the case is selected.
  std::vector<RowCond> case_conditions(CaseTag c) const {
    switch (c) {
      case CaseTag::I: return {full_lambda()};
      case CaseTag::II: return {piecewise_low(), piecewise_high(), lambda_anchor()};
      case CaseTag::III: return {piecewise_low(), piecewise_high(), mu_anchor()};
      case CaseTag::IV: return {full_mu()};
    }
    return {};
  }
};

CaseSelection select_lambda_cases(const PairContext& c) {
  CaseSelection sel;
  sel.conditions.push_back("U2(alpha,e1) = " + frac_str(c.lambda, c.n));
  sel.conditions.push_back("U2(alpha,f1) = " + frac_str(c.mu, c.n));
  if (c.lambda <= c.e1 && c.mu <= c.a1) sel.applicable.push_back(CaseTag::I);
  if (c.lambda <= c.e1 && c.mu >= c.a1) sel.applicable.push_back(CaseTag::II);
  if (c.e1 <= c.lambda && c.lambda <= c.a1) sel.applicable.push_back(CaseTag::III);
  if (c.lambda >= c.a1) sel.applicable.push_back(CaseTag::IV);
  assert(!sel.applicable.empty());  // the four cases cover [0,1]
  sel.chosen = sel.applicable.front();
  switch (sel.chosen) {
    case CaseTag::I: sel.conditions.push_back("U2(alpha,e1) <= e1 and U2(alpha,f1) <= a1"); break;
    case CaseTag::II: sel.conditions.push_back("U2(alpha,e1) <= e1 and U2(alpha,f1) >= a1"); break;
    case CaseTag::III: sel.conditions.push_back("U2(alpha,e1) in [e1,a1]"); break;
    case CaseTag::IV: sel.conditions.push_back("U2(alpha,e1) >= a1"); break;
  }
  return sel;
}

CaseSelection select_mu_cases(const PairContext& c) {
  CaseSelection sel;
  sel.conditions.push_back("U2(alpha,e1) = " + frac_str(c.lambda, c.n));
  sel.conditions.push_back("U2(alpha,f1) = " + frac_str(c.mu, c.n));
  if (c.mu <= c.a1) sel.applicable.push_back(CaseTag::I);
  if (c.a1 <= c.mu && c.mu <= c.f1) sel.applicable.push_back(CaseTag::II);
  if (c.mu >= c.f1 && c.lambda <= c.a1) sel.applicable.push_back(CaseTag::III);
  if (c.mu >= c.f1 && c.lambda >= c.a1) sel.applicable.push_back(CaseTag::IV);
  assert(!sel.applicable.empty());
  sel.chosen = sel.applicable.front();
  switch (sel.chosen) {
    case CaseTag::I: sel.conditions.push_back("U2(alpha,f1) <= a1"); break;
    case CaseTag::II: sel.conditions.push_back("U2(alpha,f1) in [a1,f1]"); break;
    case CaseTag::III: sel.conditions.push_back("U2(alpha,f1) >= f1 and U2(alpha,e1) <= a1"); break;
    case CaseTag::IV: sel.conditions.push_back("U2(alpha,f1) >= f1 and U2(alpha,e1) >= a1"); break;
  }
  return sel;
}

MigrativityVerdict characterize(const PairContext& c, const CaseSelection& sel, Route route) {
  MigrativityVerdict v;
  v.route = route;
  v.theorem_case = sel.chosen;
  v.case_conditions = sel.conditions;
  v.condition_failure = first_failure(c.case_conditions(sel.chosen));
  v.migrative = !v.condition_failure.has_value();
  return v;
}

CaseAudit audit(const PairContext& c, const CaseSelection& sel, Route route) {
  CaseAudit out;
  out.verdict = characterize(c, sel, route);
  for (CaseTag tag : sel.applicable)
    out.case_verdicts.emplace_back(tag, !first_failure(c.case_conditions(tag)).has_value());
  for (const auto& [tag, ok] : out.case_verdicts)
    if (ok != out.verdict.migrative) out.boundary_consistent = false;
  return out;
}

}  // namespace

MigrativityVerdict brute_force_migrative(const MigrativePair& p) {
  const auto& k = kernels::active_kernels();
  const int n1 = p.u1->n1();
  const std::uint8_t* u2a = p.u2->row(p.alpha.index);
  MigrativityVerdict v;
  v.route = Route::BruteForce;
  for (int x = 0; x < n1; ++x) {
    const std::uint8_t* lhs = p.u1->row(u2a[x]);  // u1(u2(alpha,x), .)
    const std::uint8_t* u1x = p.u1->row(x);       // u1(x, u2(alpha,.)) via gather
    const int y = k.first_lut_mismatch(lhs, u1x, u2a, n1);
    if (y >= 0) {
      v.migrative = false;
      v.witness = EqWitness{{x}, {y}, {lhs[y]}, {u1x[u2a[y]]}};
      return v;
    }
  }
  v.migrative = true;
  return v;
}

CaseSelection classify_lambda_cases(const MigrativePair& p) {
  return select_lambda_cases(PairContext(p));
}

CaseSelection classify_mu_cases(const MigrativePair& p) {
  return select_mu_cases(PairContext(p));
}

MigrativityVerdict characterize_by_lambda(const MigrativePair& p) {
  const PairContext c(p);
  return characterize(c, select_lambda_cases(c), Route::ByLambda);
}

MigrativityVerdict characterize_by_mu(const MigrativePair& p) {
  const PairContext c(p);
  return characterize(c, select_mu_cases(c), Route::ByMu);
}

CaseAudit audit_by_lambda(const MigrativePair& p) {
  const PairContext c(p);
  return audit(c, select_lambda_cases(c), Route::ByLambda);
}

CaseAudit audit_by_mu(const MigrativePair& p) {
  const PairContext c(p);
  return audit(c, select_mu_cases(c), Route::ByMu);
}

bool check_pivot_bounds(const OperatorTable& u2, const NeutralTriple& t1, GridPoint alpha) {
  const std::uint8_t* u2a = u2.row(alpha.index);
  const int lambda = u2a[t1.e.index], mu = u2a[t1.f.index];
  // Strict premises: at equality the implications are vacuous. The example
  // family already realizes u2(alpha,f1) = f1 together with
  // u2(alpha,e1) < e1 at small alpha, so only the strict reading holds
  // universally.
  const bool i = !(lambda < t1.e.index) || (mu <= t1.f.index);
  const bool ii = !(mu > t1.f.index) || (lambda >= t1.e.index);
  return i && ii;
}

namespace {

bool anchor_image_impl(const PairContext& c) {
  const int at_a1 = c.u2a[c.a1];
  const bool i = !(c.e1 <= c.lambda && c.lambda <= c.a1) || (at_a1 >= c.a1);
  const bool ii = !(c.a1 <= c.mu && c.mu <= c.f1) || (at_a1 <= c.a1);
  return i && ii;
}

bool holds(const RowCond& cond) {
  return !first_failure({cond}).has_value();
}

CheckOutcome onesided_iff_impl(const PairContext& c, bool brute) {
  bool any = false, agree = true;
  if (c.lambda >= c.a1) {
    any = true;
    agree = agree && (holds(c.full_mu()) == brute);
  }
  if (c.mu <= c.a1) {
    any = true;
    agree = agree && (holds(c.full_lambda()) == brute);
  }
  if (!any) return CheckOutcome::NotApplicable;
  return agree ? CheckOutcome::Agree : CheckOutcome::Disagree;
}

CheckOutcome piecewise_iff_impl(const PairContext& c, bool brute) {
  bool any = false, agree = true;
  const bool piecewise = holds(c.piecewise_low()) && holds(c.piecewise_high());
  if (c.e1 <= c.lambda && c.lambda <= c.a1) {
    any = true;
    agree = agree && ((piecewise && holds(c.mu_anchor())) == brute);
  }
  if (c.a1 <= c.mu && c.mu <= c.f1) {
    any = true;
    agree = agree && ((piecewise && holds(c.lambda_anchor())) == brute);
  }
  if (!any) return CheckOutcome::NotApplicable;
  return agree ? CheckOutcome::Agree : CheckOutcome::Disagree;
}

bool identity_impl(const PairContext& c) {
  for (int x = 0; x <= c.n; ++x) {
    const int v = c.u2a[x];
    const std::uint8_t* u1x = c.p.u1->row(x);
    if (v <= c.a1 && u1x[c.lambda] != v) return false;
    if (v >= c.a1 && u1x[c.mu] != v) return false;
  }
  return true;
}

}  // namespace

bool check_anchor_image(const MigrativePair& p) {
  if (!brute_force_migrative(p).migrative)
    throw PreconditionError("the anchor-image check assumes a migrative pair");
  return anchor_image_impl(PairContext(p));
}

CheckOutcome check_onesided_iff(const MigrativePair& p) {
  return onesided_iff_impl(PairContext(p), brute_force_migrative(p).migrative);
}

CheckOutcome check_piecewise_iff(const MigrativePair& p) {
  return piecewise_iff_impl(PairContext(p), brute_force_migrative(p).migrative);
}

bool check_migrative_identity(const MigrativePair& p) {
  return identity_impl(PairContext(p));
}

namespace {

const char* kRoman[] = {"", "i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};

/// The neutral element behind a uninorm-classified triple: (g,g,g) and
/// (g,1,1) carry it as e, the degenerate form (0,0,g) carries it as f.
int uninorm_neutral(const NeutralTriple& t, int n) {
  if (t.e == t.a && t.a == t.f) return t.e.index;
  if (t.a.index == n && t.f.index == n) return t.e.index;
  return t.f.index;
}

MigrativityVerdict subclass_verdict(const PairContext& c, int item,
                                     const std::vector<RowCond>& conds, int bullet) {
  MigrativityVerdict v;
  v.route = Route::Subclass;
  v.subclass_item = std::string(kRoman[item]) + (bullet ? "." + std::to_string(bullet) : "");
  v.condition_failure = first_failure(conds);
  v.migrative = !v.condition_failure.has_value();
  v.case_conditions.push_back("U2(alpha,e1) = " + frac_str(c.lambda, c.n));
  v.case_conditions.push_back("U2(alpha,f1) = " + frac_str(c.mu, c.n));
  return v;
}

}  // namespace

std::vector<int> subclass_items(SubclassTag tag1, SubclassTag tag2) {
  std::vector<int> items;
  switch (tag1) {
    case SubclassTag::TNorm: items.push_back(1); break;
    case SubclassTag::TConorm: items.push_back(3); break;
    case SubclassTag::Uninorm: items.push_back(5); break;
    case SubclassTag::Nullnorm: items.push_back(6); break;
    case SubclassTag::UniNullnorm: items.push_back(7); break;
    case SubclassTag::NullUninorm: items.push_back(8); break;
    case SubclassTag::General2Uninorm: break;
  }
  if (tag2 == SubclassTag::TNorm) items.push_back(2);
  if (tag2 == SubclassTag::TConorm) items.push_back(4);
  return items;
}

MigrativityVerdict subclass_item_verdict(const MigrativePair& p, int item) {
  const PairContext c(p);
  const int n = c.n;
  const std::uint8_t* at_zero_row = p.u1->row(c.u2a[0]);
  const std::uint8_t* at_one_row = p.u1->row(c.u2a[n]);

  switch (item) {
    case 1:  // u1 t-norm: u1(u2(alpha,1), x) = u2(alpha,x)
      return subclass_verdict(
          c, 1, {{"U1(U2(alpha,1),x) = U2(alpha,x) on [0,1]", at_one_row, c.u2a, 0, n}}, 0);
    case 2:  // u2 t-norm: split on u2(alpha,f1) vs a1
      if (c.mu <= c.a1)
        return subclass_verdict(c, 2, {c.full_lambda()}, 1);
      return subclass_verdict(
          c, 2, {c.piecewise_low(), c.piecewise_high(), c.lambda_anchor()}, 2);
    case 3:  // u1 t-conorm: u1(u2(alpha,0), x) = u2(alpha,x)
      return subclass_verdict(
          c, 3, {{"U1(U2(alpha,0),x) = U2(alpha,x) on [0,1]", at_zero_row, c.u2a, 0, n}}, 0);
    case 4:  // u2 t-conorm: split on u2(alpha,e1) vs a1
      if (c.lambda <= c.a1)
        return subclass_verdict(c, 4, {c.piecewise_low(), c.piecewise_high(), c.mu_anchor()}, 1);
      return subclass_verdict(c, 4, {c.full_mu()}, 2);
    case 5: {  // u1 uninorm: pivot on u2(alpha, neutral)
      const std::uint8_t* at_neutral_row = p.u1->row(c.u2a[uninorm_neutral(p.t1, n)]);
      return subclass_verdict(
          c, 5,
          {{"U1(U2(alpha,e_U),x) = U2(alpha,x) on [0,1]", at_neutral_row, c.u2a, 0, n}}, 0);
    }
    case 6:  // u1 nullnorm (0, a1, 1): split on u2(alpha,0) vs a1
      if (c.u2a[0] <= c.a1)
        return subclass_verdict(
            c, 6,
            {{"U2(alpha,x) = U1(U2(alpha,0),x) on [0,a1]", c.u2a, at_zero_row, 0, c.a1},
             {"U2(alpha,x) = U1(U2(alpha,1),x) on [a1,1]", c.u2a, at_one_row, c.a1, n}},
            1);
      return subclass_verdict(
          c, 6, {{"U1(U2(alpha,1),x) = U2(alpha,x) on [0,1]", at_one_row, c.u2a, 0, n}}, 2);
    case 7:  // u1 uni-nullnorm (e1, a1, 1): split on u2(alpha,1) vs a1
      if (c.u2a[n] <= c.a1) return subclass_verdict(c, 7, {c.full_lambda()}, 1);
      return subclass_verdict(
          c, 7,
          {{"U2(alpha,x) = U1(lambda,x) on [0,a1]", c.u2a, c.u1_lambda, 0, c.a1},
           {"U2(alpha,x) = U1(U2(alpha,1),x) on [a1,1]", c.u2a, at_one_row, c.a1, n}},
          2);
    case 8:  // u1 null-uninorm (0, a1, f1): split on u2(alpha,0) vs a1
      if (c.u2a[0] <= c.a1)
        return subclass_verdict(
            c, 8,
            {{"U2(alpha,x) = U1(U2(alpha,0),x) on [0,a1]", c.u2a, at_zero_row, 0, c.a1},
             {"U2(alpha,x) = U1(mu,x) on [a1,1]", c.u2a, c.u1_mu, c.a1, n}},
            1);
      return subclass_verdict(c, 8, {c.full_mu()}, 2);
    default:
      throw ShapeMismatchError("no such specialization item");
  }
}

MigrativityVerdict subclass_dispatch(const MigrativePair& p, SubclassTag tag1,
                                      SubclassTag tag2) {
  const auto items = subclass_items(tag1, tag2);
  if (items.empty())
    throw ShapeMismatchError("tags (" + std::string(to_string(tag1)) + ", " +
                             std::string(to_string(tag2)) + ") fit no specialization item");
  return subclass_item_verdict(p, items.front());
}

bool AuditReport::clean() const { return total_violations() == 0; }

std::uint64_t AuditReport::total_violations() const {
  return oracle_disagreements + boundary_disagreements + pivot_bounds_violations +
         anchor_image_violations + onesided_iff_disagreements + piecewise_iff_disagreements +
         identity_violations + subclass_disagreements;
}

void AuditReport::merge(const AuditReport& o, std::size_t max_examples) {
  pairs += o.pairs;
  pairs_checked += o.pairs_checked;
  migrative += o.migrative;
  oracle_disagreements += o.oracle_disagreements;
  boundary_checked += o.boundary_checked;
  boundary_disagreements += o.boundary_disagreements;
  pivot_bounds_checked += o.pivot_bounds_checked;
  pivot_bounds_violations += o.pivot_bounds_violations;
  anchor_image_applicable += o.anchor_image_applicable;
  anchor_image_violations += o.anchor_image_violations;
  onesided_iff_applicable += o.onesided_iff_applicable;
  onesided_iff_disagreements += o.onesided_iff_disagreements;
  piecewise_iff_applicable += o.piecewise_iff_applicable;
  piecewise_iff_disagreements += o.piecewise_iff_disagreements;
  identity_checked += o.identity_checked;
  identity_violations += o.identity_violations;
  subclass_applicable += o.subclass_applicable;
  subclass_disagreements += o.subclass_disagreements;
  completed = completed && o.completed;
  for (const auto& ex : o.examples)
    if (examples.size() < max_examples) examples.push_back(ex);
}

namespace {

void audit_one(const MigrativePair& p, std::uint64_t index, const AuditOptions& opt,
               AuditReport& r) {
  const PairContext c(p);
  const bool brute = brute_force_migrative(p).migrative;
  const CaseAudit lam = audit(c, select_lambda_cases(c), Route::ByLambda);
  const CaseAudit mu = audit(c, select_mu_cases(c), Route::ByMu);

  auto example = [&](const char* kind) {
    if (r.examples.size() < opt.max_examples)
      r.examples.push_back({index, kind, brute, lam.verdict.migrative, mu.verdict.migrative});
  };

  ++r.pairs_checked;
  if (brute) ++r.migrative;

  if (brute != lam.verdict.migrative || brute != mu.verdict.migrative) {
    ++r.oracle_disagreements;
    example("oracle");
  }

  if (lam.case_verdicts.size() > 1) {
    ++r.boundary_checked;
    if (!lam.boundary_consistent) {
      ++r.boundary_disagreements;
      example("boundary-lambda");
    }
  }
  if (mu.case_verdicts.size() > 1) {
    ++r.boundary_checked;
    if (!mu.boundary_consistent) {
      ++r.boundary_disagreements;
      example("boundary-mu");
    }
  }

  ++r.pivot_bounds_checked;
  if (!check_pivot_bounds(*p.u2, p.t1, p.alpha)) {
    ++r.pivot_bounds_violations;
    example("pivot-bounds");
  }

  if (brute) {
    ++r.anchor_image_applicable;
    if (!anchor_image_impl(c)) {
      ++r.anchor_image_violations;
      example("anchor-image");
    }
    ++r.identity_checked;
    if (!identity_impl(c)) {
      ++r.identity_violations;
      example("identity");
    }
  }

  switch (onesided_iff_impl(c, brute)) {
    case CheckOutcome::NotApplicable: break;
    case CheckOutcome::Agree: ++r.onesided_iff_applicable; break;
    case CheckOutcome::Disagree:
      ++r.onesided_iff_applicable;
      ++r.onesided_iff_disagreements;
      example("one-sided-iff");
      break;
  }
  switch (piecewise_iff_impl(c, brute)) {
    case CheckOutcome::NotApplicable: break;
    case CheckOutcome::Agree: ++r.piecewise_iff_applicable; break;
    case CheckOutcome::Disagree:
      ++r.piecewise_iff_applicable;
      ++r.piecewise_iff_disagreements;
      example("piecewise-iff");
      break;
  }

  if (opt.with_subclass_items) {
    const SubclassTag tag1 = classify(p.t1, p.u1->grid());
    const SubclassTag tag2 = classify(p.t2, p.u2->grid());
    for (int item : subclass_items(tag1, tag2)) {
      ++r.subclass_applicable;
      if (subclass_item_verdict(p, item).migrative != lam.verdict.migrative) {
        ++r.subclass_disagreements;
        example("subclass");
      }
    }
  }
}

}  // namespace

AuditReport equivalence_audit(std::uint64_t count, const PairSource& source,
                              const AuditOptions& options) {
  const int jobs = std::max(1, options.jobs);
  const auto deadline =
      options.budget ? std::optional(std::chrono::steady_clock::now() + *options.budget)
                     : std::nullopt;

  auto run_chunk = [&](std::uint64_t begin, std::uint64_t end, AuditReport& part) {
    for (std::uint64_t i = begin; i < end; ++i) {
      if (deadline && std::chrono::steady_clock::now() > *deadline) {
        part.completed = false;
        return;
      }
      audit_one(source(i), i, options, part);
    }
  };

  AuditReport out;
  out.pairs = count;
  if (jobs == 1 || count < 2 * static_cast<std::uint64_t>(jobs)) {
    run_chunk(0, count, out);
    return out;
  }

  std::vector<AuditReport> parts(jobs);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = count / jobs, rem = count % jobs;
  std::uint64_t begin = 0;
  for (int w = 0; w < jobs; ++w) {
    const std::uint64_t end = begin + chunk + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
    workers.emplace_back(run_chunk, begin, end, std::ref(parts[w]));
    begin = end;
  }
  for (auto& t : workers) t.join();
  for (const auto& part : parts) out.merge(part, options.max_examples);
  return out;
}

}  // namespace unimig
