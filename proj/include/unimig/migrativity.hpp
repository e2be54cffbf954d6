#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>

#include "unimig/axioms.hpp"

namespace unimig {

/// A table that passed is_2uninorm together with the triple fixed for it.
struct Verified2Uninorm {
  OperatorTable table;
  NeutralTriple triple;

  /// Throws PreconditionError when the table is not a 2-uninorm with this
  /// triple.
  static Verified2Uninorm verify(OperatorTable table, NeutralTriple triple);
};

/// One migrativity question: is u1 (alpha, u2)-migrative, i.e. does
/// u1(u2(alpha,x), y) = u1(x, u2(alpha,y)) hold for all grid x, y?
/// Both tables live on the same grid; t1 = (e1,a1,f1) drives every
/// characterization, t2 is carried for reporting and subclass shape tags.
struct MigrativePair {
  const OperatorTable* u1 = nullptr;
  NeutralTriple t1;
  const OperatorTable* u2 = nullptr;
  NeutralTriple t2;
  GridPoint alpha;

  const UnitGrid& grid() const { return u1->grid(); }
};

MigrativePair make_pair(const Verified2Uninorm& u1, const Verified2Uninorm& u2, GridPoint alpha);

/// Re-verifies both tables; throws PreconditionError on any violation.
MigrativePair make_pair_checked(const OperatorTable& u1, NeutralTriple t1,
                                const OperatorTable& u2, NeutralTriple t2, GridPoint alpha);

/// lambda = u2(alpha, e1), mu = u2(alpha, f1). lambda <= mu always.
struct LambdaMu {
  GridPoint lambda, mu;
};
LambdaMu lambda_mu(const MigrativePair& p);

enum class Route { BruteForce, ByLambda, ByMu, Subclass };
enum class CaseTag { I = 1, II = 2, III = 3, IV = 4 };

std::string_view to_string(Route r);
std::string_view to_string(CaseTag c);

/// A cell where the two sides of the defining equation differ.
struct EqWitness {
  GridPoint x, y;
  GridPoint lhs, rhs;  // u1(u2(alpha,x), y) and u1(x, u2(alpha,y))
};

/// A point where a characterization condition fails.
struct CondFailure {
  std::string condition;
  GridPoint x;
  GridPoint lhs, rhs;
};

struct MigrativityVerdict {
  bool migrative = false;
  Route route = Route::BruteForce;
  std::optional<CaseTag> theorem_case;
  std::string subclass_item;               // "i".."viii" plus bullet, Subclass route only
  std::vector<std::string> case_conditions; // inequalities that selected the case
  std::optional<EqWitness> witness;         // negative brute-force verdicts
  std::optional<CondFailure> condition_failure;  // negative characterizations
};

/// Checks the defining equation over every grid pair (x, y); the witness is
/// the first violation in row-major order.
MigrativityVerdict brute_force_migrative(const MigrativePair& p);

/// Case selection. `applicable` lists every case whose closed-interval
/// conditions hold (more than one only on boundaries); `chosen` is the first
/// in order I < II < III < IV.
struct CaseSelection {
  std::vector<CaseTag> applicable;
  CaseTag chosen;
  std::vector<std::string> conditions;
};

/// Classified point u2(alpha, e1):
///   I:   u2(alpha,e1) <= e1 and u2(alpha,f1) <= a1
///   II:  u2(alpha,e1) <= e1 and u2(alpha,f1) >= a1
///   III: u2(alpha,e1) in [e1, a1]
///   IV:  u2(alpha,e1) >= a1
CaseSelection classify_lambda_cases(const MigrativePair& p);

/// Classified point u2(alpha, f1):
///   I:   u2(alpha,f1) <= a1
///   II:  u2(alpha,f1) in [a1, f1]
///   III: u2(alpha,f1) >= f1 and u2(alpha,e1) <= a1
///   IV:  u2(alpha,f1) >= f1 and u2(alpha,e1) >= a1
CaseSelection classify_mu_cases(const MigrativePair& p);

MigrativityVerdict characterize_by_lambda(const MigrativePair& p);
MigrativityVerdict characterize_by_mu(const MigrativePair& p);

/// Audit mode: evaluate the condition of *every* applicable case, not just
/// the first. boundary_consistent is true when all of them agree.
struct CaseAudit {
  MigrativityVerdict verdict;  // the first applicable case, as in normal mode
  std::vector<std::pair<CaseTag, bool>> case_verdicts;
  bool boundary_consistent = true;
};

CaseAudit audit_by_lambda(const MigrativePair& p);
CaseAudit audit_by_mu(const MigrativePair& p);

/// Both implications, with no migrativity premise:
///   (i)  u2(alpha,e1) < e1  implies  u2(alpha,f1) <= f1
///   (ii) u2(alpha,f1) > f1  implies  u2(alpha,e1) >= e1
/// The premises are strict; at equality the implications are vacuous (the
/// example family realizes u2(alpha,f1) = f1 with u2(alpha,e1) < e1 at small
/// alpha, so a non-strict reading is falsifiable). Holds for every
/// 2-uninorm; false indicates an implementation bug.
bool check_pivot_bounds(const OperatorTable& u2, const NeutralTriple& t1, GridPoint alpha);

/// Both implications, under the premise that the pair is migrative:
///   (i)  u2(alpha,e1) in [e1,a1]  implies  u2(alpha,a1) >= a1
///   (ii) u2(alpha,f1) in [a1,f1]  implies  u2(alpha,a1) <= a1
/// Throws PreconditionError when the pair is not migrative (by brute force).
bool check_anchor_image(const MigrativePair& p);

enum class CheckOutcome { NotApplicable, Agree, Disagree };

/// Full-interval characterizations under one-sided premises:
///   (i)  if u2(alpha,e1) >= a1: migrative iff u1(mu,x) = u2(alpha,x) on [0,1]
///   (ii) if u2(alpha,f1) <= a1: migrative iff u1(lambda,x) = u2(alpha,x) on [0,1]
/// Agree when the brute-force verdict matches the condition's truth value.
CheckOutcome check_onesided_iff(const MigrativePair& p);

/// Piecewise characterizations under middle-interval premises:
///   (i)  if u2(alpha,e1) in [e1,a1]: migrative iff the piecewise identity
///        holds and u1(mu,x) = u1(a1,x) on [0,a1]
///   (ii) if u2(alpha,f1) in [a1,f1]: migrative iff the piecewise identity
///        holds and u1(lambda,x) = u1(a1,x) on [a1,1]
CheckOutcome check_piecewise_iff(const MigrativePair& p);

/// Consequence of the defining equation used throughout the proofs: when the
/// pair is migrative, u2(alpha,x) = u1(x,lambda) wherever u2(alpha,x) <= a1
/// and u2(alpha,x) = u1(x,mu) wherever u2(alpha,x) >= a1.
bool check_migrative_identity(const MigrativePair& p);

/// The eight specialization items (u1 side first):
///   i    u1 t-norm        iff u1(u2(alpha,1), x) = u2(alpha, x)
///   ii   u2 t-norm        two bullets split on u2(alpha,f1) vs a1
///   iii  u1 t-conorm      iff u1(u2(alpha,0), x) = u2(alpha, x)
///   iv   u2 t-conorm      two bullets split on u2(alpha,e1) vs a1
///   v    u1 uninorm       iff u1(u2(alpha,neutral), x) = u2(alpha, x)
///   vi   u1 nullnorm      two bullets split on u2(alpha,0) vs a1
///   vii  u1 uni-nullnorm  two bullets split on u2(alpha,1) vs a1
///   viii u1 null-uninorm  two bullets split on u2(alpha,0) vs a1
/// Dispatches on the first applicable item (u1-side items take precedence);
/// throws ShapeMismatchError when the tags fit none.
MigrativityVerdict subclass_dispatch(const MigrativePair& p, SubclassTag tag1, SubclassTag tag2);

/// Items applicable to a tag pair, in dispatch order. Empty when mismatched.
std::vector<int> subclass_items(SubclassTag tag1, SubclassTag tag2);

/// Evaluate one item (and bullet selection) explicitly; used by the audit to
/// exercise every applicable specialization.
MigrativityVerdict subclass_item_verdict(const MigrativePair& p, int item);

struct AuditOptions {
  int jobs = 1;
  std::optional<std::chrono::milliseconds> budget;
  bool with_subclass_items = true;
  std::size_t max_examples = 25;
};

struct DisagreementExample {
  std::uint64_t pair_index = 0;
  std::string kind;  // "oracle", "boundary", "pivot-bounds", ...
  bool brute = false, by_lambda = false, by_mu = false;
};

struct AuditReport {
  std::uint64_t pairs = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t migrative = 0;
  std::uint64_t oracle_disagreements = 0;
  std::uint64_t boundary_checked = 0;
  std::uint64_t boundary_disagreements = 0;
  std::uint64_t pivot_bounds_checked = 0;
  std::uint64_t pivot_bounds_violations = 0;
  std::uint64_t anchor_image_applicable = 0;
  std::uint64_t anchor_image_violations = 0;
  std::uint64_t onesided_iff_applicable = 0;
  std::uint64_t onesided_iff_disagreements = 0;
  std::uint64_t piecewise_iff_applicable = 0;
  std::uint64_t piecewise_iff_disagreements = 0;
  std::uint64_t identity_checked = 0;
  std::uint64_t identity_violations = 0;
  std::uint64_t subclass_applicable = 0;
  std::uint64_t subclass_disagreements = 0;
  bool completed = true;
  std::vector<DisagreementExample> examples;

  bool clean() const;
  std::uint64_t total_violations() const;
  void merge(const AuditReport& other, std::size_t max_examples);
};

using PairSource = std::function<MigrativePair(std::uint64_t)>;

/// For each pair: brute force, both theorem characterizations (all applicable
/// cases), lemma/proposition checks and, when shapes match, every applicable
/// subclass item; disagreements are report content, not errors. Work is
/// split into contiguous chunks across `jobs` workers and merged in index
/// order, so the report is deterministic regardless of worker count.
AuditReport equivalence_audit(std::uint64_t count, const PairSource& source,
                              const AuditOptions& options = {});

}  // namespace unimig
