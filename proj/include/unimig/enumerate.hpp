#pragma once

#include "unimig/migrativity.hpp"

namespace unimig {

struct EnumLimits {
  std::uint64_t max_tables = 1'000'000;
  std::optional<std::chrono::milliseconds> budget;
};

struct EnumJob {
  UnitGrid grid;
  NeutralTriple triple;
  EnumLimits limits;
};

struct EnumStats {
  std::uint64_t tables_emitted = 0;
  std::uint64_t nodes_explored = 0;
  std::uint64_t prefilled_cells = 0;   // neutral rows fixed before search
  std::uint64_t mirrored_cells = 0;    // lower triangle never searched
  std::uint64_t pruned_monotone = 0;   // candidate values cut by bounds
  std::uint64_t pruned_assoc = 0;      // subtrees cut by incremental checks
  std::uint64_t final_rejects = 0;     // full re-verification failures (expect 0)
  bool completed = true;

  void add(const EnumStats& o);
};

/// Return false to stop the stream early (flags the stats incomplete).
using TableSink = std::function<bool(const OperatorTable&)>;

/// Backtracking enumeration of every table on the grid that passes
/// is_2uninorm with job.triple. Upper-triangle cells are filled in row-major
/// order with neutral rows pre-filled; candidate values are bounded by the
/// already-filled monotone neighbors and associativity is re-checked on every
/// fully determined argument triple. Each complete table is independently
/// re-verified by the axiom suite before emission. Emission order is
/// lexicographic in the fill order, so identical jobs produce identical
/// streams.
EnumStats enumerate_2uninorms(const EnumJob& job, const TableSink& sink);
std::vector<OperatorTable> enumerate_2uninorms(const EnumJob& job, EnumStats* stats = nullptr);

/// Independent oracle: generate every commutative table on the grid (all
/// (n+1)(n+2)/2 free cells over n+1 values, no pruning) and filter by the
/// full axiom suite plus the triple's neutral rows. Practical for n <= 2;
/// n = 3 runs in ~a second per triple.
EnumStats enumerate_naive(const EnumJob& job, const TableSink& sink);
std::vector<OperatorTable> enumerate_naive(const EnumJob& job, EnumStats* stats = nullptr);

/// All (e,a,f) with e <= a <= f, lexicographic in (a,e,f).
std::vector<NeutralTriple> all_triples(const UnitGrid& grid);

/// The complete population of 2-uninorms on a chain: one entry per
/// (table, triple) combination, grouped by triple in all_triples order.
struct Census {
  UnitGrid grid;
  std::vector<Verified2Uninorm> entries;
  std::uint64_t distinct_tables = 0;
  EnumStats enum_stats;
  bool completed = true;
};

Census build_census(const UnitGrid& grid, const EnumLimits& limits = {});

/// A disagreement example resolved back to the concrete operators, so a
/// report record alone suffices to replay the check.
struct DecodedDisagreement {
  std::string kind;
  std::uint64_t pair_index = 0;
  std::uint64_t u1_index = 0, u2_index = 0;
  NeutralTriple t1, t2;
  GridPoint alpha;
  bool brute = false, by_lambda = false, by_mu = false;
  OperatorTable u1_table, u2_table;
};

struct CensusAuditReport {
  int grid_n = 0;
  std::uint64_t census_entries = 0;
  std::uint64_t distinct_tables = 0;
  std::uint64_t structural_tables = 0;
  std::uint64_t structural_failures = 0;
  AuditReport audit;
  std::vector<DecodedDisagreement> disagreements;
  EnumStats enum_stats;
  bool census_complete = true;

  bool clean() const;
};

/// Criterion driver: build the census on the n-chain, run the structural
/// suite on every entry, then run the equivalence audit over all ordered
/// entry pairs and all grid alphas.
CensusAuditReport census_audit(int n, const AuditOptions& options = {},
                               const EnumLimits& limits = {});
CensusAuditReport census_audit(const Census& census, const AuditOptions& options = {});

}  // namespace unimig
