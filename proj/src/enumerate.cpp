#include "unimig/enumerate.hpp"

#include <unordered_set>

namespace unimig {

void EnumStats::add(const EnumStats& o) {
  tables_emitted += o.tables_emitted;
  nodes_explored += o.nodes_explored;
  prefilled_cells += o.prefilled_cells;
  mirrored_cells += o.mirrored_cells;
  pruned_monotone += o.pruned_monotone;
  pruned_assoc += o.pruned_assoc;
  final_rejects += o.final_rejects;
  completed = completed && o.completed;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
  const EnumJob& job;
  const TableSink& sink;
  int n, n1;
  OperatorTable t;
  std::vector<char> filled;
  std::vector<std::pair<int, int>> free_cells;
  EnumStats stats;
  std::optional<Clock::time_point> deadline;
  std::uint64_t tick = 0;
  bool stop = false;

  Searcher(const EnumJob& j, const TableSink& s)
      : job(j), sink(s), n(j.grid.n()), n1(j.grid.size()), t(j.grid),
        filled(static_cast<std::size_t>(n1) * n1, 0) {
    if (j.limits.budget) deadline = Clock::now() + *j.limits.budget;
  }

  bool is_filled(int i, int j) const { return filled[i * n1 + j] != 0; }

  void put(int i, int j, int v) {
    t.set(i, j, static_cast<std::uint8_t>(v));
    t.set(j, i, static_cast<std::uint8_t>(v));
    filled[i * n1 + j] = filled[j * n1 + i] = 1;
  }

  void take(int i, int j) { filled[i * n1 + j] = filled[j * n1 + i] = 0; }

  void prefill() {
    const int e = job.triple.e.index, a = job.triple.a.index, f = job.triple.f.index;
    for (int x = 0; x <= a; ++x) put(e, x, x);
    for (int x = a; x <= n; ++x) put(f, x, x);
    for (int i = 0; i < n1; ++i)
      for (int j = i; j < n1; ++j)
        if (is_filled(i, j)) ++stats.prefilled_cells;
        else free_cells.emplace_back(i, j);
    stats.mirrored_cells = static_cast<std::uint64_t>(n1) * (n1 - 1) / 2;
  }

  /// Every fully determined argument triple satisfies associativity.
  bool assoc_consistent() const {
    for (int x = 0; x < n1; ++x)
      for (int y = 0; y < n1; ++y) {
        if (!is_filled(x, y)) continue;
        const int xy = t.at_index(x, y);
        for (int z = 0; z < n1; ++z) {
          if (!is_filled(y, z)) continue;
          const int yz = t.at_index(y, z);
          if (!is_filled(xy, z) || !is_filled(x, yz)) continue;
          if (t.at_index(xy, z) != t.at_index(x, yz)) return false;
        }
      }
    return true;
  }

  bool over_budget() {
    if (!deadline) return false;
    if ((++tick & 0xFF) != 0) return false;
    return Clock::now() > *deadline;
  }

  void emit() {
    if (stats.tables_emitted >= job.limits.max_tables) {
      stats.completed = false;
      stop = true;
      return;
    }
    // Independent re-verification before anything leaves the search.
    if (!is_2uninorm(t, job.triple)) {
      ++stats.final_rejects;
      return;
    }
    ++stats.tables_emitted;
    if (!sink(t)) {
      stats.completed = false;
      stop = true;
    }
  }

  void search(std::size_t k) {
    if (stop) return;
    ++stats.nodes_explored;  // one node per search-tree entry, root included
    if (over_budget()) {
      stats.completed = false;
      stop = true;
      return;
    }
    if (k == free_cells.size()) {
      emit();
      return;
    }
    const auto [i, j] = free_cells[k];
    int lo = 0, hi = n;
    if (i > 0 && is_filled(i - 1, j)) lo = std::max(lo, static_cast<int>(t.at_index(i - 1, j)));
    if (j > 0 && is_filled(i, j - 1)) lo = std::max(lo, static_cast<int>(t.at_index(i, j - 1)));
    if (i < n && is_filled(i + 1, j)) hi = std::min(hi, static_cast<int>(t.at_index(i + 1, j)));
    if (j < n && is_filled(i, j + 1)) hi = std::min(hi, static_cast<int>(t.at_index(i, j + 1)));
    stats.pruned_monotone += static_cast<std::uint64_t>(n1 - std::max(0, hi - lo + 1));
    for (int v = lo; v <= hi && !stop; ++v) {
      put(i, j, v);
      if (assoc_consistent())
        search(k + 1);
      else
        ++stats.pruned_assoc;
      take(i, j);
    }
  }
};

}  // namespace

EnumStats enumerate_2uninorms(const EnumJob& job, const TableSink& sink) {
  if (!job.grid.contains(job.triple.e) || !job.grid.contains(job.triple.f))
    throw PreconditionError("triple off the enumeration grid");
  Searcher s(job, sink);
  s.prefill();
  s.search(0);
  return s.stats;
}

std::vector<OperatorTable> enumerate_2uninorms(const EnumJob& job, EnumStats* stats) {
  std::vector<OperatorTable> out;
  EnumStats st = enumerate_2uninorms(job, [&](const OperatorTable& t) {
    out.push_back(t);
    return true;
  });
  if (stats) *stats = st;
  return out;
}

namespace {

bool neutral_rows_hold(const OperatorTable& t, const NeutralTriple& tr) {
  for (int x = 0; x <= tr.a.index; ++x)
    if (t.at_index(tr.e.index, x) != x) return false;
  for (int x = tr.a.index; x <= t.n(); ++x)
    if (t.at_index(tr.f.index, x) != x) return false;
  return true;
}

}  // namespace

EnumStats enumerate_naive(const EnumJob& job, const TableSink& sink) {
  const int n = job.grid.n(), n1 = job.grid.size();
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n1; ++i)
    for (int j = i; j < n1; ++j) cells.emplace_back(i, j);

  EnumStats stats;
  std::optional<Clock::time_point> deadline;
  if (job.limits.budget) deadline = Clock::now() + *job.limits.budget;

  OperatorTable t(job.grid);
  std::vector<int> v(cells.size(), 0);
  std::uint64_t tick = 0;
  while (true) {
    ++stats.nodes_explored;
    if (deadline && (++tick & 0xFFF) == 0 && Clock::now() > *deadline) {
      stats.completed = false;
      return stats;
    }
    for (std::size_t k = 0; k < cells.size(); ++k) {
      t.set(cells[k].first, cells[k].second, static_cast<std::uint8_t>(v[k]));
      t.set(cells[k].second, cells[k].first, static_cast<std::uint8_t>(v[k]));
    }
    if (neutral_rows_hold(t, job.triple) && check_monotone(t).ok && check_commutative(t).ok &&
        check_associative(t).ok && is_2uninorm(t, job.triple)) {
      if (stats.tables_emitted >= job.limits.max_tables) {
        stats.completed = false;
        return stats;
      }
      ++stats.tables_emitted;
      if (!sink(t)) {
        stats.completed = false;
        return stats;
      }
    }
    // odometer, last cell fastest
    std::size_t k = cells.size();
    while (k > 0 && v[k - 1] == n) v[--k] = 0;
    if (k == 0) break;
    ++v[k - 1];
  }
  return stats;
}

std::vector<OperatorTable> enumerate_naive(const EnumJob& job, EnumStats* stats) {
  std::vector<OperatorTable> out;
  EnumStats st = enumerate_naive(job, [&](const OperatorTable& t) {
    out.push_back(t);
    return true;
  });
  if (stats) *stats = st;
  return out;
}

std::vector<NeutralTriple> all_triples(const UnitGrid& grid) {
  std::vector<NeutralTriple> out;
  for (int a = 0; a <= grid.n(); ++a)
    for (int e = 0; e <= a; ++e)
      for (int f = a; f <= grid.n(); ++f) out.push_back({{e}, {a}, {f}});
  return out;
}

Census build_census(const UnitGrid& grid, const EnumLimits& limits) {
  Census census{grid, {}, 0, {}, true};
  std::optional<Clock::time_point> deadline;
  if (limits.budget) deadline = Clock::now() + *limits.budget;

  std::unordered_set<std::string> seen;
  for (const NeutralTriple& triple : all_triples(grid)) {
    if (deadline && Clock::now() > *deadline) {
      census.completed = false;
      break;
    }
    EnumJob job{grid, triple, limits};
    if (deadline) {
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          *deadline - Clock::now());
      job.limits.budget = std::max(left, std::chrono::milliseconds(1));
    }
    EnumStats st = enumerate_2uninorms(job, [&](const OperatorTable& t) {
      census.entries.push_back(Verified2Uninorm::verify(t, triple));
      seen.emplace(reinterpret_cast<const char*>(t.data()), t.cell_count());
      return true;
    });
    census.enum_stats.add(st);
  }
  census.distinct_tables = seen.size();
  census.completed = census.completed && census.enum_stats.completed;
  return census;
}

bool CensusAuditReport::clean() const {
  return structural_failures == 0 && audit.clean();
}

CensusAuditReport census_audit(int n, const AuditOptions& options, const EnumLimits& limits) {
  return census_audit(build_census(make_grid(n), limits), options);
}

CensusAuditReport census_audit(const Census& census, const AuditOptions& options) {
  const UnitGrid& grid = census.grid;

  CensusAuditReport rep;
  rep.grid_n = grid.n();
  rep.census_entries = census.entries.size();
  rep.distinct_tables = census.distinct_tables;
  rep.enum_stats = census.enum_stats;
  rep.census_complete = census.completed;

  for (const Verified2Uninorm& entry : census.entries) {
    ++rep.structural_tables;
    if (!check_structural_props(entry.table, entry.triple).all_ok()) ++rep.structural_failures;
  }

  const std::uint64_t entries = census.entries.size();
  const std::uint64_t alphas = grid.size();
  const std::uint64_t count = entries * entries * alphas;
  const auto decode = [&](std::uint64_t idx) {
    const std::uint64_t u1 = idx / (entries * alphas);
    const std::uint64_t rest = idx % (entries * alphas);
    return std::tuple(u1, rest / alphas, static_cast<int>(rest % alphas));
  };
  rep.audit = equivalence_audit(
      count,
      [&](std::uint64_t idx) {
        const auto [u1, u2, alpha] = decode(idx);
        return make_pair(census.entries[u1], census.entries[u2], {alpha});
      },
      options);
  for (const DisagreementExample& ex : rep.audit.examples) {
    const auto [u1, u2, alpha] = decode(ex.pair_index);
    rep.disagreements.push_back({ex.kind, ex.pair_index, u1, u2, census.entries[u1].triple,
                                 census.entries[u2].triple, GridPoint{alpha}, ex.brute,
                                 ex.by_lambda, ex.by_mu, census.entries[u1].table,
                                 census.entries[u2].table});
  }
  return rep;
}

}  // namespace unimig
