#include "veronese/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "veronese/associated_primes.hpp"
#include "veronese/betti.hpp"
#include "veronese/covers.hpp"
#include "veronese/errors.hpp"
#include "veronese/parallel.hpp"
#include "veronese/toric.hpp"
#include "veronese/walk_graphs.hpp"

namespace veronese {

std::size_t GridReport::disagreements() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const GridRow& r) { return !r.agree; }));
}

std::size_t GridReport::disagreements(const std::string& quantity) const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const GridRow& r) {
    return r.quantity == quantity && !r.agree;
  }));
}

namespace {

std::string csvField(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string GridReport::toCsv(bool withTiming) const {
  std::ostringstream out;
  out << "blocks,t,s,quantity,formula,oracle,agree,status,note";
  if (withTiming) out << ",runtime_ms";
  out << '\n';
  for (const auto& r : rows) {
    out << csvField(r.blocks) << ',' << r.t << ',' << r.s << ',' << csvField(r.quantity) << ','
        << csvField(r.formula) << ',' << csvField(r.oracle) << ',' << (r.agree ? "true" : "false")
        << ',' << r.status << ',' << csvField(r.note);
    if (withTiming) out << ',' << static_cast<long long>(r.runtimeMillis);
    out << '\n';
  }
  return out.str();
}

GridName gridFromString(const std::string& name) {
  if (name == "small") return GridName::Small;
  if (name == "graph") return GridName::Graph;
  if (name == "wide") return GridName::Wide;
  if (name == "full") return GridName::Full;
  fail(ErrorKind::Parameter, "unknown grid '" + name + "' (small, graph, wide, full)");
}

std::vector<BlockStructure> blockStructures(const std::vector<int>& blockCounts,
                                            const std::vector<int>& sizes) {
  std::vector<BlockStructure> out;
  for (int n : blockCounts) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<int> m;
      for (auto d : digits) m.push_back(sizes[d]);
      out.emplace_back(std::move(m));
      int pos = n - 1;
      while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == sizes.size())
        digits[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
    }
  }
  return out;
}

std::vector<IdealParameters> regularityGrid() {
  std::vector<IdealParameters> out;
  for (const auto& b : blockStructures({1, 2, 3}, {1, 2}))
    for (int s = 1; s <= 3; ++s)
      for (int t = b.blockCount(); t <= std::min(s * b.variableCount(), 6); ++t)
        if (IdealParameters::admissible(b, t, s)) out.push_back(IdealParameters::make(b, t, s));
  return out;
}

std::vector<IdealParameters> coverGrid(bool restrictToSmallT) {
  std::vector<IdealParameters> out;
  for (const auto& b : blockStructures({2, 3}, {1, 2, 3}))
    for (int s = 2; s <= 3; ++s)
      for (int t = 2; t <= s * b.variableCount() - 1; ++t) {
        if (!IdealParameters::admissible(b, t, s)) continue;
        auto p = IdealParameters::make(b, t, s);
        const auto c = dimensionCase(p);
        if (!c) continue;
        if (restrictToSmallT && *c == DimensionCase::Generic && t > s * b.blockCount()) continue;
        out.push_back(std::move(p));
      }
  return out;
}

std::vector<IdealParameters> assGrid() {
  std::vector<IdealParameters> out;
  for (int total = 1; total <= 5; ++total)
    for (int n = 1; n <= total; ++n)
      for (const auto& sizes : compositions(total, n)) {
        BlockStructure b(sizes);
        for (int s = 2; s <= 4; ++s)
          for (int r = 1; r <= s - 1; ++r) {
            const int t = s * total - r;
            if (IdealParameters::admissible(b, t, s)) out.push_back(IdealParameters::make(b, t, s));
          }
      }
  return out;
}

std::vector<IdealParameters> sortGrid(int maxVariables) {
  std::vector<IdealParameters> out;
  for (const auto& b : blockStructures({1, 2, 3}, {1, 2, 3})) {
    if (b.variableCount() > maxVariables) continue;
    for (int s = 1; s <= 3; ++s)
      for (int t = b.blockCount(); t <= s * b.variableCount(); ++t)
        if (IdealParameters::admissible(b, t, s)) out.push_back(IdealParameters::make(b, t, s));
  }
  return out;
}

std::vector<IdealParameters> graphGrid() {
  std::vector<IdealParameters> out;
  for (const auto& b : blockStructures({2}, {1, 2, 3}))
    for (int t = 3; t <= 2 * b.variableCount() - 1; ++t)
      if (IdealParameters::admissible(b, t, 2)) out.push_back(IdealParameters::make(b, t, 2));
  return out;
}

namespace {

using Check = std::function<void(GridRow&)>;

struct Task {
  IdealParameters params;
  std::string quantity;
  Check check;
};

std::string boolText(bool b) { return b ? "true" : "false"; }

std::string supportsText(const std::vector<PrimeSupport>& supports) {
  std::string out;
  for (const auto& f : supports) {
    out += '{';
    for (std::size_t i = 0; i < f.indices().size(); ++i) {
      if (i) out += ',';
      out += std::to_string(f.indices()[i] + 1);
    }
    out += '}';
  }
  return out;
}

void addRegularity(std::vector<Task>& tasks, const Limits& inner) {
  for (auto& p : regularityGrid())
    tasks.push_back({p, "regularity", [p, inner](GridRow& row) {
                       const int f = regularityFormula(p);
                       row.formula = std::to_string(f);
                       const int o = regularityOracle(buildGeneralized(p), inner);
                       row.oracle = std::to_string(o);
                       row.agree = f == o;
                     }});
}

void addCovers(std::vector<Task>& tasks, bool restricted, const Limits& inner) {
  for (auto& p : coverGrid(restricted)) {
    tasks.push_back({p, "dim", [p, inner](GridRow& row) {
                       const int f = dimFormula(p);
                       row.formula = std::to_string(f);
                       const int o = dimOracle(buildGeneralized(p), inner);
                       row.oracle = std::to_string(o);
                       row.agree = f == o;
                     }});
    tasks.push_back({p, "unmixed", [p, inner](GridRow& row) {
                       const bool f = unmixedPredicate(p);
                       row.formula = boolText(f);
                       const bool o = isUnmixed(buildGeneralized(p), inner);
                       row.oracle = boolText(o);
                       row.agree = f == o;
                     }});
  }
}

void addAss(std::vector<Task>& tasks, const Limits& inner) {
  for (auto& p : assGrid())
    tasks.push_back({p, "ass", [p, inner](GridRow& row) {
                       const auto f = assFormula(p);
                       row.formula = supportsText(f);
                       std::vector<PrimeSupport> o;
                       for (auto& a : assOracle(buildGeneralized(p), inner)) o.push_back(a.prime);
                       row.oracle = supportsText(o);
                       row.agree = f == o;
                     }});
}

void addSort(std::vector<Task>& tasks, int maxVariables) {
  for (auto& p : sortGrid(maxVariables))
    tasks.push_back({p, "sortable", [p](GridRow& row) {
                       row.formula = "true";
                       const bool o = isSortable(buildGeneralized(p).generators());
                       row.oracle = boolText(o);
                       row.agree = o;
                     }});
}

void addGraph(std::vector<Task>& tasks) {
  for (auto& p : graphGrid())
    tasks.push_back({p, "graph", [p](GridRow& row) {
                       const auto lstar = buildGeneralized(p);
                       const auto walks = generalizedGraphIdeal(buildStrongGraph(p.structure), p.t);
                       row.formula = std::to_string(lstar.size());
                       row.oracle = std::to_string(walks.size());
                       row.agree = lstar == walks;
                     }});
  // n = 3 mode matrix, recorded only
  for (const auto& b : blockStructures({3}, {1, 2}))
    for (int t = 3; t <= std::min(2 * b.variableCount() - 1, 6); ++t) {
      if (!IdealParameters::admissible(b, t, 2)) continue;
      const auto p = IdealParameters::make(b, t, 2);
      for (auto mode : {AdjacencyMode::AllDistinctBlocks, AdjacencyMode::ConsecutiveBlocks})
        for (bool ordered : {false, true})
          for (bool spanning : {true, false}) {
            std::string name = std::string("graph[") + modeName(mode) + (ordered ? ",ordered" : ",unordered") +
                               (spanning ? ",spanning" : ",any") + "]";
            tasks.push_back({p, name, [p, mode, ordered, spanning](GridRow& row) {
                               const auto lstar = buildGeneralized(p);
                               WalkOptions options;
                               options.ordered = ordered;
                               options.spanning = spanning;
                               const auto walks =
                                   generalizedGraphIdeal(buildStrongGraph(p.structure, mode), p.t, options);
                               row.formula = std::to_string(lstar.size());
                               row.oracle = std::to_string(walks.size());
                               row.agree = lstar == walks;
                             }});
          }
    }
}

}  // namespace

GridReport reportGrid(GridName grid, const Limits& limits) {
  Limits inner = limits;
  inner.threads = 1;
  std::vector<Task> tasks;
  if (grid == GridName::Small || grid == GridName::Full) {
    addRegularity(tasks, inner);
    addCovers(tasks, grid == GridName::Small, inner);
    addAss(tasks, inner);
    // the (3,3,3) end of the sort grid dominates; small stops at six variables
    addSort(tasks, grid == GridName::Small ? 6 : 9);
  }
  if (grid == GridName::Wide) addCovers(tasks, false, inner);
  if (grid == GridName::Graph || grid == GridName::Full) addGraph(tasks);

  GridReport report;
  report.rows.resize(tasks.size());
  parallelFor(tasks.size(), limits.threads, [&](std::size_t i) {
    auto& row = report.rows[i];
    const auto& task = tasks[i];
    row.blocks = task.params.structure.toString();
    row.t = task.params.t;
    row.s = task.params.s;
    row.quantity = task.quantity;
    const auto start = std::chrono::steady_clock::now();
    try {
      task.check(row);
    } catch (const Error& e) {
      row.agree = false;
      row.status = e.kind() == ErrorKind::Guard ? "guard" : "error";
      row.note = e.what();
    }
    row.runtimeMillis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  });
  return report;
}

}  // namespace veronese
