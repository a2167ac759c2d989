#pragma once

#include <functional>
#include <string>
#include <vector>

#include "veronese/builders.hpp"
#include "veronese/limits.hpp"

namespace veronese {

/// One formula-vs-oracle comparison.
struct GridRow {
  std::string blocks;  // "2,2,3"
  int t = 0;
  int s = 0;
  std::string quantity;
  std::string formula;
  std::string oracle;
  bool agree = false;
  std::string status = "ok";  // ok | guard | error
  std::string note;
  double runtimeMillis = 0;
};

struct GridReport {
  std::vector<GridRow> rows;

  std::size_t disagreements() const;
  std::size_t disagreements(const std::string& quantity) const;
  /// CSV with a header line; the runtime column only when withTiming.
  std::string toCsv(bool withTiming = false) const;
};

enum class GridName {
  Small,  // verified grids for regularity, dim, unmixed, Ass, sortability
  Graph,  // walk-graph identification, including the n = 3 mode matrix
  Wide,   // dim / unmixed on the full generic range 2 <= t <= sN - s
  Full,   // all of the above
};

GridName gridFromString(const std::string& name);

/// Enumerators for the parameter grids (admissible points only).
std::vector<BlockStructure> blockStructures(const std::vector<int>& blockCounts,
                                            const std::vector<int>& sizes);
std::vector<IdealParameters> regularityGrid();
std::vector<IdealParameters> coverGrid(bool restrictToSmallT);
std::vector<IdealParameters> assGrid();
std::vector<IdealParameters> sortGrid(int maxVariables = 9);
std::vector<IdealParameters> graphGrid();

/// Never throws on disagreement or guard trips; both are recorded per row.
/// Rows are computed in parallel (limits.threads) and kept in grid order.
GridReport reportGrid(GridName grid, const Limits& limits = {});

}  // namespace veronese
