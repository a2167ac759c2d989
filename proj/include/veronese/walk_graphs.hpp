#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "veronese/monomial.hpp"

namespace veronese {

/// Which block pairs may be joined by an edge.
enum class AdjacencyMode {
  ConsecutiveBlocks,  // V_i -- V_{i+1} only
  AllDistinctBlocks,  // any two different blocks (complete n-partite)
};

/// Graph with loops on the variables of a block structure. Edges are stored
/// as (min, max) vertex pairs; a loop is (v, v). Intra-block edges other
/// than loops are rejected.
class LoopGraph {
 public:
  LoopGraph(BlockStructure structure, std::set<std::pair<int, int>> edges, AdjacencyMode mode);

  const BlockStructure& structure() const noexcept { return structure_; }
  const std::set<std::pair<int, int>>& edges() const noexcept { return edges_; }
  AdjacencyMode mode() const noexcept { return mode_; }
  int vertexCount() const noexcept { return structure_.variableCount(); }

  bool adjacent(int u, int v) const;
  bool hasLoop(int v) const { return adjacent(v, v); }
  std::size_t loopCount() const;
  std::size_t crossEdgeCount() const { return edges_.size() - loopCount(); }

  std::string toDot() const;

 private:
  BlockStructure structure_;
  std::set<std::pair<int, int>> edges_;
  AdjacencyMode mode_;
  std::vector<std::vector<char>> adjacency_;
};

/// K'_{m_1..m_n}: loops everywhere, complete between admissible blocks.
LoopGraph buildStrongGraph(const BlockStructure& structure,
                           AdjacencyMode mode = AdjacencyMode::AllDistinctBlocks);

struct WalkOptions {
  /// Vertex indices nondecreasing along the walk.
  bool ordered = false;
  /// The walk must visit every block.
  bool spanning = true;
  /// Visits per vertex; 2 keeps every exponent at most 2.
  int maxVisits = 2;
};

/// Vertex-multiplicity vectors of all walks with `length` edges, sorted and
/// deduplicated.
std::vector<ExponentVector> walkMonomials(const LoopGraph& graph, int length,
                                          const WalkOptions& options = {});

/// I_t(G), generated by the walks of length t - 1; parameter error for t < 3.
MonomialIdeal generalizedGraphIdeal(const LoopGraph& graph, int t,
                                    const WalkOptions& options = {});

/// One degree-2 generator per edge or loop.
MonomialIdeal edgeIdeal(const LoopGraph& graph);

const char* modeName(AdjacencyMode mode) noexcept;

}  // namespace veronese
