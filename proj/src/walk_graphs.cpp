#include "veronese/walk_graphs.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

bool blocksAdmissible(const BlockStructure& s, AdjacencyMode mode, int u, int v) {
  const int bu = s.blockOf(u);
  const int bv = s.blockOf(v);
  if (bu == bv) return false;
  return mode == AdjacencyMode::AllDistinctBlocks || std::abs(bu - bv) == 1;
}

}  // namespace

const char* modeName(AdjacencyMode mode) noexcept {
  return mode == AdjacencyMode::ConsecutiveBlocks ? "consecutive" : "all";
}

LoopGraph::LoopGraph(BlockStructure structure, std::set<std::pair<int, int>> edges,
                     AdjacencyMode mode)
    : structure_(std::move(structure)), mode_(mode) {
  const int n = structure_.variableCount();
  adjacency_.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) fail(ErrorKind::Parameter, "edge endpoint out of range");
    if (u != v && !blocksAdmissible(structure_, mode_, u, v))
      fail(ErrorKind::Parameter, "edge " + structure_.variableName(u) + "--" +
                                     structure_.variableName(v) + " violates the block pattern");
    edges_.emplace(u, v);
    adjacency_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    adjacency_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
}

bool LoopGraph::adjacent(int u, int v) const {
  return adjacency_.at(static_cast<std::size_t>(u)).at(static_cast<std::size_t>(v)) != 0;
}

std::size_t LoopGraph::loopCount() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const auto& e) { return e.first == e.second; }));
}

std::string LoopGraph::toDot() const {
  std::string out = "graph K {\n";
  for (int v = 0; v < vertexCount(); ++v)
    out += "  " + structure_.variableName(v) + " [group=" + std::to_string(structure_.blockOf(v) + 1) + "];\n";
  for (const auto& [u, v] : edges_)
    out += "  " + structure_.variableName(u) + " -- " + structure_.variableName(v) + ";\n";
  return out + "}\n";
}

LoopGraph buildStrongGraph(const BlockStructure& structure, AdjacencyMode mode) {
  std::set<std::pair<int, int>> edges;
  const int n = structure.variableCount();
  for (int u = 0; u < n; ++u) {
    edges.emplace(u, u);
    for (int v = u + 1; v < n; ++v)
      if (blocksAdmissible(structure, mode, u, v)) edges.emplace(u, v);
  }
  return {structure, std::move(edges), mode};
}

std::vector<ExponentVector> walkMonomials(const LoopGraph& graph, int length,
                                          const WalkOptions& options) {
  if (length < 0) fail(ErrorKind::Parameter, "walk length must be nonnegative");
  const auto& structure = graph.structure();
  const int n = graph.vertexCount();
  // Frontier of (current vertex, visit counts); the walk history beyond these
  // does not influence which extensions are possible.
  using State = std::pair<int, std::vector<Exponent>>;
  std::set<State> frontier;
  for (int v = 0; v < n; ++v) {
    if (options.maxVisits < 1) break;
    std::vector<Exponent> counts(static_cast<std::size_t>(n), 0);
    counts[static_cast<std::size_t>(v)] = 1;
    frontier.emplace(v, std::move(counts));
  }
  for (int step = 0; step < length; ++step) {
    std::set<State> next;
    for (const auto& [at, counts] : frontier)
      for (int v = options.ordered ? at : 0; v < n; ++v) {
        if (!graph.adjacent(at, v)) continue;
        if (counts[static_cast<std::size_t>(v)] >= static_cast<Exponent>(options.maxVisits)) continue;
        auto extended = counts;
        ++extended[static_cast<std::size_t>(v)];
        next.emplace(v, std::move(extended));
      }
    frontier = std::move(next);
  }
  std::set<std::vector<Exponent>> degrees;
  for (const auto& [at, counts] : frontier) degrees.insert(counts);

  std::vector<ExponentVector> out;
  for (const auto& d : degrees) {
    ExponentVector v(structure, d);
    if (options.spanning) {
      bool everyBlock = true;
      for (int b = 0; b < structure.blockCount() && everyBlock; ++b) everyBlock = v.blockDegree(b) > 0;
      if (!everyBlock) continue;
    }
    out.push_back(std::move(v));
  }
  return out;
}

MonomialIdeal generalizedGraphIdeal(const LoopGraph& graph, int t, const WalkOptions& options) {
  if (t < 3) fail(ErrorKind::Parameter, "generalized graph ideals need t >= 3; use edgeIdeal for t = 2");
  return minimalize(graph.structure(), walkMonomials(graph, t - 1, options));
}

MonomialIdeal edgeIdeal(const LoopGraph& graph) {
  std::vector<ExponentVector> gens;
  for (const auto& [u, v] : graph.edges()) {
    gens.push_back(multiply(ExponentVector::unit(graph.structure(), u),
                            ExponentVector::unit(graph.structure(), v)));
  }
  return minimalize(graph.structure(), std::move(gens));
}

}  // namespace veronese
