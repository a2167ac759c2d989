#include "veronese/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "veronese/associated_primes.hpp"
#include "veronese/betti.hpp"
#include "veronese/builders.hpp"
#include "veronese/covers.hpp"
#include "veronese/errors.hpp"
#include "veronese/report.hpp"
#include "veronese/serialize.hpp"
#include "veronese/toric.hpp"
#include "veronese/walk_graphs.hpp"

namespace veronese {

namespace {

struct Options {
  std::string blocks;
  int t = 0;
  int s = 0;
  bool human = false;
  Limits limits = Limits::fromEnvironment();

  // per command
  bool byCompositions = false;
  bool oracle = false;
  bool witnesses = false;
  bool gbEvidence = false;
  int maxDegree = 3;
  std::string mode = "all";
  bool ordered = false;
  bool anyBlocks = false;
  bool dot = false;
  std::string grid = "small";
  std::string format = "csv";
  bool timing = false;
};

BlockStructure parseBlocks(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int m = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      sizes.push_back(m);
    } catch (const std::logic_error&) {
      fail(ErrorKind::Parameter, "--blocks expects a comma-separated list of positive integers");
    }
  }
  return BlockStructure(std::move(sizes));
}

void printHuman(const Json& doc, std::ostream& out) {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array() && !value.empty() && !value.front().is_primitive()) {
      out << key << ":\n";
      for (const auto& item : value) out << "  " << item.dump() << '\n';
    } else if (value.is_string()) {
      out << key << ": " << value.get<std::string>() << '\n';
    } else {
      out << key << ": " << value.dump() << '\n';
    }
  }
}

void emit(const Json& doc, const Options& o, std::ostream& out) {
  if (o.human)
    printHuman(doc, out);
  else
    out << doc.dump(2) << '\n';
}

Json prettyList(const MonomialIdeal& ideal) {
  Json out = Json::array();
  for (const auto& g : ideal.generators()) out.push_back(g.toString());
  return out;
}

IdealParameters paramsFrom(const Options& o) {
  return IdealParameters::make(parseBlocks(o.blocks), o.t, o.s);
}

Json coverList(const std::vector<VertexCover>& covers, const BlockStructure& structure) {
  Json out = Json::array();
  for (const auto& c : covers) out.push_back(toJson(c, structure));
  return out;
}

// ------------------------------------------------------------- commands

void cmdGen(const Options& o, std::ostream& out) {
  const auto params = paramsFrom(o);
  const auto ideal = o.byCompositions ? buildGeneralizedByCompositions(params) : buildGeneralized(params);
  Json doc{{"params", toJson(params)},
           {"method", o.byCompositions ? "compositions" : "direct"},
           {"count", ideal.size()},
           {"ideal", toJson(ideal)},
           {"pretty", prettyList(ideal)}};
  emit(doc, o, out);
}

void cmdInvariants(const Options& o, std::ostream& out) {
  const auto params = paramsFrom(o);
  const auto ideal = buildGeneralized(params);
  const auto covers = minimalVertexCovers(ideal, o.limits);
  const auto dimCase = dimensionCase(params);
  Json doc{{"params", toJson(params)}};
  doc["formulaRange"] = dimCase ? Json(*dimCase == DimensionCase::Generic ? "generic" : "near-top") : Json();
  doc["dimFormula"] = dimCase ? Json(dimFormula(params)) : Json();
  doc["dimOracle"] = ideal.structure().variableCount() - static_cast<int>(covers.front().size());
  doc["h"] = covers.front().size();
  doc["minimalCovers"] = coverList(covers, ideal.structure());
  doc["unmixedFormula"] = dimCase ? Json(unmixedPredicate(params)) : Json();
  doc["unmixedOracle"] = covers.front().size() == covers.back().size();
  doc["regFormula"] = regularityFormula(params);
  emit(doc, o, out);
}

void cmdAss(const Options& o, std::ostream& out) {
  const auto params = paramsFrom(o);
  const auto ideal = buildGeneralized(params);
  const int r = params.excess();
  const bool inRange = r >= 1 && r <= params.s - 1;
  Json doc{{"params", toJson(params)}, {"r", r}};

  std::optional<std::vector<PrimeSupport>> formula;
  if (inRange) formula = assFormula(params);
  if (formula) {
    Json list = Json::array();
    for (const auto& f : *formula) {
      Json entry = toJson(f);
      if (o.witnesses) {
        const auto w = witnessMonomial(params, f);
        entry["witness"] = toJson(w);
        entry["witnessPretty"] = w.toString();
        entry["colonIsPrime"] = colonIdeal(ideal, w) == f.toIdeal();
      }
      list.push_back(std::move(entry));
    }
    doc["formula"] = std::move(list);
  } else {
    doc["formula"] = Json();
    doc["note"] = "closed form stated only for r = sN - t in [1, s-1]";
  }
  if (!formula && !o.oracle) fail(ErrorKind::Range, "r = " + std::to_string(r) +
                                                        " outside [1, s-1]; pass --oracle to search");
  if (o.oracle) {
    const auto found = assOracle(ideal, o.limits);
    Json list = Json::array();
    std::vector<PrimeSupport> supports;
    for (const auto& a : found) {
      Json entry = toJson(a.prime);
      if (o.witnesses) {
        entry["witness"] = toJson(a.witness);
        entry["witnessPretty"] = a.witness.toString();
      }
      list.push_back(std::move(entry));
      supports.push_back(a.prime);
    }
    doc["oracle"] = std::move(list);
    doc["count"] = supports.size();
    if (formula) doc["agree"] = *formula == supports;
  } else {
    doc["count"] = formula->size();
  }
  emit(doc, o, out);
}

void cmdBetti(const Options& o, std::ostream& out) {
  const auto params = paramsFrom(o);
  const auto ideal = buildGeneralized(params);
  auto limits = o.limits;
  const auto table = bettiNumbers(ideal, limits);
  const auto quotient = table.toQuotient();
  Json doc{{"params", toJson(params)},
           {"ideal", toJson(table)},
           {"quotientCoarse", toJson(quotient)["coarse"]},
           {"regularityOracle", quotient.regularity()},
           {"regularityFormula", regularityFormula(params)}};
  emit(doc, o, out);
}

void cmdSortCheck(const Options& o, std::ostream& out) {
  const auto params = paramsFrom(o);
  const ToricPresentation presentation(buildGeneralized(params));
  Json doc{{"params", toJson(params)}, {"generators", presentation.size()}};
  doc["sortable"] = presentation.sortable();
  if (!presentation.sortable()) {
    doc["relationCount"] = Json();
    doc["fibersChecked"] = 0;
    doc["violations"] = Json::array({Json{{"kind", "unsortable"}}});
  } else if (o.gbEvidence) {
    const auto evidence = quadraticGBEvidence(presentation, o.maxDegree, o.limits);
    const Json summary = toJson(evidence);
    for (const auto& [key, value] : summary.items()) doc[key] = value;
    doc["maxDegree"] = o.maxDegree;
  } else {
    doc["relationCount"] = sortingRelationCount(presentation);
    doc["fibersChecked"] = 0;
    doc["violations"] = Json::array();
  }
  emit(doc, o, out);
}

void cmdGraph(const Options& o, std::ostream& out) {
  const auto structure = parseBlocks(o.blocks);
  if (o.mode != "all" && o.mode != "consecutive")
    fail(ErrorKind::Parameter, "--mode must be 'all' or 'consecutive'");
  const auto mode = o.mode == "all" ? AdjacencyMode::AllDistinctBlocks : AdjacencyMode::ConsecutiveBlocks;
  const auto graph = buildStrongGraph(structure, mode);
  if (o.dot) {
    out << graph.toDot();
    return;
  }
  WalkOptions walk;
  walk.ordered = o.ordered;
  walk.spanning = !o.anyBlocks;
  const auto ideal = o.t == 2 ? edgeIdeal(graph) : generalizedGraphIdeal(graph, o.t, walk);

  Json edges = Json::array();
  for (const auto& [u, v] : graph.edges())
    edges.push_back(Json::array({structure.variableName(u), structure.variableName(v)}));
  Json doc{{"blocks", toJson(structure)},
           {"t", o.t},
           {"mode", modeName(mode)},
           {"ordered", o.ordered},
           {"spanning", walk.spanning},
           {"edges", std::move(edges)},
           {"count", ideal.size()},
           {"generators", toJson(ideal)["gens"]},
           {"pretty", prettyList(ideal)}};
  if (IdealParameters::admissible(structure, o.t, 2))
    doc["equalsLStar"] = ideal == buildGeneralized(IdealParameters::make(structure, o.t, 2));
  else
    doc["equalsLStar"] = Json();
  emit(doc, o, out);
}

void cmdReport(const Options& o, std::ostream& out) {
  const auto report = reportGrid(gridFromString(o.grid), o.limits);
  if (o.format == "csv") {
    out << report.toCsv(o.timing);
    return;
  }
  if (o.format != "json") fail(ErrorKind::Parameter, "--format must be csv or json");
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row{{"blocks", r.blocks}, {"t", r.t},           {"s", r.s},
             {"quantity", r.quantity}, {"formula", r.formula}, {"oracle", r.oracle},
             {"agree", r.agree},   {"status", r.status}, {"note", r.note}};
    if (o.timing) row["runtimeMillis"] = static_cast<long long>(r.runtimeMillis);
    rows.push_back(std::move(row));
  }
  Json doc{{"grid", o.grid},
           {"rows", report.rows.size()},
           {"disagreements", report.disagreements()},
           {"table", std::move(rows)}};
  emit(doc, o, out);
}

int exitFor(ErrorKind kind) { return kind == ErrorKind::Guard ? kExitGuard : kExitRange; }

void printError(std::ostream& out, const char* kind, const std::string& message) {
  out << Json{{"error", Json{{"kind", kind}, {"message", message}}}}.dump(2) << '\n';
}

}  // namespace

int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Generalized Veronese bi-type ideals: constructions, invariants and oracles", "veronese"};
  app.require_subcommand(1);

  auto addGuards = [&](CLI::App* cmd) {
    cmd->add_option("--threads", o.limits.threads, "Worker threads for the oracles")->check(CLI::PositiveNumber);
    cmd->add_option("--max-vars", o.limits.maxVariables, "Cover enumeration variable cap");
    cmd->add_option("--max-candidates", o.limits.maxWitnessCandidates, "Associated-prime witness box cap");
    cmd->add_option("--max-box", o.limits.maxBettiBox, "Betti multidegree box cap");
    cmd->add_option("--max-steps", o.limits.maxNormalFormSteps, "Rewriting step cap");
    cmd->add_flag("--human", o.human, "Plain text instead of JSON");
  };
  auto addParams = [&](CLI::App* cmd) {
    cmd->add_option("--blocks", o.blocks, "Block sizes m_1,...,m_n")->required();
    cmd->add_option("--t", o.t, "Total degree t")->required();
    cmd->add_option("--s", o.s, "Exponent cap s")->required();
    addGuards(cmd);
  };

  auto* gen = app.add_subcommand("gen", "Minimal generators of L*_{t,s}");
  addParams(gen);
  gen->add_flag("--by-compositions", o.byCompositions, "Build as a sum of products over compositions");

  auto* inv = app.add_subcommand("invariants", "Vertex covers, dimension, unmixedness, regularity formula");
  addParams(inv);

  auto* ass = app.add_subcommand("ass", "Associated primes");
  addParams(ass);
  ass->add_flag("--oracle", o.oracle, "Also run the exhaustive colon-ideal search");
  ass->add_flag("--witnesses", o.witnesses, "Attach a witness monomial per prime");

  auto* betti = app.add_subcommand("betti", "Graded Betti numbers and regularity");
  addParams(betti);

  auto* sort = app.add_subcommand("sort-check", "Sortability and quadratic Groebner basis evidence");
  addParams(sort);
  sort->add_flag("--gb-evidence", o.gbEvidence, "Check toric fibers for connectivity and confluence");
  sort->add_option("--max-degree", o.maxDegree, "Largest fiber degree checked")->check(CLI::Range(2, 4));

  auto* graph = app.add_subcommand("graph", "Strong quasi-n-partite graph and its walk ideal");
  graph->add_option("--blocks", o.blocks, "Block sizes m_1,...,m_n")->required();
  graph->add_option("--t", o.t, "Ideal degree t (walk length t-1; t = 2 gives the edge ideal)")->required()
      ->check(CLI::Range(2, 64));
  graph->add_option("--mode", o.mode, "Adjacency: all | consecutive");
  graph->add_flag("--ordered", o.ordered, "Walk vertex indices must be nondecreasing");
  graph->add_flag("--any-blocks", o.anyBlocks, "Do not require walks to visit every block");
  graph->add_flag("--dot", o.dot, "Print the graph in DOT format instead");
  addGuards(graph);

  auto* report = app.add_subcommand("report", "Formula-vs-oracle grid report");
  report->add_option("--grid", o.grid, "small | graph | wide | full");
  report->add_option("--format", o.format, "csv | json");
  report->add_flag("--timing", o.timing, "Include per-row runtimes (output no longer reproducible)");
  addGuards(report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    printError(out, "usage", e.what());
    return kExitUsage;
  }

  try {
    if (*gen) cmdGen(o, out);
    else if (*inv) cmdInvariants(o, out);
    else if (*ass) cmdAss(o, out);
    else if (*betti) cmdBetti(o, out);
    else if (*sort) cmdSortCheck(o, out);
    else if (*graph) cmdGraph(o, out);
    else if (*report) cmdReport(o, out);
    return kExitOk;
  } catch (const Error& e) {
    err << kindName(e.kind()) << " error: " << e.what() << '\n';
    printError(out, kindName(e.kind()), e.what());
    return exitFor(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    printError(out, "internal", e.what());
    return kExitFailure;
  }
}

}  // namespace veronese
