#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "veronese/associated_primes.hpp"
#include "veronese/betti.hpp"
#include "veronese/builders.hpp"
#include "veronese/cli.hpp"
#include "veronese/covers.hpp"
#include "veronese/errors.hpp"
#include "veronese/toric.hpp"
#include "veronese/walk_graphs.hpp"

namespace py = pybind11;
using namespace veronese;

namespace {

using Vec = std::vector<Exponent>;

Vec entriesOf(const ExponentVector& v) { return Vec(v.entries().begin(), v.entries().end()); }

std::vector<Vec> gensOf(const MonomialIdeal& i) {
  std::vector<Vec> out;
  for (const auto& g : i.generators()) out.push_back(entriesOf(g));
  return out;
}

MonomialIdeal idealOf(const std::vector<int>& blocks, const std::vector<Vec>& gens) {
  BlockStructure b(blocks);
  std::vector<ExponentVector> v;
  for (const auto& g : gens) v.emplace_back(b, g);
  return minimalize(b, std::move(v));
}

IdealParameters paramsOf(const std::vector<int>& blocks, int t, int s) {
  return IdealParameters::make(BlockStructure(blocks), t, s);
}

std::vector<std::vector<int>> supportsOf(const std::vector<PrimeSupport>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& p : v) out.push_back(p.indices());
  return out;
}

Limits limitsWith(int threads) {
  auto l = Limits::fromEnvironment();
  l.threads = threads;
  return l;
}

}  // namespace

PYBIND11_MODULE(_veronese, m) {
  m.doc() = "Generalized Veronese bi-type ideals and their invariants";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  static py::exception<Error> parameter(m, "ParameterError", base.ptr());
  static py::exception<Error> guard(m, "GuardError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Guard) guard(e.what());
      else if (e.kind() == ErrorKind::Parameter || e.kind() == ErrorKind::Range) parameter(e.what());
      else base(e.what());
    }
  });

  // Ideals cross the boundary as lists of exponent lists in canonical order.
  m.def("generators", [](const std::vector<int>& blocks, int t, int s, bool byCompositions) {
        const auto p = paramsOf(blocks, t, s);
        return gensOf(byCompositions ? buildGeneralizedByCompositions(p) : buildGeneralized(p));
      },
      py::arg("blocks"), py::arg("t"), py::arg("s"), py::arg("by_compositions") = false);

  m.def("minimalize", [](const std::vector<int>& blocks, const std::vector<Vec>& gens) {
        return gensOf(idealOf(blocks, gens));
      },
      py::arg("blocks"), py::arg("gens"));

  m.def("colon", [](const std::vector<int>& blocks, const std::vector<Vec>& gens, const Vec& f) {
        return gensOf(colonIdeal(idealOf(blocks, gens), ExponentVector(BlockStructure(blocks), f)));
      },
      py::arg("blocks"), py::arg("gens"), py::arg("f"));

  m.def("minimal_vertex_covers", [](const std::vector<int>& blocks, const std::vector<Vec>& gens) {
        std::vector<std::vector<int>> out;
        for (const auto& c : minimalVertexCovers(idealOf(blocks, gens), Limits::fromEnvironment()))
          out.push_back(c.indices);
        return out;
      },
      py::arg("blocks"), py::arg("gens"));

  m.def("dim_formula", [](const std::vector<int>& b, int t, int s) { return dimFormula(paramsOf(b, t, s)); },
        py::arg("blocks"), py::arg("t"), py::arg("s"));
  m.def("unmixed_predicate", [](const std::vector<int>& b, int t, int s) { return unmixedPredicate(paramsOf(b, t, s)); },
        py::arg("blocks"), py::arg("t"), py::arg("s"));
  m.def("dim_oracle", [](const std::vector<int>& blocks, const std::vector<Vec>& gens) {
        return dimOracle(idealOf(blocks, gens), Limits::fromEnvironment());
      },
      py::arg("blocks"), py::arg("gens"));
  m.def("is_unmixed", [](const std::vector<int>& blocks, const std::vector<Vec>& gens) {
        return isUnmixed(idealOf(blocks, gens), Limits::fromEnvironment());
      },
      py::arg("blocks"), py::arg("gens"));

  m.def("ass_formula", [](const std::vector<int>& b, int t, int s) { return supportsOf(assFormula(paramsOf(b, t, s))); },
        py::arg("blocks"), py::arg("t"), py::arg("s"));
  m.def("ass_oracle", [](const std::vector<int>& blocks, const std::vector<Vec>& gens, int threads) {
        py::list out;
        for (const auto& a : assOracle(idealOf(blocks, gens), limitsWith(threads)))
          out.append(py::make_tuple(a.prime.indices(), entriesOf(a.witness)));
        return out;
      },
      py::arg("blocks"), py::arg("gens"), py::arg("threads") = 1,
      "List of (support, witness) pairs; support indices are 0-based.");
  m.def("witness_monomial", [](const std::vector<int>& b, int t, int s, const std::vector<int>& support) {
        return entriesOf(witnessMonomial(paramsOf(b, t, s), PrimeSupport(BlockStructure(b), support)));
      },
      py::arg("blocks"), py::arg("t"), py::arg("s"), py::arg("support"));

  m.def("betti_numbers", [](const std::vector<int>& blocks, const std::vector<Vec>& gens, bool quotient, int threads) {
        auto table = bettiNumbers(idealOf(blocks, gens), limitsWith(threads));
        if (quotient) table = table.toQuotient();
        py::dict out;
        for (const auto& [key, rank] : table.coarse()) out[py::make_tuple(key.first, key.second)] = rank;
        return out;
      },
      py::arg("blocks"), py::arg("gens"), py::arg("quotient") = true, py::arg("threads") = 1,
      "Coarse graded Betti numbers {(i, j): rank}.");
  m.def("regularity", [](const std::vector<int>& blocks, const std::vector<Vec>& gens) {
        return regularityOracle(idealOf(blocks, gens), Limits::fromEnvironment());
      },
      py::arg("blocks"), py::arg("gens"), "reg(T/I).");

  m.def("sort_pair", [](const std::vector<int>& blocks, const Vec& u, const Vec& v) {
        BlockStructure b(blocks);
        const auto s = sortPair(ExponentVector(b, u), ExponentVector(b, v));
        return py::make_tuple(entriesOf(s.first), entriesOf(s.second));
      },
      py::arg("blocks"), py::arg("u"), py::arg("v"));
  m.def("is_sortable", [](const std::vector<int>& blocks, const std::vector<Vec>& gens) {
        BlockStructure b(blocks);
        std::vector<ExponentVector> v;
        for (const auto& g : gens) v.emplace_back(b, g);
        return isSortable(v);
      },
      py::arg("blocks"), py::arg("gens"));
  m.def("gb_evidence", [](const std::vector<int>& b, int t, int s, int maxDegree) {
        const auto e = quadraticGBEvidence(ToricPresentation(buildGeneralized(paramsOf(b, t, s))), maxDegree,
                                           Limits::fromEnvironment());
        py::dict out;
        out["passed"] = e.passed();
        out["relation_count"] = e.relationCount;
        out["fibers_checked"] = e.fibersChecked;
        out["violations"] = e.violations.size();
        return out;
      },
      py::arg("blocks"), py::arg("t"), py::arg("s"), py::arg("max_degree") = 3);

  m.def("walk_ideal", [](const std::vector<int>& blocks, int t, const std::string& mode, bool ordered, bool spanning) {
        if (mode != "all" && mode != "consecutive") throw py::value_error("mode must be 'all' or 'consecutive'");
        const auto g = buildStrongGraph(BlockStructure(blocks), mode == "all" ? AdjacencyMode::AllDistinctBlocks
                                                                              : AdjacencyMode::ConsecutiveBlocks);
        WalkOptions o;
        o.ordered = ordered;
        o.spanning = spanning;
        return gensOf(t == 2 ? edgeIdeal(g) : generalizedGraphIdeal(g, t, o));
      },
      py::arg("blocks"), py::arg("t"), py::arg("mode") = "all", py::arg("ordered") = false,
      py::arg("spanning") = true, "I_t of the strong graph; t = 2 gives the edge ideal.");

  m.def("run", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = runCommand(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one CLI command in-process; returns (exit code, stdout, stderr).");
}
