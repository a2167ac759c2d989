#include "veronese/serialize.hpp"

#include "veronese/errors.hpp"

namespace veronese {

Json toJson(const BlockStructure& structure) {
  Json out = Json::array();
  for (int m : structure.blockSizes()) out.push_back(m);
  return out;
}

Json toJson(const ExponentVector& v) {
  Json out = Json::array();
  for (Exponent e : v.entries()) out.push_back(e);
  return out;
}

Json toJson(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(toJson(g));
  return Json{{"blocks", toJson(ideal.structure())}, {"gens", std::move(gens)}};
}

Json toJson(const PrimeSupport& support) {
  Json indices = Json::array();
  Json names = Json::array();
  for (int k : support.indices()) {
    indices.push_back(k + 1);
    names.push_back(support.structure().variableName(k));
  }
  return Json{{"indices", std::move(indices)}, {"variables", std::move(names)}};
}

Json toJson(const VertexCover& cover, const BlockStructure& structure) {
  return toJson(PrimeSupport(structure, cover.indices));
}

Json toJson(const IdealParameters& params) {
  return Json{{"blocks", toJson(params.structure)}, {"t", params.t}, {"s", params.s}};
}

Json toJson(const BettiTable& table) {
  Json coarse = Json::array();
  for (const auto& [key, rank] : table.coarse())
    coarse.push_back(Json{{"i", key.first}, {"j", key.second}, {"rank", rank}});
  Json fine = Json::array();
  for (const auto& [key, rank] : table.fine) {
    Json a = Json::array();
    for (Exponent e : key.second) a.push_back(e);
    fine.push_back(Json{{"i", key.first}, {"multidegree", std::move(a)}, {"rank", rank}});
  }
  return Json{{"convention", table.convention == BettiTable::Convention::Ideal ? "ideal" : "quotient"},
              {"coarse", std::move(coarse)},
              {"fine", std::move(fine)}};
}

Json toJson(const GroebnerEvidence& evidence) {
  Json violations = Json::array();
  for (const auto& v : evidence.violations)
    violations.push_back(Json{{"degree", v.degree},
                              {"target", toJson(v.target)},
                              {"kind", v.kind},
                              {"detail", v.detail}});
  return Json{{"sortable", evidence.sortable},
              {"relationCount", evidence.relationCount},
              {"fibersChecked", evidence.fibersChecked},
              {"nontrivialFibers", evidence.nontrivialFibers},
              {"quadraticKernelRank", evidence.quadraticKernelRank},
              {"violations", std::move(violations)}};
}

BlockStructure blockStructureFromJson(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Parameter, "blocks must be an array of positive integers");
  std::vector<int> sizes;
  for (const auto& m : j) {
    if (!m.is_number_integer()) fail(ErrorKind::Parameter, "block sizes must be integers");
    sizes.push_back(m.get<int>());
  }
  return BlockStructure(std::move(sizes));
}

ExponentVector exponentVectorFromJson(const Json& j, const BlockStructure& structure) {
  if (!j.is_array()) fail(ErrorKind::Parameter, "monomial must be an array of exponents");
  std::vector<Exponent> entries;
  for (const auto& e : j) {
    if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long long>() >= 0))
      fail(ErrorKind::Parameter, "exponents must be nonnegative integers");
    entries.push_back(e.get<Exponent>());
  }
  return {structure, std::move(entries)};
}

MonomialIdeal idealFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j.contains("gens"))
    fail(ErrorKind::Parameter, "ideal JSON needs \"blocks\" and \"gens\"");
  const auto structure = blockStructureFromJson(j.at("blocks"));
  std::vector<ExponentVector> gens;
  for (const auto& g : j.at("gens")) gens.push_back(exponentVectorFromJson(g, structure));
  return minimalize(structure, std::move(gens));
}

}  // namespace veronese
