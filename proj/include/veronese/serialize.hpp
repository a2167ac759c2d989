#pragma once

// JSON forms: monomials as integer arrays (plus a pretty string), ideals as
// {"blocks": [...], "gens": [[...], ...]}, supports as 1-based index lists.

#include "json.hpp"
#include "veronese/betti.hpp"
#include "veronese/builders.hpp"
#include "veronese/covers.hpp"
#include "veronese/monomial.hpp"
#include "veronese/toric.hpp"

namespace veronese {

using Json = nlohmann::ordered_json;

Json toJson(const BlockStructure& structure);
Json toJson(const ExponentVector& v);
Json toJson(const MonomialIdeal& ideal);
Json toJson(const PrimeSupport& support);
Json toJson(const VertexCover& cover, const BlockStructure& structure);
Json toJson(const IdealParameters& params);
Json toJson(const BettiTable& table);
Json toJson(const GroebnerEvidence& evidence);

BlockStructure blockStructureFromJson(const Json& j);
ExponentVector exponentVectorFromJson(const Json& j, const BlockStructure& structure);
MonomialIdeal idealFromJson(const Json& j);

}  // namespace veronese
