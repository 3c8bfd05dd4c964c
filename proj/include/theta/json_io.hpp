#pragma once

// JSON forms of the public types. Rationals are "num/den" strings; integers
// are JSON numbers inside the 53-bit safe range and strings outside it.
// Every from_json reader throws DomainError on a schema violation.

#include <json.hpp>

#include "theta/chains.hpp"
#include "theta/hn.hpp"
#include "theta/laurent.hpp"
#include "theta/modular_graph.hpp"
#include "theta/strata.hpp"
#include "theta/transfer.hpp"

namespace theta::io {

using Json = nlohmann::json;

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json integer_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json to_json(const DirectedModularGraph& g);
DirectedModularGraph graph_from_json(const Json& j);

Json to_json(const StratumLabel& l);
StratumLabel label_from_json(const Json& j);

Json to_json(const WeightVector& w);
WeightVector weight_vector_from_json(const Json& j);

Json to_json(const CenterWeights& c);
Json to_json(const AdmissibleResult& r);

Json to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const Json& j);

Json to_json(const SplittingType& t);
SplittingType splitting_type_from_json(const Json& j);

Json to_json(const WeightedFiltration& f);
Json to_json(const NuValue& v);

Json to_json(const std::optional<BiWeight>& w);
Json to_json(const ConsistencyReport& r);

}  // namespace theta::io
