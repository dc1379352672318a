#pragma once

#include <json.hpp>

#include "igr/complexes.hpp"
#include "igr/ext.hpp"
#include "igr/fullness.hpp"
#include "igr/invariants.hpp"
#include "igr/oddcoh.hpp"

namespace igr {

using Json = nlohmann::ordered_json;

Json to_json(const GLWeight& w);
Json to_json(const SpWeight& w);
Json to_json(const TwistedBundle& b);
Json to_json(const Decomposition& d);
Json to_json(const GradedDim& g);
Json to_json(const CohomologyResult& r);
Json to_json(const E1Page& page);
Json to_json(const CohomologyVerdict& v);
Json to_json(const ExtResult& r);
Json to_json(const PairResult& p);
Json to_json(const CheckReport& r);
Json to_json(const FormalComplex& c);
Json to_json(const TableVerdict& v);
Json to_json(const Monomial& m);
Json to_json(const StepRecord& r);
Json to_json(const std::vector<StepRecord>& log);
Json to_json(const ReplayReport& r);
Json to_json(const SpaceInvariants& s);

}  // namespace igr
