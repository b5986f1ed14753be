#pragma once

#include <string>

#include <json.hpp>

#include "gca/algebra.hpp"
#include "gca/coadjoint.hpp"
#include "gca/circle_group.hpp"
#include "gca/cocycle.hpp"
#include "gca/kac.hpp"
#include "gca/vector_fields.hpp"
#include "gca/verma.hpp"
#include "gca/weight_poly.hpp"

namespace gca {

// All reports use ordered JSON so that identical requests render to
// identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const TrigPoly& p);
TrigPoly trig_from_json(const Json& j);

Json to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const Json& j);

Json to_json(const DensityVector& gamma);
DensityVector density_from_json(const Json& j);

Json to_json(const CurrentElement& x);
CurrentElement current_from_json(const Json& j);

GroupElement group_from_json(const Json& j, std::size_t check_grid = 1024);

// {level, basis: [...], entries: [[poly strings]]}
Json gram_to_json(int level, const std::vector<std::vector<WeightPolynomial>>& entries);
Json gram_to_json(int level, const RationalMatrix& entries, const WeightPoint& point);

std::string gram_to_csv(const RationalMatrix& entries);

// "h=5,mu=7,rho1=1,rho2=1/2,alpha=2,beta=3"; missing symbols default to 0.
WeightPoint parse_weights(const std::string& spec);
Json weights_to_json(const WeightPoint& w);

Json to_json(const KacReport& report);
Json to_json(const KacPrediction& prediction);
Json to_json(const CocycleReport& report);
Json to_json(const VfReport& report);
Json to_json(const IsotropyReport& report);
Json to_json(const LinearizeReport& report);

Json to_json(const GridFunction& g);
std::string grid_to_csv(const GridFunction& g);
Json to_json(const GridDensity& g);

}  // namespace gca
