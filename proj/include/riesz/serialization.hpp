#ifndef RIESZ_SERIALIZATION_HPP
#define RIESZ_SERIALIZATION_HPP

#include "json.hpp"

#include "riesz/finite_capacity.hpp"
#include "riesz/shape_search.hpp"
#include "riesz/triangle.hpp"

namespace riesz {

/// {energy, capacity, p, measures[{weights, support, ...}], unique,
///  family_dimension, rank_ambiguous}
nlohmann::json to_json(const CapacityResult& result);
nlohmann::json to_json(const TriangleCapacity& result, const TriangleShape& shape, double p);
nlohmann::json to_json(const SearchResult& result, const SearchProblem& problem);

}  // namespace riesz

#endif  // RIESZ_SERIALIZATION_HPP
