#pragma once

#include "nilvar/classify.hpp"
#include "nilvar/modmatrix.hpp"
#include "nilvar/richmond.hpp"

#include <json.hpp>

namespace nilvar {

using json = nlohmann::ordered_json;

/// {n, a, b, A, B} with entries as "p/q" strings.
json module_to_json(const MatrixPairModule& m);
/// Accepts "p/q" or "p" entries; throws std::invalid_argument on bad shape.
MatrixPairModule module_from_json(const json& j);

json partition_to_json(const Partition& p);

json component_to_json(const ComponentDescriptor& c);

/// Header with the requested and normalized bounds, then the components.
json classification_to_json(const Classification& c);

/// {a, b, m_s, m_x: {"i": mult}, m_y: {"j": mult}, m_xy: [{i, j, mult}]}.
json index_module_to_json(const BiserialIndexModule& l);

} // namespace nilvar
