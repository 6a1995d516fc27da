#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/laurent.hpp"
#include "qwalk/lattice.hpp"

#include "json.hpp"

#include <string>

namespace qwalk {

/// Insertion-ordered JSON so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// Scalars serialize as [re, im]: strings "num/den" on the exact backend,
/// plain numbers on the float backend. Readers also accept a bare string or
/// number for real values.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {"d", "backend", "entries": [{"x": [...], "amp": [[re,im], ...]}]},
/// entries in lexicographic point order.
Json state_to_json(const FiniteState& s);
FiniteState state_from_json(const Json& j);

/// {"d", "entries": [{"x": [...], "value": "num/den" | number}]}.
Json measure_to_json(const Measure& m);
Measure measure_from_json(const Json& j);

/// {"d", "kind", "entries": [[[re,im], ...], ...]}.
Json coin_to_json(const Coin& c);
Coin coin_from_json(const Json& j, double tol = 1e-12);

/// {"d", "weights": [{"u": [...], "w": [re,im] | "num/den"}]}.
Json weights_to_json(const WeightSequence& w);
WeightSequence weights_from_json(const Json& j);

/// {"d", "terms": [{"exp": [...], "coeff": [re,im]}]}, lexicographic order.
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/// Parses the file at `path`; throws std::runtime_error on I/O or syntax
/// errors with the path in the message.
Json load_json_file(const std::string& path);

}  // namespace qwalk
