#pragma once

#include <json.hpp>

#include "baxter/checker.hpp"
#include "baxter/matrix.hpp"
#include "baxter/monoid.hpp"
#include "baxter/oracle.hpp"
#include "baxter/representation.hpp"
#include "baxter/trees.hpp"

namespace baxter {

using Json = nlohmann::json;

/// {"n", "representative", "ev", "lpi": [[lo, hi, l]...], "rpi": [[hi, lo, r]...]}.
Json to_json(BaxtElement const& e);
/// Inverse of to_json; throws PreconditionError if the stored key does not
/// match the representative.
BaxtElement element_from_json(Json const& j);

/// Nested {"label", "left", "right"} with null for a missing child.
Json to_json(BST const& t);

/// {"dim", "entries"} with the string "-inf" for the zero element.
Json to_json(UTMatrix<Tropical> const& m);
UTMatrix<Tropical> matrix_from_json(Json const& j);

Json to_json(PairTuple const& t);
Json to_json(CheckReport const& r);
Json to_json(Substitution const& s);

}  // namespace baxter
