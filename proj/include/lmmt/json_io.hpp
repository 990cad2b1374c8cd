#pragma once

#include "lmmt/exterior.hpp"
#include "lmmt/lie_algebra.hpp"

#include <json.hpp>

namespace lmmt {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);

/// {"n": 8, "degree": 4, "terms": {"1,2,3,4": "1", ...}}
Json form_to_json(const KForm& f);
KForm form_from_json(const Json& j);

/// {"dim": n, "brackets": [{"i": 1, "j": 2, "c": {"3": "-1"}}], "field": {"sqrt": 1}}
/// Indices are 1-based; "c" lists the components of [X_i, X_j].
Json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);

}  // namespace lmmt
