#pragma once

#include <json.hpp>

#include "grex/curve.hpp"
#include "grex/solver.hpp"
#include "grex/torsion.hpp"

namespace grex {

using nlohmann::json;

// Decimal strings throughout; moduli come from the enclosing context.

json to_json(const Fp2Element &a);
Fp2Element fp2_from_json(const json &j, const FieldRef &field);

/// {"x": ..., "y": ...} or "identity".
json to_json(const Point &pt);
/// Throws OffCurve for coordinates that miss the curve.
Point point_from_json(const json &j, const Curve &curve);
/// Same, without the curve-equation check.
Point raw_point_from_json(const json &j, const FieldRef &field);

json to_json(const TorsionContext &ctx);
TorsionContext context_from_json(const json &j);

json to_json(const TorsionBasis &basis);
TorsionBasis basis_from_json(const json &j, const TorsionContext &ctx);

json to_json(const GrepInstance<Point> &inst);
GrepInstance<Point> grep_instance_from_json(const json &j, const TorsionContext &ctx);

json to_json(const SimulInstance<Point> &inst);
SimulInstance<Point> simul_instance_from_json(const json &j, const TorsionContext &ctx);

/// Reads an integer given as a decimal string (or a plain JSON integer).
mpz_class integer_from_json(const json &j);

} // namespace grex
