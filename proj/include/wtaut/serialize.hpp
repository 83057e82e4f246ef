#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wtaut/poly.hpp"
#include "wtaut/pullback.hpp"
#include "wtaut/semigroups.hpp"
#include "wtaut/tautring.hpp"
#include "wtaut/wcycles.hpp"

namespace wtaut {

using Json = nlohmann::json;

/// [{"coeff": "-1/2", "exps": {"psi": 1, "x1": 2}}, ...] in canonical term order.
Json poly_to_json(const MultiPoly& p);
/// Inverse of poly_to_json. Throws DataError on malformed input.
MultiPoly poly_from_json(const Json& j);

/// \lambda_{1}, \psi, \kappa_{0}, x_{1}, ...; coefficients as \frac{n}{d}.
std::string poly_to_latex(const MultiPoly& p);

/// {"genus", "gaps", "sequence_head", "partition_gr_gm1", "partition_hprime"}
Json semigroup_record(const NumericalSemigroup& h);
/// {"gaps", "partition", "codim", "class_pointed", "class_unpointed", "virtual", ...}
Json cycle_record(const CycleClass& c);
Json pullback_record(const PullbackClass& c);
Json hilbert_record(const HilbertReport& r);

/// degree,lower,upper,ambient,generators with a leading "# key=value" block.
std::string hilbert_csv(const HilbertReport& r);
std::string hilbert_latex(const HilbertReport& r);
/// One row per cycle: gaps, partition, codimension, pointed and unpointed class.
std::string cycle_table_latex(const std::vector<CycleClass>& cycles);

std::string csv_list(const std::vector<int>& v);

}  // namespace wtaut
