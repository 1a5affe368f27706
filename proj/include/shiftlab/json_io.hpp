#pragma once

#include <string>

#include "json.hpp"
#include "shiftlab/alcove.hpp"
#include "shiftlab/characters.hpp"
#include "shiftlab/liealg.hpp"
#include "shiftlab/qseries.hpp"
#include "shiftlab/shift.hpp"

namespace shiftlab {

using Json = nlohmann::ordered_json;

// Rationals are written as strings "n" or "n/d"; weights as arrays of those in simple-root coordinates.
Json to_json(const WeightVec& v);
WeightVec weight_from_json(const Json& j);

Json to_json(const RootSystem& rs, bool with_roots = true);
Json to_json(const ShiftCase& c);

// {"base","grid","order","top","coeffs"}; order is null for the zero series.
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

// {case, counts, failures[], weak[], strong[], alcove[], rows[]}
Json to_json(const ShiftReport& r);
// lambda, weak, strong, alcove, w0_shift
std::string report_csv(const ShiftReport& r);

Json to_json(const Alcove& a, const AffineWeylElt& w);
Json to_json(const AffineWeight& w);

}  // namespace shiftlab
