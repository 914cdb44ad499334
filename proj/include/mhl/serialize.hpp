#pragma once

#include "generate.hpp"

#include "json.hpp"

namespace mhl::io {

using json = nlohmann::json;

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);
// Throws Error(Parse) with the byte offset on malformed input.
json parse_text(const std::string& text);

json to_json(const Rational& x);
json to_json(const Gaussian& z);
json to_json(const RMatrix& m);
json to_json(const GMatrix& m);
json to_json(const RFiltration& f);
json to_json(const GFiltration& f);
json to_json(const MixedHodgeData& h);
json to_json(const PerverseQuiver1D& q);
json to_json(const PerverseQuiver2D& q);
json to_json(const VModel& m);
json to_json(const FilteredComplex& c);
json to_json(const NilpotentOrbitData& d);
json to_json(const MixedNilpotentOrbitData& d);
json to_json(const PolarizedCandidate& p);

// Object member access; Schema error naming the path when absent.
const json& field(const json& j, const std::string& key, const std::string& path);
const json* optional_field(const json& j, const std::string& key);

// Parsers throw Error(Schema) naming the offending path, or DimensionMismatch.
Rational rational_from(const json& j, const std::string& path);
Gaussian gaussian_from(const json& j, const std::string& path);
// cols is needed when the matrix has no rows; rows/cols are checked when given.
RMatrix rmatrix_from(const json& j, const std::string& path, std::optional<std::size_t> rows = {}, std::optional<std::size_t> cols = {});
GMatrix gmatrix_from(const json& j, const std::string& path, std::optional<std::size_t> rows = {}, std::optional<std::size_t> cols = {});
RFiltration rfiltration_from(const json& j, const std::string& path);
GFiltration gfiltration_from(const json& j, const std::string& path);
MixedHodgeData mhs_from(const json& j, const std::string& path);
PerverseQuiver1D quiver1d_from(const json& j, const std::string& path);
PerverseQuiver2D quiver2d_from(const json& j, const std::string& path);
VModel vmodel_from(const json& j, const std::string& path);
FilteredComplex complex_from(const json& j, const std::string& path);
NilpotentOrbitData orbit_from(const json& j, const std::string& path);
MixedNilpotentOrbitData mixed_orbit_from(const json& j, const std::string& path);
PolarizedCandidate polarized_from(const json& j, const std::string& path);

} // namespace mhl::io
