#pragma once

#include "cohiggs/bfield.hpp"
#include "cohiggs/bundle.hpp"
#include "cohiggs/cohomology.hpp"
#include "cohiggs/nahm.hpp"
#include "cohiggs/spectral.hpp"
#include "cohiggs/stability.hpp"

#include <json.hpp>

#include <filesystem>
#include <vector>

namespace cohiggs {

using Json = nlohmann::json;

// Coefficients ascending in the power of z, each a Gaussian-rational string.
Json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

// {"degrees": [...], "phi": [[coeffs, ...], ...]} with phi row-major.
Json bundle_to_json(const CoHiggsBundleP1& b);
CoHiggsBundleP1 bundle_from_json(const Json& j);

// {"k": k, "a": [coeffs of a_1, ..., coeffs of a_k]}.
Json curve_to_json(const SpectralCurve& s);
SpectralCurve curve_from_json(const Json& j);

Json validation_to_json(const ValidationReport& r);
Json hypercohomology_to_json(const HypercohomologyReport& r, const TheoremCheck& check);
Json stability_to_json(const StabilityVerdict& v, const Rational& mu);

// {"vars": 1|2, "f": [term...], "f2": [term...]} where each term is
// {"monomial": [e_z1, e_z2, e_zb1, e_zb2], "coeff": "..."}.
Json theta_to_json(const DolbeaultB& theta);
DolbeaultB theta_from_json(const Json& j);

// {"k": n, "t": t, "T1": [[re, im] x n^2 row-major], "T2": ..., "T3": ...}.
Json nahm_to_json(const NahmState& s);
NahmState nahm_from_json(const Json& j);

// Loads and saves with structural validation; malformed input raises
// ParseError (position 0 for structural problems, the in-string byte for bad
// coefficient literals).
Json load_json(const std::filesystem::path& path);

// Writes a curated set of ready-to-run inputs and returns their paths.
std::vector<std::filesystem::path> write_demo_fixtures(const std::filesystem::path& dir);

}  // namespace cohiggs
