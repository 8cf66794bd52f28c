#ifndef PERMTRI_CURVE_HPP
#define PERMTRI_CURVE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "classifier.hpp"

namespace permtri {

/// The nine coefficients of L(x,y) = sum gamma[j][l] x^j y^l, 0 <= j,l <= 2,
/// as elements of GF(q). Symmetric: gamma[j][l] == gamma[l][j].
struct CurveCoeffs {
    FqElem g[3][3] = {};

    FqElem at(int j, int l) const { return g[j][l]; }
};

/// Evaluates the closed-form coefficient polynomials in A, B, C, D and k.
CurveCoeffs gamma_coeffs(const ExtField& F, const CaseTuple& t);

/// |{(x,y) in GF(q)^2 : L(x,y) = 0, x != y}| by direct scan.
std::uint64_t count_points_off_diagonal(const BaseField& F, const CurveCoeffs& coeffs);

enum class SplitType {
    four_lines,                     // splits into four lines defined over GF(q)
    two_conics_swapped,             // splits into conics carrying GF(q)-rational structure
    cubic_has_rational_component,   // deg-3 case (gamma_22 = 0, B != D)
    degenerate_conic_pair,          // deg-2 conic that splits into rational lines
    not_split_nonrational,          // all components are non-rational: one of cases 1..5
    has_rational_component,         // default rational verdict
};

const char* to_string(SplitType t);

struct SplitReport {
    SplitType type = SplitType::has_rational_component;
    std::optional<CaseParams> witness;  // present iff type == not_split_nonrational
};

/// Decides whether the curve splits into absolutely irreducible components
/// none of which is defined over GF(q). Positive verdicts carry the matching
/// family witness; negative verdicts are refined by the detected shape.
SplitReport split_analysis(const ExtField& F, const CaseTuple& t);

/// {"split_type": ..., "case_id": ..., "witness_params": ...}
std::string to_json(const SplitReport& report);

} // namespace permtri

#endif
