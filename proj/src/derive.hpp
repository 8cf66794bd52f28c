#ifndef PERMTRI_DERIVE_HPP
#define PERMTRI_DERIVE_HPP

#include <map>
#include <utility>

#include "symbolic.hpp"

namespace permtri::symbolic {

/// Expands the cross-difference of the fractional map's numerators and
/// denominators under alpha = A + iB, beta = C + iD, clears the cubed
/// denominators, reduces i^2 -> i + k and divides exactly by x + y.
/// The result is the (x,y)-coefficient table of the curve polynomial
/// L(x,y): nine entries, free of i.
std::map<std::pair<unsigned, unsigned>, Poly> derive_curve();

/// The curve polynomial itself, reassembled from derive_curve. Memoized.
const Poly& curve_polynomial();

/// The nine reference coefficient polynomials, keyed by (j, l).
const std::map<std::pair<unsigned, unsigned>, Poly>& reference_gammas();

} // namespace permtri::symbolic

#endif
