#pragma once

#include <cstdint>

#include "walsh/series.hpp"

namespace walsh {

/// Homogeneous matching polynomial of the path on n vertices, in y (matched
/// edges) and z (unmatched edges). Rejects n == 0: U_0 = 1/z is not a
/// polynomial, use shifted_path_matching() where that convention is needed.
IndexSeries path_matching(std::uint32_t n);

/// z * U_k(y, z), defined for every k >= 0 (equal to 1 at k == 0). This is
/// the Laurent-free stand-in for the U_0 = 1/z convention.
IndexSeries shifted_path_matching(std::uint32_t k);

/// Homogeneous matching polynomial T_n(y, z) of the n-cycle (n >= 1), with
/// T_1 = z and T_2 = 2yz + z^2 as the degenerate cases.
IndexSeries cycle_matching(std::uint32_t n);

/// Evaluates a polynomial in y, z at y -> first, z -> second.
IndexSeries evaluate_yz(const IndexSeries& poly, const IndexSeries& first, const IndexSeries& second);

/// Expands 1/((1 - xz - x^2 yz) z) and (xz + 2x^2 yz)/(1 - xz - x^2 yz) as
/// power series in x up to x^max_n and compares each coefficient with the
/// recurrence-built U_n, T_n. The x^0 path coefficient is checked against
/// the U_0 = 1/z convention through z * U_0 = 1.
bool verify_matching_gf(std::uint32_t max_n);

}  // namespace walsh
