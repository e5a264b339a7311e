#pragma once

#include <cstdint>

#include "walsh/pole_sign.hpp"
#include "walsh/series.hpp"

namespace walsh {

/// Closed-form Walsh index series of the core graphs. Every constructor is a
/// pure function of its arguments.

// Walsh series of K5: 7 terms over the cycle types of S_5, prefactor 1/120.
IndexSeries walsh_K5();

// W^+ / W^- of the K5\e network, derived from walsh_K5() with the
// biconnected-to-network formulas.
IndexSeries walsh_K5e(PoleSign sign);

// The M graph (two K5's sharing an edge) and M* (shared edge removed).
IndexSeries walsh_M();
IndexSeries walsh_Mstar();

// Dihedral Walsh series of the n-cycle, n >= 3.
IndexSeries walsh_cycle(std::uint32_t n);

// Extended series of matched paths (n >= 1) and matched cycles (n >= 3) in
// a, b, c (matched edges) and beta, gamma (unmatched edges).
IndexSeries walsh_matched_path(std::uint32_t n);
IndexSeries walsh_matched_cycle(std::uint32_t n);

// Walsh series of K_n as a sum over cycle types, 1 <= n <= 12.
IndexSeries walsh_complete(std::uint32_t n);

struct BiconnectedNetworks {
  IndexSeries plus01;   // W^+ of B_{0,1}
  IndexSeries minus01;  // W^- of B_{0,1}
  IndexSeries plus;     // W^+ of N_B
  IndexSeries minus;    // W^- of N_B
};

/// Networks obtained from a 2-connected class B (containing K2) by removing
/// an edge and naming its ends 0, 1:
///   W+_{B01} = (2/a1^2) dW_B/db1,   W-_{B01} = (2/a2) dW_B/dc1,
///   W+_{N_B} = (1+b1) W+_{B01} - 1, W-_{N_B} = (1+c1) W-_{B01} - 1.
/// Throws std::domain_error if a division is not exact.
BiconnectedNetworks networks_from_biconnected(const IndexSeries& walsh_b);

std::uint32_t euler_phi(std::uint32_t n);

}  // namespace walsh
