#ifndef PERMTRI_CHAINS_HPP
#define PERMTRI_CHAINS_HPP

#include <string>
#include <vector>

#include "derive.hpp"

namespace permtri::symbolic {

struct DerivationStep {
    std::string operation;
    std::vector<std::uint64_t> input_hashes;
    std::uint64_t output_hash = 0;
    bool ok = true;
    std::string note;
};

struct DerivationReport {
    std::string name;
    std::vector<DerivationStep> steps;
    bool passed = true;

    void record(std::string op, std::vector<std::uint64_t> inputs, std::uint64_t output,
                bool ok, std::string note = {});
    std::string to_json() const;
};

/// Checks that the derived curve coefficients equal the reference table
/// term-for-term, for all nine (j,l) pairs.
DerivationReport verify_curve_derivation();

/// Reproduces the two-fixed-conics obstruction: extracts the displayed
/// relation polynomials p1..p4 and H(A,B,C,D) from the coefficient system,
/// checks the reduced splitting-condition polynomial, and verifies that the
/// resultant chain R1..R4 eliminates into a multiple of H, i.e.
/// Res(R4, H, k) = 0.
DerivationReport verify_two_conics_obstruction();

/// One scripted derivation per splitting-analysis branch: the four-lines
/// eliminations (B = D and B != D), the displayed product factorizations of
/// cases 1 and 2, the swapped-conics eliminations, and the odd/even-degree
/// behaviour of the degenerate conic case.
std::vector<DerivationReport> verify_case_chains();

} // namespace permtri::symbolic

#endif
