#pragma once

#include <cstddef>

namespace loewy {

/// Size caps shared by constructors, cubic scans and the isomorphism search.
struct Limits {
    /// Largest lattice any constructor will build (product, grid, ...).
    std::size_t max_elements = 4096;
    /// Largest divisor count accepted by the divisor and subgroup families.
    std::size_t max_divisors = 4096;
    /// Largest lattice on which O(N^3) law scans (distributive, modular) run.
    std::size_t cubic_scan = 512;
    /// Largest lattice handed to the backtracking isomorphism search.
    std::size_t isomorphism = 64;

    /// Defaults, with max_elements and max_divisors taken from LATTICE_MAX_N
    /// when that variable holds a positive integer.
    static Limits from_env();
};

/// Hard ceiling imposed by the 16-bit meet/join table storage.
inline constexpr std::size_t kAbsoluteMaxElements = 65535;

} // namespace loewy
