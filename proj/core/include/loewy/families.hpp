#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loewy/lattice.hpp"

namespace loewy {

/// Total order 0 < 1 < ... < n.
FiniteLattice chain(std::size_t n, const Limits& limits = {});

/// Subsets of a k-set (0 <= k <= 16). Identifiers are "{}" , "{0}", "{0,2}", ...
FiniteLattice boolean_cube(std::size_t k, const Limits& limits = {});

/// Divisors of n (1 <= n <= 10^9) under divisibility; identifiers are decimal numerals.
FiniteLattice divisor_lattice(std::uint64_t n, const Limits& limits = {});

/// Product of chains of the given lengths (each >= 1). Identifiers "(a,b,...)".
FiniteLattice grid(const std::vector<std::size_t>& dims, const Limits& limits = {});

/// M_k: bottom, k pairwise incomparable atoms, top (k >= 3).
FiniteLattice diamond(std::size_t k);

/// N5: 0 < a < b < 1 and 0 < c < 1.
FiniteLattice pentagon();

/// Subgroups of Z/nZ by inclusion, found by enumerating cyclic subgroups
/// element by element; each subgroup is labeled by its index. n <= 4096.
FiniteLattice subgroup_lattice_cyclic(std::uint64_t n, const Limits& limits = {});

/// Subspaces of GF(q)^d for q in {2,3,4,5} and d in {1,2}.
FiniteLattice subspace_lattice(unsigned q, unsigned d);

/// Named fixtures: "ex8_41", "ex8_7_1", "ex8_7_3", "ex8_81". E_UNKNOWN_NAME otherwise.
FiniteLattice paper_example(std::string_view name);
const std::vector<std::string>& paper_example_names();

/**
 * Seeded member of a distributive family.
 *
 * Draws come straight from std::mt19937_64 (no std distributions, so the
 * stream is identical across standard libraries):
 *   1. kind = draw % 4: grid, divisor lattice, interval of a grid, interval
 *      of a divisor lattice;
 *   2. grids: up to four dimensions, each 1 + draw % 4, stopping before the
 *      size would exceed max_size; divisor lattices: n = 2 + draw % 9999,
 *      redrawn (at most 64 times, then n = 2) until d(n) <= max_size;
 *   3. intervals: low = draw % N, high = a draw among the elements above low.
 * The result always has at least two elements when max_size >= 2.
 */
FiniteLattice random_distributive(std::uint64_t seed, std::size_t max_size, const Limits& limits = {});

enum class FamilyKind {
    Chain,
    BooleanCube,
    Divisor,
    Grid,
    Diamond,
    Pentagon,
    SubgroupCyclic,
    Subspace,
    PaperExample,
    RandomDistributive,
};

std::string_view to_string(FamilyKind kind) noexcept;
std::optional<FamilyKind> family_kind_from_string(std::string_view token);

/// Parameters selecting one generated lattice.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Chain;
    std::vector<std::uint64_t> parameters;
    std::string example;                   // PaperExample only
    std::optional<std::uint64_t> seed;     // RandomDistributive only

    /// Parse "<kind> <params...>" tokens as used by the command line.
    /// random_distributive takes "<seed> <max_size>". E_RANGE / E_UNKNOWN_NAME.
    static FamilySpec parse(const std::vector<std::string>& tokens);
};

FiniteLattice generate(const FamilySpec& spec, const Limits& limits = {});

} // namespace loewy
