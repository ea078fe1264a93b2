#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "loewy/lattice.hpp"

namespace loewy {

/// Chain bottom = S_0 < S_1 < ... < S_n = top, S_{i+1} the socle of [S_i, top].
struct LoewySeries {
    std::vector<Index> chain;

    std::size_t length() const noexcept { return chain.size() - 1; }
    friend bool operator==(const LoewySeries&, const LoewySeries&) = default;
};

ElementSet atoms(const FiniteLattice& l);
ElementSet coatoms(const FiniteLattice& l);

/// Join of the atoms; bottom on the 1-element lattice.
Index socle(const FiniteLattice& l);
/// Meet of the coatoms; top on the 1-element lattice.
Index radical(const FiniteLattice& l);

/// Socle and radical of the sublattice [low, high], computed in place.
Index socle_between(const FiniteLattice& l, Index low, Index high);
Index radical_between(const FiniteLattice& l, Index low, Index high);

/// Non-bottom x whose meet with every non-bottom element stays non-bottom.
/// E_DEGENERATE on the 1-element lattice.
ElementSet essential_elements(const FiniteLattice& l);

LoewySeries loewy_series(const FiniteLattice& l);
/// Loewy series of the sublattice [low, high], as indices of l.
LoewySeries loewy_series_between(const FiniteLattice& l, Index low, Index high);

/// Longest cover chain from bottom to top.
std::size_t lattice_length(const FiniteLattice& l);

/// Elements with exactly one lower cover (bottom excluded).
ElementSet join_irreducibles(const FiniteLattice& l);
/// Elements with exactly one upper cover (top excluded).
ElementSet meet_irreducibles(const FiniteLattice& l);

bool is_chain(const FiniteLattice& l);
/// Exhaustive triple scan. E_TOO_LARGE above limits.cubic_scan.
bool is_distributive(const FiniteLattice& l, const Limits& limits = {});
/// Exhaustive scan of x v (y ^ z) = (x v y) ^ z over x <= z. E_TOO_LARGE above limits.cubic_scan.
bool is_modular(const FiniteLattice& l, const Limits& limits = {});

std::vector<Index> complement_of(const FiniteLattice& l, Index x);
/// Every element has at least one complement.
bool is_complemented(const FiniteLattice& l);
/// Distributive and complemented. Inherits E_TOO_LARGE.
bool is_boolean(const FiniteLattice& l, const Limits& limits = {});

/// Graded: a rank function rising by exactly one along every cover.
bool is_catenarian(const FiniteLattice& l);

/// Every element lies in some layer [S_i, S_{i+1}] of the Loewy series.
bool is_p_extension(const FiniteLattice& l);
/// First element outside every layer, if any.
std::optional<Index> p_extension_witness(const FiniteLattice& l);

/// |[S_i, S_{i+1}]| for each consecutive pair of the series.
std::vector<std::size_t> layer_sizes(const FiniteLattice& l, const LoewySeries& series);

/// Property flags; an empty optional means the check was skipped by a cap.
struct Flags {
    bool is_chain = false;
    std::optional<bool> is_distributive;
    std::optional<bool> is_modular;
    std::optional<bool> is_boolean;
    bool is_catenarian = false;
    bool is_p_extension = false;
};

struct AnalysisReport {
    std::size_t cardinality = 0;
    ElementSet atoms;
    ElementSet coatoms;
    /// Empty optional on the 1-element lattice, where essentiality is undefined.
    std::optional<ElementSet> essentials;
    Index socle = 0;
    Index radical = 0;
    LoewySeries loewy;
    std::size_t lattice_length = 0;
    ElementSet join_irreducibles;
    ElementSet meet_irreducibles;
    std::vector<std::size_t> layer_sizes;
    Flags flags;

    std::size_t loewy_length() const noexcept { return loewy.length(); }
};

AnalysisReport analyze(const FiniteLattice& l, const Limits& limits = {});

} // namespace loewy
