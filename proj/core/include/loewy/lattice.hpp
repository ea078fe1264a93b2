#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "loewy/error.hpp"
#include "loewy/limits.hpp"

namespace loewy {

using Index = std::uint32_t;
using Cover = std::pair<Index, Index>;

/// A sorted set of element indices of some lattice.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::vector<Index> members);

    const std::vector<Index>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Index x) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

private:
    std::vector<Index> members_;
};

/**
 * Immutable finite bounded lattice.
 *
 * Elements are stored in a canonical linear extension of the order
 * (topological, ties broken by identifier), so index 0 is always the bottom
 * and index size()-1 the top. The order is kept as a bit matrix and meets and
 * joins as dense tables filled once at construction.
 */
class FiniteLattice {
public:
    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return elements_.size(); }
    Index bottom() const noexcept { return 0; }
    Index top() const noexcept { return static_cast<Index>(elements_.size() - 1); }
    bool degenerate() const noexcept { return elements_.size() == 1; }

    const std::vector<std::string>& elements() const noexcept { return elements_; }
    const std::string& element(Index x) const;
    std::optional<Index> find(std::string_view id) const;
    /// Like find, but throws E_INDEX for unknown identifiers.
    Index index_of(std::string_view id) const;

    bool leq(Index a, Index b) const;
    bool less(Index a, Index b) const { return a != b && leq(a, b); }
    Index meet(Index a, Index b) const;
    Index join(Index a, Index b) const;

    /// Sorted (lower, upper) pairs of the cover relation.
    const std::vector<Cover>& covers() const noexcept { return covers_; }
    const std::vector<Index>& upper_covers(Index x) const;
    const std::vector<Index>& lower_covers(Index x) const;

    /// Copy (or move) under a new label.
    FiniteLattice renamed(std::string name) const& {
        FiniteLattice copy = *this;
        copy.name_ = std::move(name);
        return copy;
    }
    FiniteLattice renamed(std::string name) && {
        name_ = std::move(name);
        return std::move(*this);
    }

    /// Same identifiers in the same order and the same covers; the name is a label only.
    friend bool operator==(const FiniteLattice& a, const FiniteLattice& b);

private:
    friend FiniteLattice build_from_covers(std::string, std::vector<std::string>,
                                           const std::vector<std::pair<std::string, std::string>>&,
                                           const Limits&);
    FiniteLattice() = default;

    void check(Index x) const;

    std::string name_;
    std::vector<std::string> elements_;
    std::unordered_map<std::string, Index> lookup_;
    std::vector<Cover> covers_;
    std::vector<std::vector<Index>> up_;
    std::vector<std::vector<Index>> down_;
    std::size_t words_ = 0;                 // 64-bit words per row of leq_
    std::vector<std::uint64_t> leq_;        // row a, bit b: a <= b
    std::vector<std::uint16_t> meet_;
    std::vector<std::uint16_t> join_;
};

/**
 * Build and validate a lattice from its Hasse diagram.
 *
 * Errors: E_DUP_ELEM, E_CYCLE, E_NOT_COVER (a declared pair is implied by
 * others or repeated), E_NO_BOUND, E_NOT_LATTICE, E_INDEX (a cover names an
 * undeclared element), E_SYNTAX (malformed identifier), E_TOO_LARGE.
 */
FiniteLattice build_from_covers(std::string name, std::vector<std::string> elements,
                                const std::vector<std::pair<std::string, std::string>>& covers,
                                const Limits& limits = {});

/// Build from an order predicate given on the declared elements (its
/// transitive reduction becomes the cover list).
template <class Leq>
FiniteLattice build_from_order(std::string name, std::vector<std::string> elements, Leq leq,
                               const Limits& limits = {}) {
    std::vector<std::pair<std::string, std::string>> covers;
    const std::size_t n = elements.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !leq(a, b)) continue;
            bool direct = true;
            for (std::size_t c = 0; c < n && direct; ++c) {
                if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
            }
            if (direct) covers.emplace_back(elements[a], elements[b]);
        }
    }
    return build_from_covers(std::move(name), std::move(elements), covers, limits);
}

/// Induced sublattice on [low, high] with the embedding back into the parent.
struct Interval {
    FiniteLattice lattice;
    std::vector<Index> embedding;
};

/// Members of [low, high] as parent indices in canonical order. E_NOT_COMPARABLE.
std::vector<Index> interval_members(const FiniteLattice& l, Index low, Index high);
Interval interval(const FiniteLattice& l, Index low, Index high, const Limits& limits = {});

/// Product lattice together with the component pair of every element.
struct Product {
    FiniteLattice lattice;
    std::vector<std::pair<Index, Index>> components;
    std::vector<Index> index_by_pair;   // row-major over (first, second)
    std::size_t second_size = 0;

    Index index_of(Index first, Index second) const {
        return index_by_pair[first * second_size + second];
    }
};

/// Componentwise order on pairs, identifiers "(x,y)". E_TOO_LARGE above the cap.
Product product_decomposed(const FiniteLattice& a, const FiniteLattice& b, const Limits& limits = {});
FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b, const Limits& limits = {});

/// Same identifiers with the order reversed.
FiniteLattice dual(const FiniteLattice& l);

/// Witness of an order isomorphism: mapping[x] is the image of x.
using Isomorphism = std::vector<Index>;

/// Backtracking search for an order isomorphism. E_TOO_LARGE above limits.isomorphism.
std::optional<Isomorphism> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b,
                                            const Limits& limits = {});
inline bool are_isomorphic(const FiniteLattice& a, const FiniteLattice& b, const Limits& limits = {}) {
    return find_isomorphism(a, b, limits).has_value();
}

/// Height of each element: longest cover path from the bottom.
std::vector<std::size_t> heights(const FiniteLattice& l);

/// Identifiers of the given indices, in order.
std::vector<std::string> names(const FiniteLattice& l, const std::vector<Index>& xs);
std::vector<std::string> names(const FiniteLattice& l, const ElementSet& xs);

} // namespace loewy
