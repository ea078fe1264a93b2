#include "loewy/analysis.hpp"

#include <algorithm>
#include <string>

namespace loewy {

namespace {

void require_cubic(const FiniteLattice& l, const Limits& limits, const char* what) {
    if (l.size() > limits.cubic_scan) {
        throw LatticeError(ErrorCode::TooLarge, std::string(what) + " scan capped at " +
                                                    std::to_string(limits.cubic_scan) + " elements, lattice has " +
                                                    std::to_string(l.size()));
    }
}

} // namespace

ElementSet atoms(const FiniteLattice& l) {
    if (l.degenerate()) return {};
    return ElementSet(l.upper_covers(l.bottom()));
}

ElementSet coatoms(const FiniteLattice& l) {
    if (l.degenerate()) return {};
    return ElementSet(l.lower_covers(l.top()));
}

Index socle_between(const FiniteLattice& l, Index low, Index high) {
    Index s = low;
    for (Index c : l.upper_covers(low)) {
        if (l.leq(c, high)) s = l.join(s, c);
    }
    return s;
}

Index radical_between(const FiniteLattice& l, Index low, Index high) {
    Index r = high;
    for (Index c : l.lower_covers(high)) {
        if (l.leq(low, c)) r = l.meet(r, c);
    }
    return r;
}

Index socle(const FiniteLattice& l) { return socle_between(l, l.bottom(), l.top()); }

Index radical(const FiniteLattice& l) { return radical_between(l, l.bottom(), l.top()); }

ElementSet essential_elements(const FiniteLattice& l) {
    if (l.degenerate()) throw LatticeError(ErrorCode::Degenerate, "essential elements need bottom != top");
    std::vector<Index> out;
    for (Index x = 1; x < l.size(); ++x) {
        bool essential = true;
        for (Index u = 1; u < l.size() && essential; ++u) {
            essential = l.meet(x, u) != l.bottom();
        }
        if (essential) out.push_back(x);
    }
    return ElementSet(std::move(out));
}

LoewySeries loewy_series_between(const FiniteLattice& l, Index low, Index high) {
    if (!l.leq(low, high)) {
        throw LatticeError(ErrorCode::NotComparable, "'" + l.element(low) + "' is not below '" + l.element(high) + "'");
    }
    LoewySeries series{{low}};
    Index current = low;
    while (current != high) {
        const Index next = socle_between(l, current, high);
        if (next == current) throw LatticeError(ErrorCode::Stall, "socle of [" + l.element(current) + ", top] stalled");
        series.chain.push_back(next);
        current = next;
    }
    return series;
}

LoewySeries loewy_series(const FiniteLattice& l) { return loewy_series_between(l, l.bottom(), l.top()); }

std::size_t lattice_length(const FiniteLattice& l) { return heights(l)[l.top()]; }

ElementSet join_irreducibles(const FiniteLattice& l) {
    std::vector<Index> out;
    for (Index x = 0; x < l.size(); ++x) {
        if (l.lower_covers(x).size() == 1) out.push_back(x);
    }
    return ElementSet(std::move(out));
}

ElementSet meet_irreducibles(const FiniteLattice& l) {
    std::vector<Index> out;
    for (Index x = 0; x < l.size(); ++x) {
        if (l.upper_covers(x).size() == 1) out.push_back(x);
    }
    return ElementSet(std::move(out));
}

bool is_chain(const FiniteLattice& l) {
    return std::all_of(l.covers().begin(), l.covers().end(),
                       [&l](const Cover& c) { return l.upper_covers(c.first).size() == 1; });
}

bool is_distributive(const FiniteLattice& l, const Limits& limits) {
    require_cubic(l, limits, "distributivity");
    const Index n = static_cast<Index>(l.size());
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            const Index xy = l.meet(x, y);
            for (Index z = y + 1; z < n; ++z) {
                if (l.meet(x, l.join(y, z)) != l.join(xy, l.meet(x, z))) return false;
            }
        }
    }
    return true;
}

bool is_modular(const FiniteLattice& l, const Limits& limits) {
    require_cubic(l, limits, "modularity");
    const Index n = static_cast<Index>(l.size());
    for (Index x = 0; x < n; ++x) {
        for (Index z = x; z < n; ++z) {
            if (!l.leq(x, z)) continue;
            for (Index y = 0; y < n; ++y) {
                if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) return false;
            }
        }
    }
    return true;
}

std::vector<Index> complement_of(const FiniteLattice& l, Index x) {
    std::vector<Index> out;
    for (Index y = 0; y < l.size(); ++y) {
        if (l.meet(x, y) == l.bottom() && l.join(x, y) == l.top()) out.push_back(y);
    }
    return out;
}

bool is_complemented(const FiniteLattice& l) {
    for (Index x = 0; x < l.size(); ++x) {
        bool found = false;
        for (Index y = 0; y < l.size() && !found; ++y) {
            found = l.meet(x, y) == l.bottom() && l.join(x, y) == l.top();
        }
        if (!found) return false;
    }
    return true;
}

bool is_boolean(const FiniteLattice& l, const Limits& limits) {
    return is_distributive(l, limits) && is_complemented(l);
}

bool is_catenarian(const FiniteLattice& l) {
    const auto h = heights(l);
    return std::all_of(l.covers().begin(), l.covers().end(),
                       [&h](const Cover& c) { return h[c.second] == h[c.first] + 1; });
}

std::optional<Index> p_extension_witness(const FiniteLattice& l) {
    const LoewySeries series = loewy_series(l);
    const auto& s = series.chain;
    for (Index x = 0; x < l.size(); ++x) {
        // The S_i below x form a prefix of the series; x must sit under the next one.
        std::size_t i = 0;
        while (i + 1 < s.size() && l.leq(s[i + 1], x)) ++i;
        if (i + 1 < s.size() ? !l.leq(x, s[i + 1]) : x != s[i]) return x;
    }
    return std::nullopt;
}

bool is_p_extension(const FiniteLattice& l) { return !p_extension_witness(l).has_value(); }

std::vector<std::size_t> layer_sizes(const FiniteLattice& l, const LoewySeries& series) {
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i + 1 < series.chain.size(); ++i) {
        sizes.push_back(interval_members(l, series.chain[i], series.chain[i + 1]).size());
    }
    return sizes;
}

AnalysisReport analyze(const FiniteLattice& l, const Limits& limits) {
    AnalysisReport r;
    r.cardinality = l.size();
    r.atoms = atoms(l);
    r.coatoms = coatoms(l);
    if (!l.degenerate()) r.essentials = essential_elements(l);
    r.socle = socle(l);
    r.radical = radical(l);
    r.loewy = loewy_series(l);
    r.lattice_length = lattice_length(l);
    r.join_irreducibles = join_irreducibles(l);
    r.meet_irreducibles = meet_irreducibles(l);
    r.layer_sizes = layer_sizes(l, r.loewy);

    r.flags.is_chain = is_chain(l);
    r.flags.is_catenarian = is_catenarian(l);
    r.flags.is_p_extension = is_p_extension(l);
    if (l.size() <= limits.cubic_scan) {
        r.flags.is_distributive = is_distributive(l, limits);
        r.flags.is_modular = is_modular(l, limits);
        r.flags.is_boolean = *r.flags.is_distributive && is_complemented(l);
    }
    return r;
}

} // namespace loewy
