#include "loewy/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <tuple>

namespace loewy {

namespace {

bool valid_identifier(const std::string& id) {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](char c) { return c > ' ' && c < 0x7f; });
}

Limits unbounded() {
    Limits limits;
    limits.max_elements = kAbsoluteMaxElements;
    return limits;
}

} // namespace

ElementSet::ElementSet(std::vector<Index> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ElementSet::contains(Index x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
}

void FiniteLattice::check(Index x) const {
    if (x >= elements_.size()) {
        throw LatticeError(ErrorCode::Index, "index " + std::to_string(x) + " out of range for lattice of size " +
                                                 std::to_string(elements_.size()));
    }
}

const std::string& FiniteLattice::element(Index x) const {
    check(x);
    return elements_[x];
}

std::optional<Index> FiniteLattice::find(std::string_view id) const {
    auto it = lookup_.find(std::string(id));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

Index FiniteLattice::index_of(std::string_view id) const {
    if (auto x = find(id)) return *x;
    throw LatticeError(ErrorCode::Index, "unknown element '" + std::string(id) + "'");
}

bool FiniteLattice::leq(Index a, Index b) const {
    check(a);
    check(b);
    return (leq_[a * words_ + b / 64] >> (b % 64)) & 1u;
}

Index FiniteLattice::meet(Index a, Index b) const {
    check(a);
    check(b);
    return meet_[a * size() + b];
}

Index FiniteLattice::join(Index a, Index b) const {
    check(a);
    check(b);
    return join_[a * size() + b];
}

const std::vector<Index>& FiniteLattice::upper_covers(Index x) const {
    check(x);
    return up_[x];
}

const std::vector<Index>& FiniteLattice::lower_covers(Index x) const {
    check(x);
    return down_[x];
}

bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.elements_ == b.elements_ && a.covers_ == b.covers_;
}

FiniteLattice build_from_covers(std::string name, std::vector<std::string> elements,
                                const std::vector<std::pair<std::string, std::string>>& covers,
                                const Limits& limits) {
    const std::size_t n = elements.size();
    if (n == 0) throw LatticeError(ErrorCode::NoBound, "lattice has no elements");
    if (n > limits.max_elements || n > kAbsoluteMaxElements) {
        throw LatticeError(ErrorCode::TooLarge, std::to_string(n) + " elements exceeds cap " +
                                                    std::to_string(std::min(limits.max_elements, kAbsoluteMaxElements)));
    }

    std::unordered_map<std::string, Index> declared;
    declared.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!valid_identifier(elements[i])) {
            throw LatticeError(ErrorCode::Syntax, "invalid identifier '" + elements[i] + "'");
        }
        if (!declared.emplace(elements[i], static_cast<Index>(i)).second) {
            throw LatticeError(ErrorCode::DupElem, "element '" + elements[i] + "' declared twice");
        }
    }

    // Declared covers in input numbering.
    std::vector<std::vector<Index>> up(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& [lo, hi] : covers) {
        auto a = declared.find(lo);
        auto b = declared.find(hi);
        if (a == declared.end() || b == declared.end()) {
            throw LatticeError(ErrorCode::Index, "cover " + lo + " " + hi + " names an undeclared element");
        }
        if (a->second == b->second) throw LatticeError(ErrorCode::Cycle, "self cover on '" + lo + "'");
        auto& row = up[a->second];
        if (std::find(row.begin(), row.end(), b->second) != row.end()) {
            throw LatticeError(ErrorCode::NotCover, "cover " + lo + " " + hi + " declared twice");
        }
        row.push_back(b->second);
        ++indegree[b->second];
    }

    // Kahn's algorithm, smallest identifier first among ready elements.
    using Ready = std::pair<std::string_view, Index>;
    std::priority_queue<Ready, std::vector<Ready>, std::greater<>> ready;
    for (Index i = 0; i < n; ++i) {
        if (indegree[i] == 0) ready.emplace(elements[i], i);
    }
    std::vector<Index> order;
    order.reserve(n);
    while (!ready.empty()) {
        const Index x = ready.top().second;
        ready.pop();
        order.push_back(x);
        for (Index y : up[x]) {
            if (--indegree[y] == 0) ready.emplace(elements[y], y);
        }
    }
    if (order.size() != n) {
        for (Index i = 0; i < n; ++i) {
            if (indegree[i] != 0) {
                throw LatticeError(ErrorCode::Cycle, "order is not antisymmetric around '" + elements[i] + "'");
            }
        }
    }

    std::vector<Index> position(n);
    for (Index i = 0; i < n; ++i) position[order[i]] = i;

    FiniteLattice l;
    l.name_ = std::move(name);
    l.elements_.resize(n);
    l.lookup_.reserve(n);
    for (Index i = 0; i < n; ++i) {
        l.elements_[i] = std::move(elements[order[i]]);
        l.lookup_.emplace(l.elements_[i], i);
    }
    l.up_.assign(n, {});
    l.down_.assign(n, {});
    for (Index a = 0; a < n; ++a) {
        for (Index b : up[a]) {
            l.up_[position[a]].push_back(position[b]);
            l.down_[position[b]].push_back(position[a]);
            l.covers_.emplace_back(position[a], position[b]);
        }
    }
    for (auto& row : l.up_) std::sort(row.begin(), row.end());
    for (auto& row : l.down_) std::sort(row.begin(), row.end());
    std::sort(l.covers_.begin(), l.covers_.end());

    std::size_t minimal = 0;
    std::size_t maximal = 0;
    for (Index x = 0; x < n; ++x) {
        minimal += l.down_[x].empty();
        maximal += l.up_[x].empty();
    }
    if (minimal != 1) throw LatticeError(ErrorCode::NoBound, std::to_string(minimal) + " minimal elements");
    if (maximal != 1) throw LatticeError(ErrorCode::NoBound, std::to_string(maximal) + " maximal elements");

    // Reflexive-transitive closure, one bit row per element.
    l.words_ = (n + 63) / 64;
    l.leq_.assign(n * l.words_, 0);
    for (Index x = static_cast<Index>(n); x-- > 0;) {
        std::uint64_t* row = &l.leq_[x * l.words_];
        row[x / 64] |= std::uint64_t{1} << (x % 64);
        for (Index y : l.up_[x]) {
            const std::uint64_t* other = &l.leq_[y * l.words_];
            for (std::size_t w = 0; w < l.words_; ++w) row[w] |= other[w];
        }
    }
    auto le = [&l](Index a, Index b) { return ((l.leq_[a * l.words_ + b / 64] >> (b % 64)) & 1u) != 0; };

    for (const auto& [a, b] : l.covers_) {
        for (Index c : l.up_[a]) {
            if (c != b && le(c, b)) {
                throw LatticeError(ErrorCode::NotCover, "cover " + l.elements_[a] + " " + l.elements_[b] +
                                                            " is implied through '" + l.elements_[c] + "'");
            }
        }
    }

    // meet(a,b) for a not comparable to b is the largest of meet(c,b) over the
    // lower covers c of a; if those values have no largest one, no meet exists.
    // The first pass climbs to the largest candidate if there is one, the
    // second confirms it dominates the rest.
    l.meet_.assign(n * n, 0);
    l.join_.assign(n * n, 0);
    auto not_lattice = [&l](Index a, Index b, const char* what) {
        return LatticeError(ErrorCode::NotLattice, std::string("no ") + what + " for '" + l.elements_[a] + "' and '" +
                                                       l.elements_[b] + "'");
    };
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            Index m;
            if (le(a, b)) {
                m = a;
            } else if (le(b, a)) {
                m = b;
            } else {
                m = l.meet_[l.down_[a].front() * n + b];
                for (Index c : l.down_[a]) {
                    if (le(m, l.meet_[c * n + b])) m = l.meet_[c * n + b];
                }
                for (Index c : l.down_[a]) {
                    if (!le(l.meet_[c * n + b], m)) throw not_lattice(a, b, "meet");
                }
            }
            l.meet_[a * n + b] = static_cast<std::uint16_t>(m);
        }
    }
    for (Index a = static_cast<Index>(n); a-- > 0;) {
        for (Index b = 0; b < n; ++b) {
            Index j;
            if (le(a, b)) {
                j = b;
            } else if (le(b, a)) {
                j = a;
            } else {
                j = l.join_[l.up_[a].front() * n + b];
                for (Index c : l.up_[a]) {
                    if (le(l.join_[c * n + b], j)) j = l.join_[c * n + b];
                }
                for (Index c : l.up_[a]) {
                    if (!le(j, l.join_[c * n + b])) throw not_lattice(a, b, "join");
                }
            }
            l.join_[a * n + b] = static_cast<std::uint16_t>(j);
        }
    }
    return l;
}

std::vector<Index> interval_members(const FiniteLattice& l, Index low, Index high) {
    if (!l.leq(low, high)) {
        throw LatticeError(ErrorCode::NotComparable, "'" + l.element(low) + "' is not below '" + l.element(high) + "'");
    }
    std::vector<Index> members;
    for (Index x = low; x <= high; ++x) {
        if (l.leq(low, x) && l.leq(x, high)) members.push_back(x);
    }
    return members;
}

Interval interval(const FiniteLattice& l, Index low, Index high, const Limits& limits) {
    const std::vector<Index> members = interval_members(l, low, high);
    std::vector<std::string> ids = names(l, members);
    std::vector<std::pair<std::string, std::string>> covers;
    for (Index x : members) {
        for (Index y : l.upper_covers(x)) {
            if (l.leq(y, high)) covers.emplace_back(l.element(x), l.element(y));
        }
    }
    Interval result{build_from_covers("interval(" + l.name() + "," + l.element(low) + "," + l.element(high) + ")",
                                      std::move(ids), covers, limits),
                    {}};
    result.embedding.reserve(members.size());
    for (const auto& id : result.lattice.elements()) result.embedding.push_back(l.index_of(id));
    return result;
}

Product product_decomposed(const FiniteLattice& a, const FiniteLattice& b, const Limits& limits) {
    const std::size_t total = a.size() * b.size();
    if (total > limits.max_elements || total > kAbsoluteMaxElements) {
        throw LatticeError(ErrorCode::TooLarge, "product of sizes " + std::to_string(a.size()) + " and " +
                                                    std::to_string(b.size()) + " exceeds cap");
    }
    auto pair_name = [&](Index x, Index y) { return "(" + a.element(x) + "," + b.element(y) + ")"; };
    std::vector<std::string> ids;
    ids.reserve(total);
    for (Index x = 0; x < a.size(); ++x) {
        for (Index y = 0; y < b.size(); ++y) ids.push_back(pair_name(x, y));
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& [lo, hi] : a.covers()) {
        for (Index y = 0; y < b.size(); ++y) covers.emplace_back(pair_name(lo, y), pair_name(hi, y));
    }
    for (const auto& [lo, hi] : b.covers()) {
        for (Index x = 0; x < a.size(); ++x) covers.emplace_back(pair_name(x, lo), pair_name(x, hi));
    }

    Product p{build_from_covers(a.name() + "*" + b.name(), ids, covers, limits), {}, {}, b.size()};
    p.components.resize(total);
    p.index_by_pair.resize(total);
    for (Index x = 0; x < a.size(); ++x) {
        for (Index y = 0; y < b.size(); ++y) {
            const Index k = p.lattice.index_of(ids[x * b.size() + y]);
            p.components[k] = {x, y};
            p.index_by_pair[x * b.size() + y] = k;
        }
    }
    return p;
}

FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b, const Limits& limits) {
    return product_decomposed(a, b, limits).lattice;
}

FiniteLattice dual(const FiniteLattice& l) {
    std::vector<std::pair<std::string, std::string>> covers;
    covers.reserve(l.covers().size());
    for (const auto& [lo, hi] : l.covers()) covers.emplace_back(l.element(hi), l.element(lo));
    return build_from_covers("dual(" + l.name() + ")", l.elements(), covers, unbounded());
}

std::vector<std::size_t> heights(const FiniteLattice& l) {
    std::vector<std::size_t> h(l.size(), 0);
    for (Index x = 0; x < l.size(); ++x) {
        for (Index c : l.lower_covers(x)) h[x] = std::max(h[x], h[c] + 1);
    }
    return h;
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const FiniteLattice& l) {
    const std::size_t n = l.size();
    const auto up_height = heights(l);
    std::vector<std::size_t> depth(n, 0);
    for (Index x = static_cast<Index>(n); x-- > 0;) {
        for (Index c : l.upper_covers(x)) depth[x] = std::max(depth[x], depth[c] + 1);
    }
    std::vector<Signature> sig(n);
    for (Index x = 0; x < n; ++x) {
        std::size_t below = 0;
        std::size_t above = 0;
        for (Index y = 0; y < n; ++y) {
            below += l.leq(y, x);
            above += l.leq(x, y);
        }
        sig[x] = {up_height[x], depth[x], l.lower_covers(x).size(), l.upper_covers(x).size(), below, above};
    }
    return sig;
}

class IsoSearch {
public:
    IsoSearch(const FiniteLattice& a, const FiniteLattice& b)
        : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)), map_(a.size()), used_(b.size(), false) {}

    bool run() { return extend(0); }
    const Isomorphism& mapping() const { return map_; }

private:
    bool consistent(Index x, Index y) const {
        for (Index prev = 0; prev < x; ++prev) {
            if (a_.leq(prev, x) != b_.leq(map_[prev], y)) return false;
            if (a_.leq(x, prev) != b_.leq(y, map_[prev])) return false;
        }
        return true;
    }

    bool extend(Index x) {
        if (x == a_.size()) return true;
        for (Index y = 0; y < b_.size(); ++y) {
            if (used_[y] || sig_a_[x] != sig_b_[y] || !consistent(x, y)) continue;
            map_[x] = y;
            used_[y] = true;
            if (extend(x + 1)) return true;
            used_[y] = false;
        }
        return false;
    }

    const FiniteLattice& a_;
    const FiniteLattice& b_;
    std::vector<Signature> sig_a_;
    std::vector<Signature> sig_b_;
    Isomorphism map_;
    std::vector<bool> used_;
};

} // namespace

std::optional<Isomorphism> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b, const Limits& limits) {
    if (a.size() != b.size() || a.covers().size() != b.covers().size()) return std::nullopt;
    if (a.size() > limits.isomorphism) {
        throw LatticeError(ErrorCode::TooLarge, "isomorphism search capped at " + std::to_string(limits.isomorphism) +
                                                    " elements");
    }
    IsoSearch search(a, b);
    {
        auto sa = signatures(a);
        auto sb = signatures(b);
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    if (!search.run()) return std::nullopt;
    return search.mapping();
}

std::vector<std::string> names(const FiniteLattice& l, const std::vector<Index>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (Index x : xs) out.push_back(l.element(x));
    return out;
}

std::vector<std::string> names(const FiniteLattice& l, const ElementSet& xs) {
    return names(l, xs.members());
}

} // namespace loewy
