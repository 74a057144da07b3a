#pragma once

/// Brute-force ground truth for circulant counts at small orders.
///
/// Every admissible connection set is turned into a digraph and labelled
/// canonically; isomorphism classes are the distinct certificates. The
/// labeller is a plain individualization-refinement search and knows
/// nothing about multipliers, so its counts are an independent check of
/// the cycle-index formulas.

#include "circulant/bigint.hpp"
#include "circulant/enumerators.hpp"
#include "circulant/error.hpp"
#include "circulant/number_theory.hpp"
#include "circulant/unipoly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace circulant::oracle {

/// Largest supported order of any digraph handled here (bitmask rows).
inline constexpr unsigned kHardMaxOrder = 64;

/// A subset of Z_n \ {0}; bit s set means s is a member.
struct ConnectionSet {
    unsigned order = 1;
    std::uint64_t members = 0;

    static ConnectionSet from_members(unsigned n, const std::vector<unsigned>& list) {
        if (n == 0 || n > kHardMaxOrder) throw DomainError("ConnectionSet: order out of range");
        ConnectionSet s{n, 0};
        for (auto m : list) {
            if (m == 0 || m >= n) throw DomainError("ConnectionSet: member " + std::to_string(m) + " outside 1..n-1");
            s.members |= std::uint64_t{1} << m;
        }
        return s;
    }

    unsigned size() const { return static_cast<unsigned>(std::popcount(members)); }
    bool contains(unsigned s) const { return (members >> s) & 1U; }

    std::uint64_t universe() const {
        std::uint64_t all = order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
        return all & ~std::uint64_t{1};
    }

    /// -S
    ConnectionSet negated() const { return multiplied(order - 1); }

    /// (Z_n \ {0}) \ S, the connection set of the loopless complement.
    ConnectionSet complement() const { return {order, universe() & ~members}; }

    /// mS (mod n)
    ConnectionSet multiplied(unsigned m) const {
        ConnectionSet out{order, 0};
        for (unsigned s = 1; s < order; ++s) {
            if (contains(s)) out.members |= std::uint64_t{1} << (static_cast<std::uint64_t>(s) * m % order);
        }
        return out;
    }

    bool is_undirected() const { return order == 1 || negated().members == members; }
    bool is_oriented() const { return order == 1 || (negated().members & members) == 0; }
    bool is_tournament() const { return order % 2 == 1 && is_oriented() && 2 * size() == order - 1; }

    std::vector<unsigned> member_list() const {
        std::vector<unsigned> out;
        for (unsigned s = 1; s < order; ++s) {
            if (contains(s)) out.push_back(s);
        }
        return out;
    }

    friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;
};

/// Dense digraph on at most 64 vertices.
struct Digraph {
    unsigned n = 0;
    std::vector<std::uint64_t> out; ///< out[u] bit v: arc u -> v
    std::vector<std::uint64_t> in;  ///< in[v] bit u: arc u -> v

    explicit Digraph(unsigned order = 0) : n(order), out(order, 0), in(order, 0) {
        if (order > kHardMaxOrder) throw DomainError("Digraph: order exceeds 64");
    }

    void add_arc(unsigned u, unsigned v) {
        out[u] |= std::uint64_t{1} << v;
        in[v] |= std::uint64_t{1} << u;
    }

    bool has_arc(unsigned u, unsigned v) const { return (out[u] >> v) & 1U; }

    /// Arc u -> v iff v - u (mod n) is in S.
    static Digraph circulant(const ConnectionSet& s) {
        Digraph g(s.order);
        for (unsigned u = 0; u < s.order; ++u) {
            for (unsigned d = 1; d < s.order; ++d) {
                if (s.contains(d)) g.add_arc(u, (u + d) % s.order);
            }
        }
        return g;
    }

    /// The digraph with vertex v renamed to perm[v].
    Digraph relabeled(const std::vector<unsigned>& perm) const {
        Digraph g(n);
        for (unsigned u = 0; u < n; ++u) {
            for (unsigned v = 0; v < n; ++v) {
                if (has_arc(u, v)) g.add_arc(perm[u], perm[v]);
            }
        }
        return g;
    }
};

/// Byte string equal for two digraphs exactly when they are isomorphic.
struct CanonicalForm {
    unsigned order = 0;
    std::vector<std::uint8_t> certificate;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

using Cell = std::vector<unsigned>;
using Partition = std::vector<Cell>;
using Rows = std::vector<std::uint64_t>;

inline std::uint64_t cell_mask(const Cell& c) {
    std::uint64_t m = 0;
    for (auto v : c) m |= std::uint64_t{1} << v;
    return m;
}

// Splits `target` by (out-degree, in-degree) into `splitter`. Returns the
// pieces in ascending key order; a single piece means no split.
inline std::vector<Cell> split_cell(const Digraph& g, const Cell& target, std::uint64_t splitter) {
    std::vector<std::pair<std::pair<unsigned, unsigned>, unsigned>> keyed;
    keyed.reserve(target.size());
    for (auto v : target) {
        keyed.push_back({{static_cast<unsigned>(std::popcount(g.out[v] & splitter)),
                          static_cast<unsigned>(std::popcount(g.in[v] & splitter))},
                         v});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Cell> pieces;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
        pieces.back().push_back(keyed[i].second);
    }
    return pieces;
}

// Equitable refinement. Cells are visited by position and split pieces are
// ordered by their degree keys, so the result is equivariant under relabeling.
inline void refine(const Digraph& g, Partition& part) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < part.size() && !changed; ++i) {
            const std::uint64_t splitter = cell_mask(part[i]);
            for (std::size_t j = 0; j < part.size(); ++j) {
                if (part[j].size() < 2) continue;
                auto pieces = split_cell(g, part[j], splitter);
                if (pieces.size() < 2) continue;
                part.erase(part.begin() + static_cast<std::ptrdiff_t>(j));
                part.insert(part.begin() + static_cast<std::ptrdiff_t>(j), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

class Labeler {
public:
    explicit Labeler(const Digraph& g) : g_(g) {}

    CanonicalForm run() {
        Partition unit(1);
        for (unsigned v = 0; v < g_.n; ++v) unit[0].push_back(v);
        std::vector<unsigned> prefix;
        if (g_.n > 0) visit(std::move(unit), prefix);
        CanonicalForm cf{g_.n, {}};
        cf.certificate.push_back(static_cast<std::uint8_t>(g_.n));
        for (auto row : best_rows_) {
            for (unsigned b = 0; b < (g_.n + 7) / 8; ++b) cf.certificate.push_back(static_cast<std::uint8_t>(row >> (8 * b)));
        }
        return cf;
    }

private:
    // Returns the depth at which the search resumes; shallower than the
    // caller's depth means "abandon this node".
    std::size_t visit(Partition part, std::vector<unsigned>& prefix) {
        const std::size_t depth = prefix.size();
        refine(g_, part);
        if (part.size() == g_.n) return leaf(part, prefix);

        std::size_t target = 0;
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (part[i].size() < 2) continue;
            if (part[target].size() < 2 || part[i].size() < part[target].size()) target = i;
        }
        const Cell cell = part[target];
        std::vector<unsigned> explored;
        for (auto v : cell) {
            if (!explored.empty() && same_orbit_as_any(v, explored, prefix)) continue;
            Partition child = part;
            Cell rest;
            for (auto w : cell) {
                if (w != v) rest.push_back(w);
            }
            child[target] = Cell{v};
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
            prefix.push_back(v);
            std::size_t resume = visit(std::move(child), prefix);
            prefix.pop_back();
            if (resume < depth) return resume;
            explored.push_back(v);
        }
        return depth;
    }

    std::size_t leaf(const Partition& part, const std::vector<unsigned>& prefix) {
        std::vector<unsigned> labeling(g_.n); // position -> vertex
        std::vector<unsigned> position(g_.n);
        for (unsigned i = 0; i < g_.n; ++i) {
            labeling[i] = part[i][0];
            position[part[i][0]] = i;
        }
        Rows rows(g_.n, 0);
        for (unsigned i = 0; i < g_.n; ++i) {
            std::uint64_t r = 0;
            std::uint64_t nb = g_.out[labeling[i]];
            while (nb) {
                unsigned v = static_cast<unsigned>(std::countr_zero(nb));
                nb &= nb - 1;
                r |= std::uint64_t{1} << position[v];
            }
            rows[i] = r;
        }
        if (!have_first_) {
            have_first_ = true;
            first_rows_ = best_rows_ = rows;
            first_labeling_ = best_labeling_ = labeling;
            first_prefix_ = best_prefix_ = prefix;
            return prefix.size();
        }
        if (rows == first_rows_) {
            record_automorphism(labeling, first_labeling_);
            return common_prefix(prefix, first_prefix_);
        }
        if (rows == best_rows_) {
            record_automorphism(labeling, best_labeling_);
            return common_prefix(prefix, best_prefix_);
        }
        if (rows < best_rows_) {
            best_rows_ = rows;
            best_labeling_ = labeling;
            best_prefix_ = prefix;
        }
        return prefix.size();
    }

    static std::size_t common_prefix(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        return k;
    }

    // Both labelings give the same relabeled graph, so from[i] -> to[i] is an automorphism.
    void record_automorphism(const std::vector<unsigned>& from, const std::vector<unsigned>& to) {
        std::vector<unsigned> gamma(g_.n);
        for (unsigned i = 0; i < g_.n; ++i) gamma[from[i]] = to[i];
        automorphisms_.push_back(std::move(gamma));
    }

    // Orbits of the group generated by the recorded automorphisms that fix
    // every individualized vertex.
    bool same_orbit_as_any(unsigned v, const std::vector<unsigned>& explored, const std::vector<unsigned>& prefix) {
        std::vector<unsigned> parent(g_.n);
        std::iota(parent.begin(), parent.end(), 0U);
        std::function<unsigned(unsigned)> find = [&](unsigned x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](unsigned p) { return gamma[p] == p; });
            if (!fixes) continue;
            any = true;
            for (unsigned x = 0; x < g_.n; ++x) parent[find(x)] = find(gamma[x]);
        }
        if (!any) return false;
        const unsigned root = find(v);
        return std::any_of(explored.begin(), explored.end(), [&](unsigned u) { return find(u) == root; });
    }

    const Digraph& g_;
    bool have_first_ = false;
    Rows first_rows_, best_rows_;
    std::vector<unsigned> first_labeling_, best_labeling_;
    std::vector<unsigned> first_prefix_, best_prefix_;
    std::vector<std::vector<unsigned>> automorphisms_;
};

} // namespace detail

inline CanonicalForm canonical_form(const Digraph& g) { return detail::Labeler(g).run(); }

inline CanonicalForm canonical_form(const ConnectionSet& s) { return canonical_form(Digraph::circulant(s)); }

inline bool isomorphic(const ConnectionSet& a, const ConnectionSet& b) {
    return a.order == b.order && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

/// Complement within the complete loopless digraph is isomorphic to the set itself.
inline bool is_self_complementary(const ConnectionSet& s) {
    ConnectionSet c = s.complement();
    return s.size() == c.size() && canonical_form(s) == canonical_form(c);
}

struct Options {
    bool allow_slow = false;
};

/// Largest order enumerated for a class, with and without the slow gate.
/// Undirected, tournament and oriented classes visit far fewer connection
/// sets than 2^(n-1), so they reach further.
inline unsigned max_order(CirculantClass cls, bool allow_slow) {
    switch (cls) {
    case CirculantClass::u:
    case CirculantClass::su:
    case CirculantClass::t: return allow_slow ? 40 : 24;
    case CirculantClass::o: return allow_slow ? 22 : 16;
    case CirculantClass::d:
    case CirculantClass::sd: return allow_slow ? 20 : 16;
    }
    return 16;
}

inline void check_range(unsigned n, CirculantClass cls, const Options& opt) {
    if (n == 0 || n > max_order(cls, true)) {
        throw UnsupportedError("oracle: order " + std::to_string(n) + " is outside the supported range for class " +
                               std::string(class_tag(cls)));
    }
    if (n > max_order(cls, opt.allow_slow)) {
        throw ResourceError("oracle: order " + std::to_string(n) + " for class " + std::string(class_tag(cls)) +
                            " needs the slow gate (allow_slow)");
    }
}

/// Calls f on every connection set of order n admissible for the class.
/// Self-complementarity is decided with the canonical labeller.
inline void for_each_admissible(unsigned n, CirculantClass cls, const std::function<void(const ConnectionSet&)>& f) {
    // Inverse pairs {s, n-s} with s < n-s, and the involution n/2 for even n.
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned s = 1; 2 * s < n; ++s) pairs.emplace_back(s, n - s);
    const bool has_involution = n % 2 == 0 && n >= 2;

    auto bit = [](unsigned s) { return std::uint64_t{1} << s; };

    switch (cls) {
    case CirculantClass::d:
    case CirculantClass::sd: {
        const std::uint64_t count = n == 0 ? 0 : std::uint64_t{1} << (n - 1);
        for (std::uint64_t m = 0; m < count; ++m) {
            ConnectionSet s{n, m << 1};
            if (cls == CirculantClass::sd && !is_self_complementary(s)) continue;
            f(s);
        }
        return;
    }
    case CirculantClass::u:
    case CirculantClass::su: {
        const unsigned k = static_cast<unsigned>(pairs.size()) + (has_involution ? 1U : 0U);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
            ConnectionSet s{n, 0};
            for (unsigned i = 0; i < pairs.size(); ++i) {
                if ((m >> i) & 1U) s.members |= bit(pairs[i].first) | bit(pairs[i].second);
            }
            if (has_involution && ((m >> pairs.size()) & 1U)) s.members |= bit(n / 2);
            if (cls == CirculantClass::su && !is_self_complementary(s)) continue;
            f(s);
        }
        return;
    }
    case CirculantClass::o: {
        // each pair contributes nothing, s or n-s; the involution can never appear
        const auto k = pairs.size();
        std::vector<unsigned> digit(k, 0);
        while (true) {
            ConnectionSet s{n, 0};
            for (std::size_t i = 0; i < k; ++i) {
                if (digit[i] == 1) s.members |= bit(pairs[i].first);
                if (digit[i] == 2) s.members |= bit(pairs[i].second);
            }
            f(s);
            std::size_t i = 0;
            while (i < k && digit[i] == 2) digit[i++] = 0;
            if (i == k) break;
            ++digit[i];
        }
        return;
    }
    case CirculantClass::t: {
        if (n % 2 == 0) return;
        // exactly one of s, n-s from every pair
        const auto k = pairs.size();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
            ConnectionSet s{n, 0};
            for (std::size_t i = 0; i < k; ++i) s.members |= bit(((m >> i) & 1U) ? pairs[i].second : pairs[i].first);
            f(s);
        }
        return;
    }
    }
}

/// One isomorphism class found by the oracle.
struct ClassRecord {
    unsigned order = 0;
    unsigned valency = 0;
    ConnectionSet representative; ///< lexicographically least member list in the class
    std::uint64_t class_size = 0; ///< connection sets in the class

    friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

namespace detail {

inline bool lex_less(const ConnectionSet& a, const ConnectionSet& b) { return a.member_list() < b.member_list(); }

} // namespace detail

/// All isomorphism classes of admissible connection sets, sorted by
/// (valency, representative).
inline std::vector<ClassRecord> isomorphism_classes(unsigned n, CirculantClass cls, const Options& opt = {}) {
    check_range(n, cls, opt);
    std::map<CanonicalForm, ClassRecord> classes;
    for_each_admissible(n, cls, [&](const ConnectionSet& s) {
        auto [it, inserted] = classes.try_emplace(canonical_form(s), ClassRecord{n, s.size(), s, 0});
        ClassRecord& rec = it->second;
        if (rec.valency != s.size()) throw ConsistencyError("oracle: isomorphic circulants with different valency");
        ++rec.class_size;
        if (!inserted && detail::lex_less(s, rec.representative)) rec.representative = s;
    });
    std::vector<ClassRecord> out;
    out.reserve(classes.size());
    for (auto& [cf, rec] : classes) out.push_back(rec);
    std::sort(out.begin(), out.end(), [](const ClassRecord& a, const ClassRecord& b) {
        if (a.valency != b.valency) return a.valency < b.valency;
        return detail::lex_less(a.representative, b.representative);
    });
    return out;
}

/// Number of isomorphism classes, with the valency series for d, u and o.
inline CountResult enumerate(unsigned n, CirculantClass cls, const Options& opt = {}) {
    auto classes = isomorphism_classes(n, cls, opt);
    CountResult r{n, cls, BigInt(classes.size()), std::nullopt, Provenance::oracle};
    if (has_valency_series(cls)) {
        std::vector<BigInt> series(n, 0);
        for (const auto& c : classes) series[c.valency] += 1;
        r.by_valency = UniPoly(std::move(series));
    }
    return r;
}

inline std::vector<unsigned> units(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned m = 1; m <= n; ++m) {
        if (std::gcd(m % n, n) == 1) out.push_back(m % n);
    }
    if (n == 1) out = {0};
    return out;
}

/// Least bitmask among the multiplier images mS, m a unit mod n.
inline std::uint64_t multiplier_orbit_key(const ConnectionSet& s, const std::vector<unsigned>& unit_list) {
    std::uint64_t best = s.members;
    for (auto m : unit_list) best = std::min(best, s.multiplied(m).members);
    return best;
}

/// Orbits of admissible connection sets under S -> mS.
inline std::uint64_t cayley_classes(unsigned n, CirculantClass cls, const Options& opt = {}) {
    check_range(n, cls, opt);
    const auto unit_list = units(n);
    std::set<std::uint64_t> orbits;
    for_each_admissible(n, cls, [&](const ConnectionSet& s) { orbits.insert(multiplier_orbit_key(s, unit_list)); });
    return orbits.size();
}

struct NonCiReport {
    std::uint64_t classes = 0;         ///< isomorphism classes made of two or more multiplier orbits
    std::uint64_t orbits = 0;          ///< multiplier orbits inside those classes
    std::uint64_t connection_sets = 0; ///< connection sets inside those classes

    friend bool operator==(const NonCiReport&, const NonCiReport&) = default;
};

inline NonCiReport non_ci_count(unsigned n, CirculantClass cls, const Options& opt = {}) {
    check_range(n, cls, opt);
    const auto unit_list = units(n);
    struct Tally {
        std::set<std::uint64_t> orbits;
        std::uint64_t sets = 0;
    };
    std::map<CanonicalForm, Tally> by_class;
    for_each_admissible(n, cls, [&](const ConnectionSet& s) {
        Tally& t = by_class[canonical_form(s)];
        t.orbits.insert(multiplier_orbit_key(s, unit_list));
        ++t.sets;
    });
    NonCiReport r;
    for (const auto& [cf, t] : by_class) {
        if (t.orbits.size() < 2) continue;
        ++r.classes;
        r.orbits += t.orbits.size();
        r.connection_sets += t.sets;
    }
    return r;
}

struct SelfComplementaryPartition {
    std::uint64_t undirected = 0;
    std::uint64_t tournament = 0;
    std::uint64_t mixed = 0;

    std::uint64_t total() const { return undirected + tournament + mixed; }

    friend bool operator==(const SelfComplementaryPartition&, const SelfComplementaryPartition&) = default;
};

/// Splits the self-complementary classes of odd order n by symmetry type.
/// Being undirected or a tournament is preserved by isomorphism, so one
/// representative per class decides.
inline SelfComplementaryPartition classify_self_complementary(unsigned n, const Options& opt = {}) {
    if (n % 2 == 0) throw DomainError("classify_self_complementary: order must be odd");
    SelfComplementaryPartition part;
    for (const auto& c : isomorphism_classes(n, CirculantClass::sd, opt)) {
        if (c.representative.is_undirected()) ++part.undirected;
        else if (c.representative.is_tournament()) ++part.tournament;
        else ++part.mixed;
    }
    return part;
}

} // namespace circulant::oracle
