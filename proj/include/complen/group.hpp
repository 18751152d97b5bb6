#pragma once

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>

#include "complen/bsgs.hpp"

namespace complen {

// Finite permutation group, immutable after construction.  The stabilizer
// chain is built lazily (thread-safe via call_once) and shared by copies.
//
// If a proven order is supplied the chain uses known-order completion,
// otherwise deterministic Schreier-Sims.
class PermGroup {
  public:
    explicit PermGroup(unsigned n = 1, std::vector<Perm> gens = {}) : n_(n) { adopt_gens(std::move(gens)); }

    static PermGroup with_claimed_order(unsigned n, std::vector<Perm> gens, BigInt order,
                                        std::uint64_t seed = 0x5eedULL) {
        PermGroup g(n, std::move(gens));
        g.claimed_order_ = std::move(order);
        g.seed_ = seed;
        return g;
    }

    static PermGroup from_chain(unsigned n, std::vector<Perm> gens, Chain ch) {
        PermGroup g(n, std::move(gens));
        g.cell_->chain.emplace(std::move(ch));
        g.cell_->ready = true;
        return g;
    }

    unsigned degree() const { return n_; }
    const std::vector<Perm>& generators() const { return gens_; }
    bool is_trivial_gens() const { return gens_.empty(); }

    const Chain& chain() const {
        if (!cell_->ready) {
            std::call_once(cell_->once, [&] {
                if (claimed_order_)
                    cell_->chain.emplace(Chain::with_known_order(n_, gens_, *claimed_order_, {}, seed_));
                else
                    cell_->chain.emplace(Chain::deterministic(n_, gens_));
                cell_->ready = true;
            });
        }
        return *cell_->chain;
    }

    const BigInt& order() const { return chain().order(); }
    bool contains(const Perm& g) const { return chain().contains(g); }

    const std::string& tag() const { return tag_; }
    PermGroup& set_tag(std::string t) {
        tag_ = std::move(t);
        return *this;
    }

  private:
    void adopt_gens(std::vector<Perm> gens) {
        std::unordered_set<std::size_t> seen;
        for (auto& g : gens) {
            if (g.degree() != n_) throw std::invalid_argument("PermGroup: generator degree mismatch");
            if (g.is_identity()) continue;
            if (!seen.insert(g.hash()).second) {
                bool dup = false;
                for (const auto& h : gens_) dup = dup || h == g;
                if (dup) continue;
            }
            gens_.push_back(std::move(g));
        }
        cell_ = std::make_shared<Cell>();
    }

    struct Cell {
        std::once_flag once;
        std::optional<Chain> chain;
        std::atomic<bool> ready{false};
    };

    unsigned n_;
    std::vector<Perm> gens_;
    std::optional<BigInt> claimed_order_;
    std::uint64_t seed_ = 0x5eedULL;
    std::string tag_;
    mutable std::shared_ptr<Cell> cell_;
};

inline std::vector<Point> orbit_of(const PermGroup& G, Point a) {
    std::vector<bool> seen(G.degree(), false);
    std::vector<Point> orb{a};
    seen[a] = true;
    for (std::size_t h = 0; h < orb.size(); ++h)
        for (const auto& g : G.generators()) {
            Point q = g[orb[h]];
            if (!seen[q]) {
                seen[q] = true;
                orb.push_back(q);
            }
        }
    return orb;
}

// Orbit partition, ordered by smallest element.
inline std::vector<std::vector<Point>> orbits(const PermGroup& G) {
    std::vector<bool> seen(G.degree(), false);
    std::vector<std::vector<Point>> out;
    for (Point p = 0; p < G.degree(); ++p) {
        if (seen[p]) continue;
        auto orb = orbit_of(G, p);
        for (Point q : orb) seen[q] = true;
        out.push_back(std::move(orb));
    }
    return out;
}

inline bool is_transitive(const PermGroup& G) {
    return G.degree() == 0 || orbit_of(G, 0).size() == G.degree();
}

// Omega(|G|): count of composition factors of the *order*, i.e. prime factors
// with multiplicity, obtained by factoring fundamental orbit lengths.  The
// group order itself is never factored.
inline unsigned omega_order(const PermGroup& G) {
    unsigned total = 0;
    const Chain& c = G.chain();
    for (unsigned i = 0; i < c.num_levels(); ++i) total += omega_u64(c.level(i).orbit.size());
    return total;
}

inline Perm random_element(const PermGroup& G, std::mt19937_64& rng) { return G.chain().random_element(rng); }

// Stabilizer of a point.  The orbit gives the exact target order |G|/|orbit|;
// uniform random elements are folded into the stabilizer until the chain
// certifies that order, with systematic Schreier generators as a fallback.
inline PermGroup point_stabilizer(const PermGroup& G, Point a, std::uint64_t seed = 0xAB1E) {
    const unsigned n = G.degree();
    std::vector<Point> orb{a};
    std::vector<std::int64_t> at(n, -1);
    std::vector<std::pair<Point, std::uint32_t>> tree(n);  // parent point, generator index
    at[a] = 0;
    for (std::size_t h = 0; h < orb.size(); ++h)
        for (std::uint32_t gi = 0; gi < G.generators().size(); ++gi) {
            Point q = G.generators()[gi][orb[h]];
            if (at[q] < 0) {
                at[q] = static_cast<std::int64_t>(orb.size());
                tree[q] = {orb[h], gi};
                orb.push_back(q);
            }
        }
    if (orb.size() == 1) return G;
    BigInt target = G.order() / orb.size();

    auto rep_to = [&](Point x) {  // u with u(a) == x
        std::vector<std::uint32_t> edges;
        for (Point y = x; y != a; y = tree[y].first) edges.push_back(tree[y].second);
        Perm u(n);
        for (auto it = edges.rbegin(); it != edges.rend(); ++it) u = u * G.generators()[*it];
        return u;
    };

    std::mt19937_64 rng(seed);
    std::vector<Perm> sgens;
    for (int i = 0; i < 6 && target > 1; ++i) {
        Perm g = random_element(G, rng);
        Perm s = g * rep_to(g[a]).inverse();
        if (!s.is_identity()) sgens.push_back(std::move(s));
    }
    std::size_t sch_k = 0, sch_g = 0;
    auto more = [&](std::size_t) {
        std::vector<Perm> batch;
        while (batch.size() < 64 && sch_k < orb.size()) {
            Point p = orb[sch_k];
            const Perm& s = G.generators()[sch_g];
            Perm sg = rep_to(p) * s * rep_to(s[p]).inverse();
            if (!sg.is_identity()) batch.push_back(std::move(sg));
            if (++sch_g == G.generators().size()) {
                sch_g = 0;
                ++sch_k;
            }
        }
        return batch;
    };
    Chain ch = Chain::with_known_order(n, sgens, target, {}, seed ^ 0x517AB, more);
    auto gens = ch.strong_gens_below(0);
    return PermGroup::from_chain(n, std::move(gens), std::move(ch));
}

inline PermGroup pointwise_stabilizer(const PermGroup& G, std::vector<Point> pts, std::uint64_t seed = 0xAB1E) {
    PermGroup H = G;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    unsigned step = 0;
    for (Point p : pts) H = point_stabilizer(H, p, seed + 0x9E3779B97F4A7C15ULL * ++step);
    return H;
}

// Smallest normal subgroup of G containing the given elements.
inline PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seed_elems) {
    const unsigned n = G.degree();
    std::vector<Perm> kg;
    for (const auto& e : seed_elems)
        if (!e.is_identity()) kg.push_back(e);
    if (kg.empty()) return PermGroup(n);
    Chain ch = Chain::deterministic(n, kg);
    std::size_t frontier = 0;
    while (frontier < kg.size()) {
        std::vector<Perm> fresh;
        for (; frontier < kg.size(); ++frontier)
            for (const auto& g : G.generators()) {
                Perm t = kg[frontier].conjugate_by(g);
                if (!ch.contains(t)) {
                    bool have = false;
                    for (const auto& f : fresh) have = have || f == t;
                    if (!have) fresh.push_back(std::move(t));
                }
            }
        if (fresh.empty()) break;
        for (auto& t : fresh) kg.push_back(std::move(t));
        ch = Chain::deterministic(n, kg);
    }
    return PermGroup::from_chain(n, std::move(kg), std::move(ch));
}

inline PermGroup derived_subgroup(const PermGroup& G) {
    std::vector<Perm> comms;
    const auto& gs = G.generators();
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j)
            comms.push_back(gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j]);
    return normal_closure(G, comms);
}

inline bool is_normal_in(const PermGroup& N, const PermGroup& G) {
    for (const auto& k : N.generators())
        for (const auto& g : G.generators())
            if (!N.contains(k.conjugate_by(g))) return false;
    return true;
}

inline bool is_subgroup_of(const PermGroup& H, const PermGroup& G) {
    for (const auto& h : H.generators())
        if (!G.contains(h)) return false;
    return true;
}

// Every orbit has length |G| exactly (point stabilizers are trivial).
inline bool is_semiregular(const PermGroup& G) {
    const BigInt& o = G.order();
    for (const auto& orb : orbits(G))
        if (BigInt(orb.size()) != o) return false;
    return true;
}

inline bool is_abelian(const PermGroup& G) {
    const auto& gens = G.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
    return true;
}

}  // namespace complen
