#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "complen/perm.hpp"

namespace complen {

// How new base points are picked when the base must grow.
//   1. first point of `prescribed` moved by the residue,
//   2. smallest moved point in [pref_lo, pref_hi)   (used by action splits),
//   3. moved point whose orbit under the original generators is largest,
//      ties broken by smallest point index.
//
// With `zoned` set, [pref_lo, pref_hi) becomes a hard zone: levels based in
// the zone always form a prefix of the chain, and every strong generator
// stored at the levels after that prefix fixes the zone pointwise.  Requires
// the zone to be invariant under the group.  This is what makes the orbit
// length products split cleanly into an image part and a kernel part.
struct BaseSelection {
    std::vector<Point> prescribed;
    Point pref_lo = 0, pref_hi = 0;
    bool zoned = false;
};

struct StripResult {
    Perm residue;
    unsigned stop;  // level where sifting failed; == num_levels() if all bases fixed
};

// Base and strong generating set with Schreier-vector transversals.
//
// Two ways to a *verified* chain:
//  - deterministic(): classic Schreier-Sims; every Schreier generator is
//    sifted to the identity before the chain is declared complete.
//  - with_known_order(): generators plus random products are sifted in until
//    prod(fundamental orbit lengths) equals a target order.  Since the product
//    never exceeds |<strong gens>| and the strong generators all lie in the
//    group, hitting a proven order of <gens> is an exact certificate of chain
//    validity.  If random mixing stalls, a deterministic sweep finishes the
//    job and a target mismatch throws instead of looping.
class Chain {
  public:
    struct Level {
        Point beta = 0;
        std::vector<std::uint32_t> gens;  // indices into the shared pool
        std::vector<Point> orbit;         // BFS order, orbit[0] == beta
        std::vector<std::uint32_t> pos;   // point -> orbit position + 1, 0 if absent
        std::vector<Point> parent;        // Schreier tree edges
        std::vector<std::uint32_t> edge;  // pool index of the edge generator
        std::vector<std::uint32_t> done;  // per orbit position: #gens already swept
        bool dirty = false;
    };

    static Chain deterministic(unsigned n, const std::vector<Perm>& gens, BaseSelection sel = {}) {
        Chain c(n, gens, std::move(sel));
        for (const auto& g : gens) c.insert_element(g, 0);
        c.closure();
        c.verified_ = true;
        return c;
    }

    static Chain with_known_order(unsigned n, const std::vector<Perm>& gens, const BigInt& target,
                                  BaseSelection sel = {}, std::uint64_t seed = 0x5eedULL,
                                  const std::function<std::vector<Perm>(std::size_t)>& more = nullptr) {
        Chain c(n, gens, std::move(sel));
        for (const auto& g : gens) c.insert_element(g, 0);
        if (c.order() == target) {
            c.verified_ = true;
            return c;
        }
        if (gens.empty()) throw std::runtime_error("Chain: no generators but target order > 1");
        std::mt19937_64 rng(seed);
        std::vector<Perm> pool = gens;
        while (pool.size() < 8) pool.push_back(pool[pool.size() % gens.size()]);
        std::size_t pulls = 0;
        unsigned stall = 0;
        while (c.order() < target) {
            if (stall > 384) {
                stall = 0;
                c.closure();  // deterministic backstop
                if (c.order() == target) break;
                if (more) {
                    auto extra = more(pulls++);
                    if (extra.empty()) throw std::runtime_error("Chain: generator source exhausted below target order");
                    for (auto& g : extra) {
                        c.insert_element(g, 0);
                        pool.push_back(std::move(g));
                    }
                    continue;
                }
                throw std::runtime_error("Chain: certified order differs from the claimed order law");
            }
            auto a = rng() % pool.size(), b = rng() % pool.size();
            if ((rng() & 3u) == 0) pool[a] = pool[a] * pool[b].inverse();
            else pool[a] = pool[a] * pool[b];
            stall = c.insert_element(pool[a], 0) ? 0 : stall + 1;
        }
        if (c.order() != target) throw std::runtime_error("Chain: overshot the claimed order");  // impossible by construction
        c.verified_ = true;
        return c;
    }

    unsigned degree() const { return n_; }
    unsigned num_levels() const { return static_cast<unsigned>(levels_.size()); }
    const Level& level(unsigned i) const { return levels_[i]; }
    bool verified() const { return verified_; }

    std::vector<Point> base() const {
        std::vector<Point> b;
        for (const auto& l : levels_) b.push_back(l.beta);
        return b;
    }

    const BigInt& order() const {
        order_ = 1;
        for (const auto& l : levels_) order_ *= static_cast<std::uint64_t>(l.orbit.size());
        return order_;
    }

    // prod of fundamental orbit lengths from level L down (the order of the
    // subgroup generated by the strong generators at those levels, once the
    // chain is verified).
    BigInt order_below(unsigned L) const {
        BigInt o = 1;
        for (unsigned i = L; i < levels_.size(); ++i) o *= static_cast<std::uint64_t>(levels_[i].orbit.size());
        return o;
    }

    BigInt order_prefix(unsigned L) const {
        BigInt o = 1;
        for (unsigned i = 0; i < L && i < levels_.size(); ++i) o *= static_cast<std::uint64_t>(levels_[i].orbit.size());
        return o;
    }

    // Number of levels based inside the zone (zoned chains only).
    unsigned zone_levels() const { return zone_count_; }

    StripResult strip(Perm g, unsigned from = 0) const {
        for (unsigned i = from; i < levels_.size(); ++i) {
            const Level& L = levels_[i];
            Point beta = g[L.beta];
            if (L.pos[beta] == 0) return {std::move(g), i};
            while (beta != L.beta) {  // multiply by the inverse transversal element, edge by edge
                g = g * pool_inv_[L.edge[beta]];
                beta = g[L.beta];
            }
        }
        return {std::move(g), num_levels()};
    }

    bool contains(const Perm& g) const {
        if (g.degree() != n_) return false;
        auto r = strip(g);
        return r.stop == num_levels() && r.residue.is_identity();
    }

    // Transversal element u with u(level.beta) == pt.
    Perm transversal(unsigned lvl, Point pt) const {
        const Level& L = levels_[lvl];
        if (L.pos[pt] == 0) throw std::invalid_argument("Chain: point outside fundamental orbit");
        std::vector<std::uint32_t> edges;
        for (Point x = pt; x != L.beta; x = L.parent[x]) edges.push_back(L.edge[x]);
        Perm u(n_);
        for (auto it = edges.rbegin(); it != edges.rend(); ++it) u = u * pool_[*it];
        return u;
    }

    // Exact uniform sampling: one uniform transversal element per level.
    Perm random_element(std::mt19937_64& rng) const {
        Perm g(n_);
        for (unsigned i = num_levels(); i-- > 0;) {
            const Level& L = levels_[i];
            Point pt = L.orbit[rng() % L.orbit.size()];
            if (pt == L.beta) continue;
            g = g * transversal(i, pt);
        }
        return g;
    }

    // Factor a member as transversal coordinates (level, orbit point), such
    // that g == u_{m-1} * ... * u_0 with the deepest factor applied first.
    std::vector<std::pair<unsigned, Point>> factor(const Perm& g) const {
        std::vector<std::pair<unsigned, Point>> coords;
        Perm h = g;
        for (unsigned i = 0; i < num_levels(); ++i) {
            const Level& L = levels_[i];
            Point beta = h[L.beta];
            if (L.pos[beta] == 0) throw std::invalid_argument("Chain: factor of a non-member");
            coords.emplace_back(i, beta);
            while (beta != L.beta) {
                h = h * pool_inv_[L.edge[beta]];
                beta = h[L.beta];
            }
        }
        if (!h.is_identity()) throw std::invalid_argument("Chain: factor of a non-member");
        return coords;
    }

    Perm evaluate_factorization(const std::vector<std::pair<unsigned, Point>>& coords) const {
        Perm g(n_);
        for (auto it = coords.rbegin(); it != coords.rend(); ++it)
            if (it->second != levels_[it->first].beta) g = g * transversal(it->first, it->second);
        return g;
    }

    // Enumerate all elements (intended for small groups; caller checks order).
    void enumerate(const std::function<void(const Perm&)>& fn) const {
        Perm id(n_);
        enumerate_rec(num_levels(), id, fn);
    }

    std::vector<Perm> level_gens(unsigned lvl) const {
        std::vector<Perm> out;
        for (auto gi : levels_[lvl].gens) out.push_back(pool_[gi]);
        return out;
    }

    // All strong generators active at or below level L (deduplicated).
    std::vector<Perm> strong_gens_below(unsigned L) const {
        std::vector<bool> used(pool_.size(), false);
        std::vector<Perm> out;
        for (unsigned i = L; i < levels_.size(); ++i)
            for (auto gi : levels_[i].gens)
                if (!used[gi]) {
                    used[gi] = true;
                    out.push_back(pool_[gi]);
                }
        return out;
    }

    // First level whose base point lies outside [lo, hi); num_levels() if none.
    unsigned first_level_outside(Point lo, Point hi) const {
        for (unsigned i = 0; i < levels_.size(); ++i)
            if (!(levels_[i].beta >= lo && levels_[i].beta < hi)) return i;
        return num_levels();
    }

    // A point of [lo, hi) moved by some strong generator at level >= L, if any.
    std::optional<Point> moved_in_range_below(unsigned L, Point lo, Point hi) const {
        for (unsigned i = L; i < levels_.size(); ++i)
            for (auto gi : levels_[i].gens)
                for (Point x = lo; x < hi; ++x)
                    if (pool_[gi][x] != x) return x;
        return std::nullopt;
    }

  private:
    Chain(unsigned n, const std::vector<Perm>& gens, BaseSelection sel) : n_(n), sel_(std::move(sel)) {
        for (const auto& g : gens)
            if (g.degree() != n) throw std::invalid_argument("Chain: generator degree mismatch");
        // orbit sizes under the full generator set, for base selection
        root_orbit_size_.assign(n, 1);
        std::vector<Point> repr(n);
        for (Point i = 0; i < n; ++i) repr[i] = i;
        std::function<Point(Point)> find = [&](Point x) {
            while (repr[x] != x) x = repr[x] = repr[repr[x]];
            return x;
        };
        for (const auto& g : gens)
            for (Point i = 0; i < n; ++i) {
                Point a = find(i), b = find(g[i]);
                if (a != b) repr[a] = b;
            }
        std::vector<std::uint32_t> count(n, 0);
        for (Point i = 0; i < n; ++i) ++count[find(i)];
        for (Point i = 0; i < n; ++i) root_orbit_size_[i] = count[find(i)];
    }

    Point select_base_point(const Perm& residue) const {
        for (Point p : sel_.prescribed)
            if (residue[p] != p) return p;
        for (Point p = sel_.pref_lo; p < sel_.pref_hi; ++p)
            if (residue[p] != p) return p;
        Point best = 0;
        std::uint64_t best_sz = 0;
        for (Point p = 0; p < n_; ++p)
            if (residue[p] != p && root_orbit_size_[p] > best_sz) {
                best = p;
                best_sz = root_orbit_size_[p];
            }
        if (best_sz == 0) throw std::logic_error("Chain: base point requested for the identity");
        return best;
    }

    void new_level_at(unsigned idx, Point beta) {
        Level L;
        L.beta = beta;
        L.pos.assign(n_, 0);
        L.parent.assign(n_, 0);
        L.edge.assign(n_, 0);
        L.orbit = {beta};
        L.pos[beta] = 1;
        L.done = {0};
        levels_.insert(levels_.begin() + idx, std::move(L));
    }

    bool in_zone(Point p) const { return p >= sel_.pref_lo && p < sel_.pref_hi; }

    // Smallest zone point moved by g, preferring prescribed ones; kMaxDegree if none.
    Point moved_zone_point(const Perm& g) const {
        for (Point p : sel_.prescribed)
            if (in_zone(p) && g[p] != p) return p;
        for (Point p = sel_.pref_lo; p < sel_.pref_hi; ++p)
            if (g[p] != p) return p;
        return kMaxDegree;
    }

    void extend_orbit(unsigned lvl, std::uint32_t new_gen) {
        Level& L = levels_[lvl];
        L.dirty = true;
        std::vector<Point> queue;
        const Perm& g = pool_[new_gen];
        for (std::size_t k = 0; k < L.orbit.size(); ++k) {
            Point q = g[L.orbit[k]];
            if (L.pos[q] == 0) {
                L.pos[q] = static_cast<std::uint32_t>(L.orbit.size()) + 1;
                L.parent[q] = L.orbit[k];
                L.edge[q] = new_gen;
                L.orbit.push_back(q);
                L.done.push_back(0);
                queue.push_back(q);
            }
        }
        for (std::size_t h = 0; h < queue.size(); ++h) {
            for (auto gi : L.gens) {
                Point q = pool_[gi][queue[h]];
                if (L.pos[q] == 0) {
                    L.pos[q] = static_cast<std::uint32_t>(L.orbit.size()) + 1;
                    L.parent[q] = queue[h];
                    L.edge[q] = gi;
                    L.orbit.push_back(q);
                    L.done.push_back(0);
                    queue.push_back(q);
                }
            }
        }
    }

    std::uint32_t register_strong_gen(Perm res) {
        std::uint32_t gi = static_cast<std::uint32_t>(pool_.size());
        pool_inv_.push_back(res.inverse());
        pool_.push_back(std::move(res));
        return gi;
    }

    void attach_gen(std::uint32_t gi, unsigned lo, unsigned hi) {
        for (unsigned l = lo; l <= hi && l < num_levels(); ++l) {
            levels_[l].gens.push_back(gi);
            levels_[l].dirty = true;
            extend_orbit(l, gi);
        }
    }

    // Sift g from `from`; if a nontrivial residue remains, register it as a
    // strong generator on levels from..stop.  Returns true if the chain grew.
    //
    // Zoned chains route the residue by where it acts.  A residue that clears
    // every zone-based level yet still moves a zone point opens a fresh level
    // spliced at the zone boundary; that splice is sound because each deeper
    // generator fixes the zone pointwise, hence also the new base point.  A
    // residue that fixes the zone pointwise may sink past the boundary, which
    // keeps the pointwise-zone-stabilizer invariant of the suffix intact.
    bool insert_element(const Perm& g, unsigned from) {
        auto [res, stop] = strip(g, from);
        if (res.is_identity()) return false;
        if (sel_.zoned && stop >= zone_count_) {
            Point w = moved_zone_point(res);
            if (w != kMaxDegree) {
                if (from > zone_count_) throw std::logic_error("Chain: zone-moving residue below the boundary");
                new_level_at(zone_count_, w);
                std::uint32_t gi = register_strong_gen(std::move(res));
                attach_gen(gi, from, zone_count_);
                ++zone_count_;
                return true;
            }
        }
        if (stop == num_levels()) new_level_at(num_levels(), select_base_point(res));
        std::uint32_t gi = register_strong_gen(std::move(res));
        attach_gen(gi, from, stop);
        return true;
    }

    // Process every pending Schreier pair of level i. Residues are inserted at
    // deeper levels, which become dirty; level i itself is clean afterwards.
    void sweep(unsigned i) {
        // levels_ may reallocate when insert_element opens a new level, so the
        // Level is re-read through levels_[i] on every access.
        for (std::size_t k = 0; k < levels_[i].orbit.size(); ++k) {
            while (levels_[i].done[k] < levels_[i].gens.size()) {
                Point p = levels_[i].orbit[k];
                std::uint32_t gi = levels_[i].gens[levels_[i].done[k]++];
                Point q = pool_[gi][p];
                if (levels_[i].parent[q] == p && levels_[i].edge[q] == gi && q != levels_[i].beta)
                    continue;  // tree edge, Schreier generator is trivial by construction
                Perm sg = transversal(i, p) * pool_[gi] * transversal(i, q).inverse();
                if (!sg.is_identity()) insert_element(sg, i + 1);
            }
        }
        levels_[i].dirty = false;
    }

    void closure() {
        for (auto& l : levels_) l.dirty = true;
        while (true) {
            int deepest = -1;
            for (unsigned i = 0; i < levels_.size(); ++i)
                if (levels_[i].dirty) deepest = static_cast<int>(i);
            if (deepest < 0) break;
            sweep(static_cast<unsigned>(deepest));
        }
    }

    void enumerate_rec(unsigned lvl, const Perm& acc, const std::function<void(const Perm&)>& fn) const {
        if (lvl == 0) {
            fn(acc);
            return;
        }
        const Level& L = levels_[lvl - 1];
        for (Point pt : L.orbit) enumerate_rec(lvl - 1, pt == L.beta ? acc : acc * transversal(lvl - 1, pt), fn);
    }

    unsigned n_;
    BaseSelection sel_;
    unsigned zone_count_ = 0;
    std::vector<std::uint32_t> root_orbit_size_;
    std::vector<Perm> pool_, pool_inv_;
    std::vector<Level> levels_;
    bool verified_ = false;
    mutable BigInt order_;
};

}  // namespace complen
