#pragma once

#include <unordered_map>

#include "complen/group.hpp"

namespace complen {

// Image and kernel of an action homomorphism, both with certified orders.
// gen_images[i] is the image of G.generators()[i] and the two stay aligned.
struct ActionSplit {
    PermGroup image;   // on the s new points
    PermGroup kernel;  // on the original domain
    std::vector<Perm> gen_images;
};

// Split G along the action g -> gen_images.  Internally builds one zoned
// stabilizer chain on the disjoint union (original domain first, then the s
// action points): base points inside the action range form a strict prefix,
// so the image order is the product over that prefix and the kernel is
// generated by the suffix strong generators, which fix the range pointwise.
// The combined group is isomorphic to G, so |G| serves as the exact target.
inline ActionSplit action_split(const PermGroup& G, unsigned s, const std::vector<Perm>& gen_images,
                                std::uint64_t seed = 0x51A7ULL) {
    const unsigned n = G.degree();
    if (gen_images.size() != G.generators().size())
        throw std::invalid_argument("action_split: one image per generator required");
    std::vector<Perm> comb;
    comb.reserve(gen_images.size());
    for (std::size_t i = 0; i < gen_images.size(); ++i) {
        const Perm& g = G.generators()[i];
        const Perm& a = gen_images[i];
        if (a.degree() != s) throw std::invalid_argument("action_split: image degree mismatch");
        std::vector<Point> im(n + s);
        for (Point x = 0; x < n; ++x) im[x] = g[x];
        for (Point y = 0; y < s; ++y) im[n + y] = n + a[y];
        comb.push_back(Perm::from_images(std::move(im)));
    }
    BaseSelection sel;
    sel.pref_lo = n;
    sel.pref_hi = n + s;
    sel.zoned = true;
    Chain ch = Chain::with_known_order(n + s, comb, G.order(), sel, seed);
    const unsigned t = ch.zone_levels();
    BigInt img_order = ch.order_prefix(t);
    BigInt ker_order = ch.order_below(t);
    std::vector<Perm> kgens;
    for (const auto& kg : ch.strong_gens_below(t)) {
        std::vector<Point> im(n);
        for (Point x = 0; x < n; ++x) im[x] = kg[x];
        kgens.push_back(Perm::from_images(std::move(im)));
    }
    PermGroup img = PermGroup::with_claimed_order(s, gen_images, std::move(img_order), seed ^ 0x9E37u);
    PermGroup ker = PermGroup::with_claimed_order(n, std::move(kgens), std::move(ker_order), seed ^ 0x79B9u);
    return {std::move(img), std::move(ker), gen_images};
}

// Action of G on one of its orbits.
inline ActionSplit restrict_to_orbit(const PermGroup& G, const std::vector<Point>& orb, std::uint64_t seed = 0x51A7ULL) {
    std::vector<std::int64_t> idx(G.degree(), -1);
    for (std::size_t i = 0; i < orb.size(); ++i) idx[orb[i]] = static_cast<std::int64_t>(i);
    std::vector<Perm> images;
    for (const auto& g : G.generators()) {
        std::vector<Point> im(orb.size());
        for (std::size_t i = 0; i < orb.size(); ++i) {
            std::int64_t j = idx[g[orb[i]]];
            if (j < 0) throw std::invalid_argument("restrict_to_orbit: set is not invariant");
            im[i] = static_cast<Point>(j);
        }
        images.push_back(Perm::from_images(std::move(im)));
    }
    return action_split(G, static_cast<unsigned>(orb.size()), images, seed);
}

// Same group on the points it actually moves (plus one point when nothing is
// moved, since a degree needs to stay positive).  Order is preserved.
inline PermGroup compact(const PermGroup& G) {
    std::vector<Point> moved;
    for (Point p = 0; p < G.degree(); ++p)
        for (const auto& g : G.generators())
            if (g[p] != p) {
                moved.push_back(p);
                break;
            }
    if (moved.empty()) return PermGroup(1);
    std::vector<std::int64_t> idx(G.degree(), -1);
    for (std::size_t i = 0; i < moved.size(); ++i) idx[moved[i]] = static_cast<std::int64_t>(i);
    std::vector<Perm> gens;
    for (const auto& g : G.generators()) {
        std::vector<Point> im(moved.size());
        for (std::size_t i = 0; i < moved.size(); ++i) im[i] = static_cast<Point>(idx[g[moved[i]]]);
        gens.push_back(Perm::from_images(std::move(im)));
    }
    return PermGroup::with_claimed_order(static_cast<unsigned>(moved.size()), std::move(gens), G.order());
}

// G-invariant partition into blocks of equal size.
struct BlockSystem {
    std::vector<std::uint32_t> block_of;  // point -> block id, ids ordered by smallest member
    unsigned num_blocks = 0;
    unsigned block_size = 0;
    bool trivial() const { return num_blocks <= 1 || block_size <= 1; }
};

// Finest G-invariant partition in which a and b share a block (G transitive).
inline BlockSystem minimal_block_system(const PermGroup& G, Point a, Point b) {
    const unsigned n = G.degree();
    std::vector<Point> up(n);
    for (Point i = 0; i < n; ++i) up[i] = i;
    std::function<Point(Point)> find = [&](Point x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    };
    std::vector<std::pair<Point, Point>> queue;
    auto unite = [&](Point x, Point y) {
        Point rx = find(x), ry = find(y);
        if (rx == ry) return false;
        up[rx] = ry;
        queue.emplace_back(x, y);
        return true;
    };
    unite(a, b);
    for (std::size_t h = 0; h < queue.size(); ++h) {
        auto [p, q] = queue[h];
        for (const auto& g : G.generators()) unite(g[p], g[q]);
    }
    BlockSystem bs;
    bs.block_of.assign(n, 0);
    std::unordered_map<Point, std::uint32_t> id;
    for (Point p = 0; p < n; ++p)
        bs.block_of[p] = id.emplace(find(p), static_cast<std::uint32_t>(id.size())).first->second;
    bs.num_blocks = static_cast<unsigned>(id.size());
    if (n % bs.num_blocks != 0) throw std::logic_error("minimal_block_system: uneven blocks (group not transitive?)");
    bs.block_size = n / bs.num_blocks;
    return bs;
}

// First nontrivial minimal block system found, if any (G transitive, n >= 2).
inline std::optional<BlockSystem> find_block_system(const PermGroup& G) {
    for (Point b = 1; b < G.degree(); ++b) {
        BlockSystem bs = minimal_block_system(G, 0, b);
        if (!bs.trivial() && bs.num_blocks < G.degree()) return bs;
    }
    return std::nullopt;
}

// Transitive with no block system between the two trivial ones.  Groups of
// degree < 2 do not count as primitive here.
inline bool is_primitive(const PermGroup& G) {
    if (G.degree() < 2 || !is_transitive(G)) return false;
    for (Point b = 1; b < G.degree(); ++b)
        if (minimal_block_system(G, 0, b).num_blocks > 1) return false;
    return true;
}

inline ActionSplit block_action(const PermGroup& G, const BlockSystem& bs, std::uint64_t seed = 0x51A7ULL) {
    if (bs.num_blocks < 2) throw std::invalid_argument("block_action: need at least two blocks");
    std::vector<Point> rep(bs.num_blocks, 0);
    std::vector<bool> have(bs.num_blocks, false);
    for (Point p = 0; p < G.degree(); ++p)
        if (!have[bs.block_of[p]]) {
            have[bs.block_of[p]] = true;
            rep[bs.block_of[p]] = p;
        }
    std::vector<Perm> images;
    for (const auto& g : G.generators()) {
        std::vector<Point> im(bs.num_blocks);
        for (std::uint32_t blk = 0; blk < bs.num_blocks; ++blk) im[blk] = bs.block_of[g[rep[blk]]];
        images.push_back(Perm::from_images(std::move(im)));
    }
    return action_split(G, bs.num_blocks, images, seed);
}

// Action of G on the orbits of a normal subgroup N.
inline ActionSplit quotient_action_on_orbits(const PermGroup& G, const PermGroup& N, std::uint64_t seed = 0x51A7ULL) {
    if (N.degree() != G.degree()) throw std::invalid_argument("quotient_action_on_orbits: degree mismatch");
    if (!is_normal_in(N, G)) throw std::invalid_argument("quotient_action_on_orbits: subgroup is not normal");
    auto orbs = orbits(N);
    std::vector<std::uint32_t> orbit_of(G.degree());
    std::vector<Point> rep(orbs.size());
    for (std::uint32_t i = 0; i < orbs.size(); ++i) {
        rep[i] = orbs[i][0];
        for (Point p : orbs[i]) orbit_of[p] = i;
    }
    std::vector<Perm> images;
    for (const auto& g : G.generators()) {
        std::vector<Point> im(orbs.size());
        for (std::uint32_t i = 0; i < orbs.size(); ++i) im[i] = orbit_of[g[rep[i]]];
        images.push_back(Perm::from_images(std::move(im)));
    }
    return action_split(G, static_cast<unsigned>(orbs.size()), images, seed);
}

struct VecHash {
    std::size_t operator()(const std::vector<Point>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Point p : v) {
            h ^= p;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Action of G on the right cosets of H by right multiplication.  Cosets are
// identified through a canonical representative: the element of H*g whose
// image tuple on H's base is lexicographically least.  Greedy minimisation
// down H's stabilizer chain finds it, and it is unique because two coset
// members agreeing on every base point of H differ by an element of H fixing
// the whole base, which is the identity.
inline ActionSplit coset_action(const PermGroup& G, const PermGroup& H, std::size_t max_index = 1u << 20,
                                std::uint64_t seed = 0x51A7ULL) {
    if (H.degree() != G.degree()) throw std::invalid_argument("coset_action: degree mismatch");
    for (const auto& h : H.generators())
        if (!G.contains(h)) throw std::invalid_argument("coset_action: not a subgroup");
    BigInt index = G.order() / H.order();
    if (index * H.order() != G.order()) throw std::logic_error("coset_action: order does not divide");
    if (index > max_index) throw std::runtime_error("coset_action: index above the configured cap");
    const unsigned N = index.convert_to<unsigned>();

    const Chain& hc = H.chain();
    auto canon = [&](Perm g) {
        for (unsigned i = 0; i < hc.num_levels(); ++i) {
            const auto& L = hc.level(i);
            Point best = L.beta;
            Point best_img = g[L.beta];
            for (Point p : L.orbit)
                if (g[p] < best_img) {
                    best = p;
                    best_img = g[p];
                }
            if (best != L.beta) g = hc.transversal(i, best) * g;
        }
        return g;
    };
    std::vector<Point> gbase = G.chain().base();
    auto key_of = [&](const Perm& c) {
        std::vector<Point> k;
        k.reserve(gbase.size());
        for (Point b : gbase) k.push_back(c[b]);
        return k;
    };

    std::unordered_map<std::vector<Point>, unsigned, VecHash> ids;
    std::vector<Perm> reps;
    reps.reserve(N);
    Perm r0 = canon(Perm(G.degree()));
    ids.emplace(key_of(r0), 0u);
    reps.push_back(std::move(r0));
    const auto& gens = G.generators();
    std::vector<std::vector<Point>> tab(gens.size(), std::vector<Point>(N));
    for (std::size_t h = 0; h < reps.size(); ++h) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
            Perm c = canon(reps[h] * gens[j]);
            auto k = key_of(c);
            auto it = ids.find(k);
            unsigned id;
            if (it == ids.end()) {
                id = static_cast<unsigned>(reps.size());
                if (id >= N) throw std::logic_error("coset_action: more cosets than the index");
                ids.emplace(std::move(k), id);
                reps.push_back(std::move(c));
            } else {
                id = it->second;
            }
            tab[j][h] = id;
        }
    }
    if (reps.size() != N) throw std::logic_error("coset_action: fewer cosets than the index");
    std::vector<Perm> images;
    for (auto& t : tab) images.push_back(Perm::from_images(std::move(t)));
    return action_split(G, N, images, seed);
}

}  // namespace complen
