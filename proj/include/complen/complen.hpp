#pragma once

#include <optional>
#include <string>

#include "complen/actions.hpp"

namespace complen {

// Number of prime factors with multiplicity, for integers all of whose prime
// factors are at most `bound` (orders of permutation groups divide n!, so the
// degree always works as a bound).
inline unsigned omega_smooth(BigInt v, unsigned bound) {
    if (v <= 0) throw std::invalid_argument("omega_smooth: positive values only");
    unsigned count = 0;
    for (BigInt p = 2; p <= bound && v > 1; ++p)
        while (v % p == 0) {
            v /= p;
            ++count;
        }
    if (v != 1) throw std::logic_error("omega_smooth: prime factor beyond the bound");
    return count;
}

// ---------------------------------------------------------------------------
// Orders of the finite simple groups up to 10^18, for certifying leaves.

namespace detail {

inline void push_simple_order(std::vector<std::uint64_t>& out, const BigInt& o) {
    static const BigInt limit("1000000000000000000");
    if (o <= limit) out.push_back(o.convert_to<std::uint64_t>());
}

inline std::vector<std::uint64_t> prime_powers_upto(std::uint64_t lim) {
    std::vector<bool> sieve(lim + 1, true);
    std::vector<std::uint64_t> pp;
    for (std::uint64_t p = 2; p <= lim; ++p) {
        if (!sieve[p]) continue;
        for (std::uint64_t m = p * p; m <= lim; m += p) sieve[m] = false;
        for (std::uint64_t v = p; v <= lim; v *= p) {
            pp.push_back(v);
            if (v > lim / p) break;
        }
    }
    std::sort(pp.begin(), pp.end());
    return pp;
}

inline BigInt psl_order(unsigned n, std::uint64_t q) {
    BigInt o = big_pow(BigInt(q), static_cast<std::uint64_t>(n) * (n - 1) / 2);
    for (unsigned i = 2; i <= n; ++i) o *= big_pow(BigInt(q), i) - 1;
    return o / std::gcd<std::uint64_t>(n, q - 1);
}

inline BigInt psu_order(unsigned n, std::uint64_t q) {
    BigInt o = big_pow(BigInt(q), static_cast<std::uint64_t>(n) * (n - 1) / 2);
    for (unsigned i = 2; i <= n; ++i) o *= big_pow(BigInt(q), i) - (i % 2 == 0 ? 1 : -1);
    return o / std::gcd<std::uint64_t>(n, q + 1);
}

inline BigInt psp_order(unsigned m, std::uint64_t q) {
    BigInt o = big_pow(BigInt(q), static_cast<std::uint64_t>(m) * m);
    for (unsigned i = 1; i <= m; ++i) o *= big_pow(BigInt(q), 2 * i) - 1;
    return o / std::gcd<std::uint64_t>(2, q - 1);
}

inline BigInt pomega_order(unsigned m, std::uint64_t q, int eps) {
    BigInt qm = big_pow(BigInt(q), m);
    BigInt o = big_pow(BigInt(q), static_cast<std::uint64_t>(m) * (m - 1)) * (qm - eps);
    for (unsigned i = 1; i < m; ++i) o *= big_pow(BigInt(q), 2 * i) - 1;
    BigInt g = (qm - eps) % 4 == 0 ? 4 : ((qm - eps) % 2 == 0 ? 2 : 1);
    return o / g;
}

}  // namespace detail

// Sorted orders of all nonabelian finite simple groups below 10^18.
inline const std::vector<std::uint64_t>& simple_group_orders() {
    static const std::vector<std::uint64_t> table = [] {
        using detail::push_simple_order;
        std::vector<std::uint64_t> t;
        const BigInt limit("1000000000000000000");

        BigInt fact = 12;
        for (unsigned n = 5; n <= 19; ++n) {
            fact *= n;  // n!/2
            push_simple_order(t, fact);
        }

        auto pp = detail::prime_powers_upto(1300000);
        for (unsigned n = 2; n <= 9; ++n)
            for (std::uint64_t q : pp) {
                if (n == 2 && q < 4) continue;  // solvable cases
                BigInt o = detail::psl_order(n, q);
                if (o > limit) break;
                push_simple_order(t, o);
            }
        for (unsigned n = 3; n <= 9; ++n)
            for (std::uint64_t q : pp) {
                if (n == 3 && q == 2) continue;
                BigInt o = detail::psu_order(n, q);
                if (o > limit) break;
                push_simple_order(t, o);
            }
        for (unsigned m = 2; m <= 7; ++m)
            for (std::uint64_t q : pp) {
                if (m == 2 && q == 2) continue;  // isomorphic to S6
                BigInt o = detail::psp_order(m, q);
                if (o > limit) break;
                push_simple_order(t, o);
            }
        for (unsigned m = 4; m <= 6; ++m)
            for (std::uint64_t q : pp) {
                BigInt oplus = detail::pomega_order(m, q, 1);
                if (oplus > limit) break;  // the minus type is larger still
                push_simple_order(t, oplus);
                push_simple_order(t, detail::pomega_order(m, q, -1));
            }
        for (std::uint64_t q : pp) {  // G2, q >= 3 (G2(2) has a proper derived subgroup)
            if (q < 3) continue;
            BigInt q6 = big_pow(BigInt(q), 6);
            BigInt o = q6 * (q6 - 1) * (BigInt(q) * q - 1);
            if (o > limit) break;
            push_simple_order(t, o);
        }
        for (std::uint64_t q = 8; q <= 2048; q *= 4)  // Suzuki, q an odd power of 2
            push_simple_order(t, BigInt(q) * q * (BigInt(q) * q + 1) * (q - 1));
        for (std::uint64_t q = 27; q <= 243; q *= 9) {  // small Ree, q an odd power of 3
            BigInt q3 = BigInt(q) * q * q;
            push_simple_order(t, q3 * (q3 + 1) * (q - 1));
        }
        for (std::uint64_t q : {2, 3}) {  // triality twisted D4
            BigInt q2 = BigInt(q) * q, q4 = q2 * q2, q6 = q4 * q2, q8 = q4 * q4, q12 = q6 * q6;
            push_simple_order(t, q12 * (q8 + q4 + 1) * (q6 - 1) * (q2 - 1));
        }
        push_simple_order(t, BigInt("3311126603366400"));  // F4(2)
        push_simple_order(t, BigInt(17971200));            // Tits group

        for (const char* s :
             {"7920", "95040", "443520", "10200960", "244823040",          // Mathieu
              "175560", "604800", "50232960",                              // Janko 1-3
              "44352000", "898128000", "495766656000", "42305421312000",   // HS, McL, Co3, Co2
              "448345497600", "4030387200", "145926144000",                // Suz, He, Ru
              "460815505920", "64561751654400",                            // ON, Fi22
              "273030912000000", "51765179004000000", "90745943887872000"  // HN, Ly, Th
             })
            push_simple_order(t, BigInt(s));

        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        return t;
    }();
    return table;
}

inline bool is_simple_group_order(const BigInt& o) {
    static const BigInt limit("1000000000000000000");
    if (o > limit) return false;
    const auto& t = simple_group_orders();
    return std::binary_search(t.begin(), t.end(), o.convert_to<std::uint64_t>());
}

// ---------------------------------------------------------------------------
// Composition length.

enum class Certainty { Certified, Probable };

struct TraceNode {
    std::string kind;    // trivial | orbit-split | block-split | derived-split |
                         // normal-split | abelian-leaf | simple-leaf
    std::string detail;
    BigInt length = 0;
    std::vector<TraceNode> kids;
};

struct LengthResult {
    BigInt length = 0;
    Certainty certainty = Certainty::Certified;
    TraceNode trace;
};

struct LengthOptions {
    unsigned probe_randoms = 64;
    std::uint64_t seed = 0xC0DEULL;
};

// Search for a proper nontrivial normal subgroup: normal closures of the
// generators, their pairwise commutators, seeded random elements, and the
// prime-power parts of all of these.  Returns the smallest closure found.
inline std::optional<PermGroup> probe_normal_subgroup(const PermGroup& G, unsigned randoms = 64,
                                                      std::uint64_t seed = 0xC0DEULL) {
    const BigInt total = G.order();
    std::vector<Perm> raw = G.generators();
    const auto& gens = G.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            raw.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
    std::mt19937_64 rng(seed);
    for (unsigned i = 0; i < randoms; ++i) raw.push_back(random_element(G, rng));

    std::vector<Perm> cands;
    std::unordered_set<std::size_t> seen;
    auto add = [&](const Perm& p) {
        if (p.is_identity()) return;
        if (seen.insert(PermHash{}(p)).second) cands.push_back(p);
    };
    for (const auto& x : raw) {
        add(x);
        BigInt m = x.order();
        for (auto [p, e] : x.order_factored()) {
            BigInt co = m;
            for (unsigned i = 0; i < e; ++i) co /= p;
            add(x.power(co));  // the p-part of x
        }
    }

    std::optional<PermGroup> best;
    for (const auto& y : cands) {
        PermGroup N = normal_closure(G, {y});
        if (N.order() < total && (!best || N.order() < best->order())) best = std::move(N);
        if (best && best->order() == 2) break;
    }
    return best;
}

namespace detail {

inline LengthResult length_rec(const PermGroup& G, const LengthOptions& opts);

inline LengthResult combine_split(const char* kind, std::string detail, LengthResult a, LengthResult b) {
    LengthResult res;
    res.length = a.length + b.length;
    res.certainty = (a.certainty == Certainty::Certified && b.certainty == Certainty::Certified)
                        ? Certainty::Certified
                        : Certainty::Probable;
    res.trace = TraceNode{kind, std::move(detail), res.length, {std::move(a.trace), std::move(b.trace)}};
    return res;
}

}  // namespace detail

inline LengthResult composition_length(const PermGroup& G, const LengthOptions& opts = {}) {
    return detail::length_rec(G, opts);
}

inline LengthResult detail::length_rec(const PermGroup& G, const LengthOptions& opts) {
    const BigInt total = G.order();
    if (total == 1) {
        LengthResult res;
        res.trace = TraceNode{"trivial", "", 0, {}};
        return res;
    }

    auto os = orbits(G);
    if (os.size() > 1) {
        ActionSplit split = restrict_to_orbit(G, os[0], opts.seed);
        auto a = length_rec(split.image, opts);
        auto b = length_rec(compact(split.kernel), opts);
        return combine_split("orbit-split", "orbit of size " + std::to_string(os[0].size()), std::move(a),
                             std::move(b));
    }

    if (auto bs = find_block_system(G)) {
        ActionSplit split = block_action(G, *bs, opts.seed);
        auto a = length_rec(split.image, opts);
        auto b = length_rec(compact(split.kernel), opts);
        return combine_split("block-split",
                             std::to_string(bs->num_blocks) + " blocks of " + std::to_string(bs->block_size),
                             std::move(a), std::move(b));
    }

    // primitive from here on
    PermGroup D = derived_subgroup(G);
    if (D.order() == 1) {
        LengthResult res;
        res.length = omega_order(G);
        res.trace = TraceNode{"abelian-leaf", "order " + total.str(), res.length, {}};
        return res;
    }
    if (D.order() < total) {
        BigInt index = total / D.order();
        LengthResult sub = length_rec(D, opts);
        LengthResult res;
        res.length = omega_smooth(index, G.degree()) + sub.length;
        res.certainty = sub.certainty;
        res.trace =
            TraceNode{"derived-split", "abelian quotient of order " + index.str(), res.length, {std::move(sub.trace)}};
        return res;
    }

    // perfect and primitive: hunt for a normal subgroup; a nontrivial one is
    // transitive here, so the point stabilizers carry the quotient
    if (auto N = probe_normal_subgroup(G, opts.probe_randoms, opts.seed)) {
        LengthResult n_res = length_rec(*N, opts);
        LengthResult ga = length_rec(compact(point_stabilizer(G, 0, opts.seed)), opts);
        LengthResult na = length_rec(compact(point_stabilizer(*N, 0, opts.seed)), opts);
        LengthResult res;
        res.length = n_res.length + ga.length - na.length;
        res.certainty = (n_res.certainty == Certainty::Certified && ga.certainty == Certainty::Certified &&
                         na.certainty == Certainty::Certified)
                            ? Certainty::Certified
                            : Certainty::Probable;
        res.trace = TraceNode{"normal-split",
                              "normal subgroup of order " + N->order().str(),
                              res.length,
                              {std::move(n_res.trace), std::move(ga.trace), std::move(na.trace)}};
        return res;
    }

    LengthResult res;
    res.length = 1;
    res.certainty = is_simple_group_order(total) ? Certainty::Certified : Certainty::Probable;
    res.trace = TraceNode{"simple-leaf", "order " + total.str(), 1, {}};
    return res;
}

inline void render_trace_rec(const TraceNode& t, std::string& out, unsigned depth) {
    out.append(2 * depth, ' ');
    out += t.kind;
    if (!t.detail.empty()) {
        out += "  ";
        out += t.detail;
    }
    out += "  [length ";
    out += t.length.str();
    out += "]\n";
    for (const auto& k : t.kids) render_trace_rec(k, out, depth + 1);
}

inline std::string render_trace(const TraceNode& t) {
    std::string out;
    render_trace_rec(t, out, 0);
    return out;
}

// Structural audit of a trace: every split's length must recombine from its
// children by the rule that justified the split, and leaves must carry the
// only lengths a leaf can carry.
inline bool audit_trace(const TraceNode& t) {
    for (const auto& k : t.kids)
        if (!audit_trace(k)) return false;
    if (t.kind == "trivial") return t.length == 0 && t.kids.empty();
    if (t.kind == "abelian-leaf") return t.length >= 1 && t.kids.empty();
    if (t.kind == "simple-leaf") return t.length == 1 && t.kids.empty();
    if (t.kind == "orbit-split" || t.kind == "block-split")
        return t.kids.size() == 2 && t.length == t.kids[0].length + t.kids[1].length;
    if (t.kind == "derived-split") return t.kids.size() == 1 && t.length > t.kids[0].length;
    if (t.kind == "normal-split")
        return t.kids.size() == 3 && t.length == t.kids[0].length + t.kids[1].length - t.kids[2].length;
    return false;
}

// ---------------------------------------------------------------------------
// Brute-force oracle for small groups: enumerate elements, find a minimal
// normal subgroup as the smallest nontrivial normal closure, recurse on it
// and on the coset action by it.

inline BigInt composition_length_oracle(const PermGroup& G, unsigned cap = 5000) {
    const BigInt total = G.order();
    if (total == 1) return 0;
    if (total > cap) throw std::invalid_argument("composition_length_oracle: order exceeds the enumeration cap");

    std::vector<Perm> elems;
    G.chain().enumerate([&](const Perm& p) {
        if (!p.is_identity()) elems.push_back(p);
    });

    std::optional<PermGroup> best;
    for (const auto& x : elems) {
        PermGroup N = normal_closure(G, {x});
        if (N.order() < total && (!best || N.order() < best->order())) best = std::move(N);
        if (best && best->order() == 2) break;  // no nontrivial group is smaller
    }
    if (!best) return 1;  // every nontrivial closure is everything: simple

    ActionSplit split = coset_action(G, *best, 1u << 20, 0xFEEDULL);
    if (split.kernel.order() != best->order())
        throw std::logic_error("composition_length_oracle: coset kernel is not the normal subgroup");
    return composition_length_oracle(*best, cap) + composition_length_oracle(split.image, cap);
}

}  // namespace complen
