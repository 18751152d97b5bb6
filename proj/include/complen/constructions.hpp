#pragma once

#include <cstdlib>
#include <numeric>

#include "complen/actions.hpp"
#include "complen/matgroup.hpp"

namespace complen {

inline BigInt factorial_big(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline PermGroup symmetric_group(unsigned n) {
    std::vector<Perm> gens;
    if (n >= 2) {
        std::vector<Point> rot(n);
        for (Point i = 0; i < n; ++i) rot[i] = (i + 1) % n;
        gens.push_back(Perm::from_images(std::move(rot)));
        gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    }
    auto g = PermGroup::with_claimed_order(std::max(n, 1u), std::move(gens), factorial_big(n));
    g.set_tag("S(" + std::to_string(n) + ")");
    return g;
}

inline PermGroup alternating_group(unsigned n) {
    std::vector<Perm> gens;
    if (n >= 3) {
        gens.push_back(Perm::from_cycles(n, {{0, 1, 2}}));
        if (n > 3) {
            std::vector<Point> c;
            for (Point i = (n % 2 == 0) ? 1 : 0; i < n; ++i) c.push_back(i);
            gens.push_back(Perm::from_cycles(n, {c}));
        }
    }
    BigInt o = n >= 2 ? factorial_big(n) / 2 : 1;
    auto g = PermGroup::with_claimed_order(std::max(n, 1u), std::move(gens), std::move(o));
    g.set_tag("A(" + std::to_string(n) + ")");
    return g;
}

inline PermGroup cyclic_group(unsigned n) {
    std::vector<Perm> gens;
    if (n >= 2) {
        std::vector<Point> rot(n);
        for (Point i = 0; i < n; ++i) rot[i] = (i + 1) % n;
        gens.push_back(Perm::from_images(std::move(rot)));
    }
    auto g = PermGroup::with_claimed_order(std::max(n, 1u), std::move(gens), BigInt(std::max(n, 1u)));
    g.set_tag("C(" + std::to_string(n) + ")");
    return g;
}

inline PermGroup dihedral_group(unsigned n) {
    if (n < 3) throw std::invalid_argument("dihedral_group: need n >= 3");
    std::vector<Point> rot(n), refl(n);
    for (Point i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    auto g = PermGroup::with_claimed_order(
        n, {Perm::from_images(std::move(rot)), Perm::from_images(std::move(refl))}, BigInt(2) * n);
    g.set_tag("D(" + std::to_string(n) + ")");
    return g;
}

inline PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
    const unsigned na = A.degree(), nb = B.degree();
    std::vector<Perm> gens;
    for (const auto& a : A.generators()) {
        std::vector<Point> im(na + nb);
        for (Point i = 0; i < na; ++i) im[i] = a[i];
        for (Point i = 0; i < nb; ++i) im[na + i] = na + i;
        gens.push_back(Perm::from_images(std::move(im)));
    }
    for (const auto& b : B.generators()) {
        std::vector<Point> im(na + nb);
        for (Point i = 0; i < na; ++i) im[i] = i;
        for (Point i = 0; i < nb; ++i) im[na + i] = na + b[i];
        gens.push_back(Perm::from_images(std::move(im)));
    }
    auto g = PermGroup::with_claimed_order(na + nb, std::move(gens), A.order() * B.order());
    g.set_tag("directX(" + A.tag() + "," + B.tag() + ")");
    return g;
}

// Wreath product in the imprimitive action: deg(T) blocks of deg(B) points,
// point encoding block*m + i.  Bottom copies sit on one representative block
// per top orbit; the top conjugates them across the orbit, so the full base
// group is generated and the order is |B|^b * |T|.
inline PermGroup wreath_imprimitive(const PermGroup& B, const PermGroup& T) {
    const unsigned m = B.degree(), b = T.degree();
    if (static_cast<std::uint64_t>(m) * b > kMaxDegree) throw std::invalid_argument("wreath_imprimitive: degree cap");
    const unsigned n = m * b;
    std::vector<Perm> gens;
    for (const auto& orb : orbits(T)) {
        Point blk = orb[0];
        for (const auto& g : B.generators()) {
            std::vector<Point> im(n);
            for (Point x = 0; x < n; ++x) im[x] = x;
            for (Point i = 0; i < m; ++i) im[blk * m + i] = blk * m + g[i];
            gens.push_back(Perm::from_images(std::move(im)));
        }
    }
    for (const auto& t : T.generators()) {
        std::vector<Point> im(n);
        for (Point blk = 0; blk < b; ++blk)
            for (Point i = 0; i < m; ++i) im[blk * m + i] = t[blk] * m + i;
        gens.push_back(Perm::from_images(std::move(im)));
    }
    auto g = PermGroup::with_claimed_order(n, std::move(gens), big_pow(B.order(), b) * T.order());
    g.set_tag("wr(" + B.tag() + "," + T.tag() + ")");
    return g;
}

// Little-endian tuple index for the product action: coordinate 0 is the
// fastest digit, so the tuple (x_0, ..., x_{b-1}) sits at sum x_j * m^j.
inline Perm product_action_coordinate_perm(unsigned m, unsigned b, unsigned coord, const Perm& p) {
    BigInt total = big_pow(BigInt(m), b);
    if (total > kMaxDegree) throw std::invalid_argument("product action: degree cap");
    const unsigned n = total.convert_to<unsigned>();
    std::uint64_t lo = 1;
    for (unsigned j = 0; j < coord; ++j) lo *= m;
    std::vector<Point> im(n);
    for (unsigned x = 0; x < n; ++x) {
        std::uint64_t digit = (x / lo) % m;
        im[x] = static_cast<Point>(x - digit * lo + p[static_cast<Point>(digit)] * lo);
    }
    return Perm::from_images(std::move(im));
}

inline Perm product_action_top_perm(unsigned m, unsigned b, const Perm& t) {
    BigInt total = big_pow(BigInt(m), b);
    if (total > kMaxDegree) throw std::invalid_argument("product action: degree cap");
    const unsigned n = total.convert_to<unsigned>();
    std::vector<std::uint64_t> pw(b, 1);
    for (unsigned j = 1; j < b; ++j) pw[j] = pw[j - 1] * m;
    std::vector<Point> im(n);
    for (unsigned x = 0; x < n; ++x) {
        unsigned rest = x;
        std::uint64_t y = 0;
        for (unsigned j = 0; j < b; ++j) {
            y += static_cast<std::uint64_t>(rest % m) * pw[t[j]];
            rest /= m;
        }
        im[x] = static_cast<Point>(y);
    }
    return Perm::from_images(std::move(im));
}

// Wreath product in the product action on deg(B)^deg(T) tuples.
inline PermGroup wreath_product_action(const PermGroup& B, const PermGroup& T) {
    const unsigned m = B.degree(), b = T.degree();
    if (m < 2) throw std::invalid_argument("wreath_product_action: bottom degree must be at least 2");
    BigInt total = big_pow(BigInt(m), b);
    if (total > kMaxDegree) throw std::invalid_argument("wreath_product_action: degree cap");
    const unsigned n = total.convert_to<unsigned>();
    std::vector<Perm> gens;
    for (const auto& orb : orbits(T))
        for (const auto& g : B.generators()) gens.push_back(product_action_coordinate_perm(m, b, orb[0], g));
    for (const auto& t : T.generators()) gens.push_back(product_action_top_perm(m, b, t));
    auto g = PermGroup::with_claimed_order(n, std::move(gens), big_pow(B.order(), b) * T.order());
    g.set_tag("wrP(" + B.tag() + "," + T.tag() + ")");
    return g;
}

// Iterated wreath tower over S4: level 1 is S4 on 4 points, level k+1 puts
// S4 blocks under level k, acting on 4^(k+1) points.
inline PermGroup tower_T(unsigned k) {
    if (k == 0) throw std::invalid_argument("tower_T: levels start at 1");
    PermGroup g = symmetric_group(4);
    for (unsigned i = 1; i < k; ++i) g = wreath_imprimitive(symmetric_group(4), g);
    g.set_tag("T(" + std::to_string(k) + ")");
    return g;
}

// Product-action companion: level 0 is S4 itself, level k is the product
// action of S4 over tower level k, on 4^(4^k) tuples.
inline PermGroup tower_P(unsigned k) {
    PermGroup g = k == 0 ? symmetric_group(4) : wreath_product_action(symmetric_group(4), tower_T(k));
    g.set_tag("P(" + std::to_string(k) + ")");
    return g;
}

// Matrix form of the tower over GL(2,2): block-monomial matrices of size
// 2*4^k over GF(2), the natural module glued along tower level k.
struct LinearGroupSpec {
    const Field* field;
    unsigned dim;
    std::vector<Mat> gens;
    BigInt order;
    std::string tag;
};

inline LinearGroupSpec tower_L_matrices(unsigned k) {
    if (k > 2) throw std::invalid_argument("tower_L_matrices: k out of range (0..2)");
    const Field& F = Field::get(2);
    if (k == 0) return LinearGroupSpec{&F, 2, gl_gens(F, 2), BigInt(6), "L(0)"};
    PermGroup top = tower_T(k);
    const unsigned b = top.degree();
    const unsigned dim = 2 * b;
    std::vector<Mat> gens;
    for (const auto& bg : gl_gens(F, 2)) {
        Mat m = Mat::identity(F, dim);
        for (unsigned i = 0; i < 2; ++i)
            for (unsigned j = 0; j < 2; ++j) m.at(i, j) = bg.at(i, j);
        gens.push_back(std::move(m));
    }
    for (const auto& t : top.generators()) {
        Mat m(F, dim, dim);
        for (unsigned blk = 0; blk < b; ++blk)
            for (unsigned i = 0; i < 2; ++i) m.at(2 * blk + i, 2 * t[blk] + i) = 1;
        gens.push_back(std::move(m));
    }
    LinearGroupSpec spec{&F, dim, std::move(gens), big_pow(BigInt(6), b) * top.order(),
                         "L(" + std::to_string(k) + ")"};
    return spec;
}

inline PermGroup tower_L_shadow(unsigned k) {
    LinearGroupSpec spec = tower_L_matrices(k);
    auto perms = matgroup_to_perm_gens(*spec.field, spec.dim, spec.gens);
    BigInt deg = big_pow(BigInt(2), spec.dim) - 1;
    auto g = PermGroup::with_claimed_order(deg.convert_to<unsigned>(), std::move(perms), spec.order);
    g.set_tag(spec.tag);
    return g;
}

// Scalar-quotient family: the product action of GL(2,3) on 8^(4^k) tuples has
// central sign flips z_i per coordinate; factoring out the even sign patterns
// leaves a group whose central involution witnesses failure of
// quasiprimitivity.  Level 0 is plain GL(2,3) on the 8 nonzero vectors.
struct CentralQuotientExample {
    PermGroup group;
    Perm witness;  // image of z_0: order 2, central, intransitive normal closure
};

inline CentralQuotientExample build_sp_ex(unsigned k, std::uint64_t seed = 0x5eedULL) {
    const Field& F3 = Field::get(3);
    if (k == 0) {
        PermGroup g = gl_on_nonzero_vectors(2, 3, seed);
        g.set_tag("sp_ex(0)");
        Mat minus = Mat::identity(F3, 2).scaled(2);
        Perm w = matgroup_to_perm_gens(F3, 2, {minus})[0];
        return {std::move(g), std::move(w)};
    }
    if (k > 1) throw std::invalid_argument("sp_ex: explicit construction only fits for k <= 1");
    PermGroup bottom = gl_on_nonzero_vectors(2, 3, seed);
    PermGroup top = tower_T(k);
    PermGroup h = wreath_product_action(bottom, top);
    const unsigned b = top.degree();
    Mat minus = Mat::identity(F3, 2).scaled(2);
    Perm z8 = matgroup_to_perm_gens(F3, 2, {minus})[0];
    std::vector<Perm> z;
    for (unsigned i = 0; i < b; ++i) z.push_back(product_action_coordinate_perm(8, b, i, z8));
    // rebuild with z_0 appended so its image under the quotient stays aligned
    std::vector<Perm> hgens = h.generators();
    hgens.push_back(z[0]);
    std::size_t z0_at = hgens.size() - 1;
    PermGroup hplus = PermGroup::with_claimed_order(h.degree(), std::move(hgens), h.order(), seed);
    std::vector<Perm> ngens;
    for (unsigned i = 0; i + 1 < b; ++i) ngens.push_back(z[i] * z[i + 1]);
    PermGroup n(h.degree(), ngens);
    ActionSplit split = quotient_action_on_orbits(hplus, n, seed);
    if (split.kernel.order() != n.order())
        throw std::logic_error("sp_ex: kernel of the orbit quotient is not the sign subgroup");
    CentralQuotientExample out{std::move(split.image), split.gen_images[z0_at]};
    out.group.set_tag("sp_ex(" + std::to_string(k) + ")");
    return out;
}

// Coset-action family: inside the wreath of S5 over the tower, take the group
// generated by the alternating base, the diagonal odd involution and the top,
// then act on the cosets of a small mixed subgroup.  Every minimal normal
// subgroup of the image is transitive, yet the image is not primitive.
struct CosetQuotientExample {
    PermGroup group;
    PermGroup socle;  // image of the alternating base, transitive
};

inline CosetQuotientExample build_qp_ex(unsigned k, std::uint64_t seed = 0x5eedULL) {
    if (k != 1) throw std::invalid_argument("qp_ex: explicit construction only fits for k = 1");
    const unsigned m = 5;
    PermGroup top = tower_T(k);
    const unsigned b = top.degree();
    BigInt total = big_pow(BigInt(m), b);
    const unsigned n = total.convert_to<unsigned>();

    Perm a3 = Perm::from_cycles(m, {{0, 1, 2}});
    Perm a5 = Perm::from_cycles(m, {{0, 1, 2, 3, 4}});
    Perm swap01 = Perm::from_cycles(m, {{0, 1}});
    auto diag = [&](const Perm& p) {
        Perm d(n);
        for (unsigned i = 0; i < b; ++i) d = d * product_action_coordinate_perm(m, b, i, p);
        return d;
    };

    std::vector<Perm> ggens;
    std::size_t socle_gens = 0;
    for (unsigned i = 0; i < b; ++i) {
        ggens.push_back(product_action_coordinate_perm(m, b, i, a3));
        ggens.push_back(product_action_coordinate_perm(m, b, i, a5));
        socle_gens += 2;
    }
    ggens.push_back(diag(swap01));
    for (const auto& t : top.generators()) ggens.push_back(product_action_top_perm(m, b, t));
    BigInt g_order = big_pow(BigInt(60), b) * 2 * top.order();
    PermGroup g = PermGroup::with_claimed_order(n, ggens, g_order, seed);

    std::vector<Perm> hgens;
    for (unsigned i = 0; i < b; ++i) {
        hgens.push_back(product_action_coordinate_perm(m, b, i, Perm::from_cycles(m, {{0, 1}, {2, 3}})));
        hgens.push_back(product_action_coordinate_perm(m, b, i, Perm::from_cycles(m, {{0, 2}, {1, 3}})));
    }
    hgens.push_back(diag(Perm::from_cycles(m, {{0, 1, 2}})));
    hgens.push_back(diag(swap01));
    for (const auto& t : top.generators()) hgens.push_back(product_action_top_perm(m, b, t));
    BigInt h_order = big_pow(BigInt(4), b) * 6 * top.order();
    PermGroup h = PermGroup::with_claimed_order(n, std::move(hgens), h_order, seed ^ 0xBEEF);

    ActionSplit split = coset_action(g, h, 1u << 20, seed);
    if (split.kernel.order() != 1) throw std::logic_error("qp_ex: coset action is not faithful");
    std::vector<Perm> sgens(split.gen_images.begin(), split.gen_images.begin() + socle_gens);
    PermGroup socle = PermGroup::with_claimed_order(split.image.degree(), std::move(sgens), big_pow(BigInt(60), b),
                                                    seed ^ 0xFACE);
    CosetQuotientExample out{std::move(split.image), std::move(socle)};
    out.group.set_tag("qp_ex(" + std::to_string(k) + ")");
    out.socle.set_tag("socle(qp_ex(" + std::to_string(k) + "))");
    return out;
}

// ---------------------------------------------------------------------------
// Construction grammar:  T(k) P(k) L(k) S(n) A(n) C(n) GLperm(d,q)
//                        wr(b,t) wrP(b,t) directX(a,b) sp_ex(k) qp_ex(k)

struct ConstructionNode {
    std::string head;
    std::vector<long long> nums;
    std::vector<ConstructionNode> kids;
};

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline ConstructionNode parse_node(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    ConstructionNode node;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) node.head += s[i++];
    if (node.head.empty()) throw std::invalid_argument("construction: expected a name at position " + std::to_string(i));
    skip_ws(s, i);
    if (i < s.size() && s[i] == '(') {
        ++i;
        while (true) {
            skip_ws(s, i);
            if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) ||
                                 (s[i] == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))))) {
                std::size_t used = 0;
                node.nums.push_back(std::stoll(s.substr(i), &used));
                i += used;
            } else {
                node.kids.push_back(parse_node(s, i));
            }
            skip_ws(s, i);
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            if (i < s.size() && s[i] == ')') {
                ++i;
                break;
            }
            throw std::invalid_argument("construction: expected ',' or ')' at position " + std::to_string(i));
        }
    }
    return node;
}

inline void expect(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("construction: " + msg);
}

}  // namespace detail

inline ConstructionNode parse_construction(const std::string& s) {
    std::size_t i = 0;
    ConstructionNode n = detail::parse_node(s, i);
    detail::skip_ws(s, i);
    detail::expect(i == s.size(), "trailing characters after the expression");
    return n;
}

// Closed-form data for a construction: permutation degree, group order and
// composition length, all exact.
struct ConstructionInfo {
    BigInt degree;
    BigInt order;
    BigInt length;
    std::string canonical;
};

inline BigInt tower_order(unsigned k) {  // |T_k| = 24^((4^k - 1)/3)
    return big_pow(BigInt(24), (big_pow(BigInt(4), k) - 1).convert_to<std::uint64_t>() / 3);
}

inline ConstructionInfo construction_info(const ConstructionNode& n) {
    using detail::expect;
    auto nonneg = [&](std::size_t j) {
        expect(n.nums.size() > j && n.nums[j] >= 0, n.head + ": missing or negative parameter");
        return static_cast<unsigned>(n.nums[j]);
    };
    ConstructionInfo info;
    if (n.head == "S" || n.head == "A" || n.head == "C" || n.head == "D") {
        expect(n.nums.size() == 1 && n.kids.empty(), n.head + " takes one integer");
        unsigned m = nonneg(0);
        info.degree = std::max(m, 1u);
        if (n.head == "S") {
            info.order = factorial_big(m);
            info.length = m >= 5 ? 2 : (m == 4 ? 4 : (m == 3 ? 2 : (m == 2 ? 1 : 0)));
        } else if (n.head == "A") {
            info.order = m >= 2 ? factorial_big(m) / 2 : 1;
            info.length = m >= 5 ? 1 : (m == 4 ? 3 : (m == 3 ? 1 : 0));
        } else if (n.head == "C") {
            expect(m >= 1, "C needs n >= 1");
            info.order = m;
            info.length = omega_u64(m);
        } else {
            expect(m >= 3, "D needs n >= 3");
            info.order = BigInt(2) * m;
            info.length = omega_u64(2ull * m);
        }
        info.canonical = n.head + "(" + std::to_string(m) + ")";
        return info;
    }
    if (n.head == "GLperm") {
        expect(n.nums.size() == 2 && n.kids.empty(), "GLperm takes (d, q)");
        unsigned d = nonneg(0), q = nonneg(1);
        expect(d >= 1 && q >= 2 && q <= 256, "GLperm needs d >= 1 and a field size 2..256");
        Field::get(q);  // validates q is a prime power
        expect(d <= 64, "GLperm dimension cap");
        info.degree = big_pow(BigInt(q), d) - 1;
        info.order = gl_order(d, q);
        if (d == 1)
            info.length = omega_u64(q - 1);
        else if (d == 2 && q == 2)
            info.length = 2;
        else if (d == 2 && q == 3)
            info.length = 5;
        else
            info.length = omega_u64(q - 1) + omega_u64(std::gcd<std::uint64_t>(d, q - 1)) + 1;
        info.canonical = "GLperm(" + std::to_string(d) + "," + std::to_string(q) + ")";
        return info;
    }
    if (n.head == "T" || n.head == "P" || n.head == "L") {
        expect(n.nums.size() == 1 && n.kids.empty(), n.head + " takes one integer");
        unsigned k = nonneg(0);
        expect(k <= 12, n.head + " level cap");
        BigInt c_t = 4 * (big_pow(BigInt(4), k) - 1) / 3;
        if (n.head == "T") {
            expect(k >= 1, "T levels start at 1");
            info.degree = big_pow(BigInt(4), k);
            info.order = tower_order(k);
            info.length = c_t;
        } else if (n.head == "P") {
            expect(k <= 8, "P level cap");
            info.degree = big_pow(BigInt(4), big_pow(BigInt(4), k).convert_to<std::uint64_t>());
            info.order = big_pow(BigInt(24), big_pow(BigInt(4), k).convert_to<std::uint64_t>()) * tower_order(k);
            info.length = 4 * (big_pow(BigInt(4), k + 1) - 1) / 3;
        } else {
            info.degree = big_pow(BigInt(2), 2 * big_pow(BigInt(4), k).convert_to<std::uint64_t>()) - 1;
            info.order = big_pow(BigInt(6), big_pow(BigInt(4), k).convert_to<std::uint64_t>()) * tower_order(k);
            info.length = 2 * big_pow(BigInt(4), k) + c_t;
        }
        info.canonical = n.head + "(" + std::to_string(k) + ")";
        return info;
    }
    if (n.head == "sp_ex") {
        expect(n.nums.size() == 1 && n.kids.empty(), "sp_ex takes one integer");
        unsigned k = nonneg(0);
        expect(k <= 8, "sp_ex level cap");
        std::uint64_t copies = big_pow(BigInt(4), k).convert_to<std::uint64_t>();
        info.degree = big_pow(BigInt(2), 2 * copies + 1);
        info.order = big_pow(BigInt(48), copies) * tower_order(k) / big_pow(BigInt(2), copies - 1);
        info.length = (16 * big_pow(BigInt(4), k) - 1) / 3;
        info.canonical = "sp_ex(" + std::to_string(k) + ")";
        return info;
    }
    if (n.head == "qp_ex") {
        expect(n.nums.size() == 1 && n.kids.empty(), "qp_ex takes one integer");
        unsigned k = nonneg(0);
        expect(k >= 1 && k <= 8, "qp_ex levels run from 1");
        std::uint64_t copies = big_pow(BigInt(4), k).convert_to<std::uint64_t>();
        info.degree = big_pow(BigInt(15), copies) / 3;
        info.order = big_pow(BigInt(60), copies) * 2 * tower_order(k);
        info.length = (31 * big_pow(BigInt(4), k) - 16) / 12;
        info.canonical = "qp_ex(" + std::to_string(k) + ")";
        return info;
    }
    if (n.head == "wr" || n.head == "wrP") {
        expect(n.kids.size() == 2 && n.nums.empty(), n.head + " takes two constructions");
        ConstructionInfo bot = construction_info(n.kids[0]);
        ConstructionInfo top = construction_info(n.kids[1]);
        expect(top.degree <= (1 << 20), n.head + ": top degree cap");
        std::uint64_t b = top.degree.convert_to<std::uint64_t>();
        if (n.head == "wr") {
            info.degree = bot.degree * top.degree;
        } else {
            expect(bot.degree >= 2, "wrP: bottom degree must be at least 2");
            expect(bot.degree <= (1 << 20) && b <= 4096, "wrP: exponent cap");
            info.degree = big_pow(bot.degree, b);
        }
        info.order = big_pow(bot.order, b) * top.order;
        info.length = BigInt(b) * bot.length + top.length;
        info.canonical = n.head + "(" + bot.canonical + "," + top.canonical + ")";
        return info;
    }
    if (n.head == "directX") {
        expect(n.kids.size() >= 2 && n.nums.empty(), "directX takes at least two constructions");
        info.degree = 0;
        info.order = 1;
        info.length = 0;
        info.canonical = "directX(";
        for (std::size_t j = 0; j < n.kids.size(); ++j) {
            ConstructionInfo part = construction_info(n.kids[j]);
            info.degree += part.degree;
            info.order *= part.order;
            info.length += part.length;
            info.canonical += (j ? "," : "") + part.canonical;
        }
        info.canonical += ")";
        return info;
    }
    throw std::invalid_argument("construction: unknown head '" + n.head + "'");
}

inline ConstructionInfo construction_info(const std::string& spec) {
    return construction_info(parse_construction(spec));
}

// Explicit permutation realization; throws when the degree does not fit.
inline PermGroup build_construction(const ConstructionNode& n, std::uint64_t seed = 0x5eedULL) {
    ConstructionInfo info = construction_info(n);  // validates parameters
    detail::expect(info.degree <= kMaxDegree, "construction: degree exceeds the build cap");
    if (n.head == "S") return symmetric_group(static_cast<unsigned>(n.nums[0]));
    if (n.head == "A") return alternating_group(static_cast<unsigned>(n.nums[0]));
    if (n.head == "C") return cyclic_group(static_cast<unsigned>(n.nums[0]));
    if (n.head == "D") return dihedral_group(static_cast<unsigned>(n.nums[0]));
    if (n.head == "GLperm")
        return gl_on_nonzero_vectors(static_cast<unsigned>(n.nums[0]), static_cast<unsigned>(n.nums[1]), seed);
    if (n.head == "T") return tower_T(static_cast<unsigned>(n.nums[0]));
    if (n.head == "P") return tower_P(static_cast<unsigned>(n.nums[0]));
    if (n.head == "L") return tower_L_shadow(static_cast<unsigned>(n.nums[0]));
    if (n.head == "sp_ex") return build_sp_ex(static_cast<unsigned>(n.nums[0]), seed).group;
    if (n.head == "qp_ex") return build_qp_ex(static_cast<unsigned>(n.nums[0]), seed).group;
    if (n.head == "wr") return wreath_imprimitive(build_construction(n.kids[0], seed), build_construction(n.kids[1], seed));
    if (n.head == "wrP")
        return wreath_product_action(build_construction(n.kids[0], seed), build_construction(n.kids[1], seed));
    if (n.head == "directX") {
        PermGroup acc = build_construction(n.kids[0], seed);
        for (std::size_t j = 1; j < n.kids.size(); ++j) acc = direct_product(acc, build_construction(n.kids[j], seed));
        return acc;
    }
    throw std::invalid_argument("construction: unknown head '" + n.head + "'");
}

inline PermGroup build_construction(const std::string& spec, std::uint64_t seed = 0x5eedULL) {
    return build_construction(parse_construction(spec), seed);
}

}  // namespace complen
