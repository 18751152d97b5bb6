#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "complen/bsgs.hpp"
#include "complen/group.hpp"

using namespace complen;

namespace {

Perm cyc(unsigned n, std::initializer_list<std::initializer_list<Point>> cs) {
    std::vector<std::vector<Point>> v;
    for (auto& c : cs) v.emplace_back(c);
    return Perm::from_cycles(n, v);
}

PermGroup sym(unsigned n) {
    std::vector<Perm> gens;
    if (n >= 2) {
        std::vector<Point> rot(n);
        for (Point i = 0; i < n; ++i) rot[i] = (i + 1) % n;
        gens.push_back(Perm::from_images(rot));
        gens.push_back(cyc(n, {{0, 1}}));
    }
    return PermGroup(n, gens);
}

}  // namespace

TEST_CASE("composition applies the left factor first") {
    Perm p = cyc(4, {{0, 1}});
    Perm q = cyc(4, {{1, 2}});
    CHECK((p * q)[0] == 2);  // 0 ->p 1 ->q 2
    CHECK((q * p)[0] == 1);
    CHECK((p * q)[2] == 1);
}

TEST_CASE("images, inverse, identity") {
    Perm p = Perm::from_images({2, 0, 1, 3});
    CHECK(p[0] == 2);
    CHECK((p * p.inverse()).is_identity());
    CHECK(Perm(5).is_identity());
    CHECK_THROWS(Perm::from_images({0, 0, 1}));
}

TEST_CASE("cycle construction and printing") {
    Perm p = cyc(6, {{0, 1, 2}, {3, 4}});
    CHECK(p.to_cycle_string() == "(0,1,2)(3,4)");
    CHECK(Perm(3).to_cycle_string() == "()");
    CHECK_THROWS(cyc(4, {{0, 1}, {1, 2}}));  // not disjoint
    CHECK(p.cycles().size() == 2);
    CHECK(p.moved_points() == std::vector<Point>({0, 1, 2, 3, 4}));
}

TEST_CASE("element order and powers") {
    Perm p = cyc(12, {{0, 1, 2}, {3, 4, 5, 6}, {7, 8, 9, 10, 11}});
    CHECK(p.order() == 60);
    CHECK(p.power(60).is_identity());
    CHECK(p.power(59) == p.inverse());
    CHECK(p.power(2) == p * p);
    auto f = p.order_factored();
    CHECK(f.at(2) == 2);
    CHECK(f.at(3) == 1);
    CHECK(f.at(5) == 1);
}

TEST_CASE("conjugation direction") {
    Perm a = cyc(5, {{0, 1, 2}});
    Perm g = cyc(5, {{0, 3}});
    // conjugate of the cycle relabels entries through g
    CHECK(a.conjugate_by(g) == cyc(5, {{3, 1, 2}}));
}

TEST_CASE("small integer helpers") {
    CHECK(omega_u64(360) == 6);
    CHECK(omega_u64(1) == 0);
    CHECK(is_prime_u64(97));
    CHECK_FALSE(is_prime_u64(91));
    CHECK(valuation_u64(48, 2) == 4);
    auto [b, k] = perfect_power_split(BigInt(1024));
    CHECK(b == 2);
    CHECK(k == 10);
    auto [b2, k2] = perfect_power_split(BigInt(60));
    CHECK(b2 == 60);
    CHECK(k2 == 1);
    CHECK(big_pow(BigInt(24), 21) == BigInt("96479729228174488169059713024"));
}

TEST_CASE("deterministic chain certifies symmetric group orders") {
    CHECK(sym(4).order() == 24);
    CHECK(sym(7).order() == 5040);
    PermGroup a4(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
    CHECK(a4.order() == 12);
    CHECK_FALSE(a4.contains(cyc(4, {{0, 1}})));
    CHECK(a4.contains(cyc(4, {{0, 1}, {2, 3}})));
    PermGroup triv(5, {});
    CHECK(triv.order() == 1);
}

TEST_CASE("membership factorization round trip") {
    PermGroup s6 = sym(6);
    const Chain& ch = s6.chain();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Perm g = ch.random_element(rng);
        auto coords = ch.factor(g);
        CHECK(ch.evaluate_factorization(coords) == g);
    }
}

TEST_CASE("uniform sampling covers a small group evenly") {
    PermGroup s3 = sym(3);
    std::mt19937_64 rng(42);
    std::map<std::string, int> freq;
    for (int i = 0; i < 6000; ++i) ++freq[random_element(s3, rng).to_cycle_string()];
    REQUIRE(freq.size() == 6);
    for (auto& [k, v] : freq) {
        INFO(k);
        CHECK(v > 800);
        CHECK(v < 1200);
    }
}

TEST_CASE("known order completion matches the deterministic result") {
    std::vector<Perm> gens = {cyc(8, {{0, 1, 2, 3, 4, 5, 6, 7}}), cyc(8, {{0, 1}})};
    Chain fast = Chain::with_known_order(8, gens, BigInt(40320));
    CHECK(fast.order() == 40320);
    CHECK(fast.verified());
    CHECK(fast.contains(cyc(8, {{2, 5}})));
    // claiming too much must fail loudly
    CHECK_THROWS(Chain::with_known_order(8, gens, BigInt(40320) * 2));
    CHECK_THROWS(Chain::with_known_order(8, {}, BigInt(2)));
}

TEST_CASE("chain enumerate lists each element once") {
    PermGroup a4(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
    std::set<std::string> seen;
    a4.chain().enumerate([&](const Perm& g) { seen.insert(g.to_cycle_string()); });
    CHECK(seen.size() == 12);
}

TEST_CASE("orbit stabilizer bookkeeping") {
    PermGroup s5 = sym(5);
    CHECK(is_transitive(s5));
    CHECK(orbit_of(s5, 2).size() == 5);
    PermGroup h(6, {cyc(6, {{0, 1}}), cyc(6, {{2, 3, 4}})});
    auto os = orbits(h);
    REQUIRE(os.size() == 3);
    CHECK(os[0] == std::vector<Point>({0, 1}));
    CHECK(os[2] == std::vector<Point>({5}));
    CHECK_FALSE(is_transitive(h));

    PermGroup st = point_stabilizer(s5, 0);
    CHECK(st.order() == 24);
    for (const auto& g : st.generators()) CHECK(g[0] == 0);
    PermGroup st2 = pointwise_stabilizer(s5, {0, 1, 2});
    CHECK(st2.order() == 2);

    // orbit-stabilizer identity on random subgroups of S7
    std::mt19937_64 rng(11);
    PermGroup s7 = sym(7);
    for (int t = 0; t < 8; ++t) {
        PermGroup g(7, {random_element(s7, rng), random_element(s7, rng)});
        for (Point p : {Point(0), Point(3)}) {
            PermGroup st3 = point_stabilizer(g, p, 1000 + t);
            CHECK(st3.order() * orbit_of(g, p).size() == g.order());
        }
    }
}

TEST_CASE("normal closure and derived series") {
    PermGroup s4 = sym(4);
    PermGroup v4 = normal_closure(s4, {cyc(4, {{0, 1}, {2, 3}})});
    CHECK(v4.order() == 4);
    CHECK(is_normal_in(v4, s4));
    PermGroup a4 = derived_subgroup(s4);
    CHECK(a4.order() == 12);
    PermGroup v4b = derived_subgroup(a4);
    CHECK(v4b.order() == 4);
    CHECK(derived_subgroup(v4b).order() == 1);
    // A5 is perfect
    PermGroup a5(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 2, 3, 4}})});
    CHECK(a5.order() == 60);
    CHECK(derived_subgroup(a5).order() == 60);
    // closure of a transposition in S4 is everything
    CHECK(normal_closure(s4, {cyc(4, {{0, 1}})}).order() == 24);
}

TEST_CASE("semiregular detection") {
    PermGroup c4(4, {cyc(4, {{0, 1, 2, 3}})});
    CHECK(is_semiregular(c4));
    CHECK(is_semiregular(PermGroup(4, {cyc(4, {{0, 1}, {2, 3}})})));
    CHECK_FALSE(is_semiregular(sym(3)));
    CHECK(omega_order(c4) == 2);
    CHECK(omega_order(sym(4)) == 4);  // 24 = 2^3 * 3
}
