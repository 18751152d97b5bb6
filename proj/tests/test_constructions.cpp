#include <catch2/catch_amalgamated.hpp>

#include "complen/constructions.hpp"

using namespace complen;

TEST_CASE("elementary families have the right orders") {
    CHECK(symmetric_group(5).order() == 120);
    CHECK(symmetric_group(1).order() == 1);
    CHECK(alternating_group(5).order() == 60);
    CHECK(alternating_group(4).order() == 12);
    CHECK(alternating_group(3).order() == 3);
    CHECK(cyclic_group(12).order() == 12);
    CHECK(dihedral_group(6).order() == 12);
    CHECK(is_transitive(dihedral_group(6)));
    CHECK_FALSE(is_primitive(dihedral_group(6)));
    CHECK(is_primitive(dihedral_group(5)));
}

TEST_CASE("direct products act on disjoint strands") {
    auto g = direct_product(symmetric_group(3), cyclic_group(2));
    CHECK(g.degree() == 5);
    CHECK(g.order() == 12);
    auto os = orbits(g);
    REQUIRE(os.size() == 2);
    CHECK(os[0].size() == 3);
    CHECK(os[1].size() == 2);
}

TEST_CASE("imprimitive wreath product") {
    auto w = wreath_imprimitive(symmetric_group(3), cyclic_group(2));
    CHECK(w.degree() == 6);
    CHECK(w.order() == 72);
    CHECK(is_transitive(w));
    auto bs = find_block_system(w);
    REQUIRE(bs.has_value());
    auto split = block_action(w, *bs);
    CHECK(split.image.order() * split.kernel.order() == 72);
}

TEST_CASE("imprimitive wreath over an intransitive top") {
    // top moves only two of its three points, so the base needs a generator
    // on each top orbit; order is still |B|^3 * |T|
    PermGroup top(3, {Perm::from_cycles(3, {{0, 1}})});
    auto w = wreath_imprimitive(cyclic_group(2), top);
    CHECK(w.degree() == 6);
    CHECK(w.order() == 16);
}

TEST_CASE("product action wreath") {
    auto w = wreath_product_action(symmetric_group(3), cyclic_group(2));
    CHECK(w.degree() == 9);
    CHECK(w.order() == 72);
    CHECK(is_transitive(w));
    CHECK(is_primitive(w));
    CHECK_THROWS(wreath_product_action(cyclic_group(1), symmetric_group(3)));
}

TEST_CASE("product action coordinate encoding") {
    // m = 3, b = 2, little-endian digits: point 5 = (2, 1)
    Perm swap01 = Perm::from_cycles(3, {{0, 1}});
    Perm c1 = product_action_coordinate_perm(3, 2, 1, swap01);
    CHECK(c1[0] == 3);  // (0,0) -> (0,1)
    CHECK(c1[5] == 2);  // (2,1) -> (2,0)
    CHECK(c1[2] == 5);
    Perm t = product_action_top_perm(3, 2, Perm::from_cycles(2, {{0, 1}}));
    CHECK(t[1] == 3);  // (1,0) -> (0,1)
    CHECK(t[5] == 7);  // (2,1) -> (1,2)
    CHECK(t[4] == 4);  // diagonal fixed
}

TEST_CASE("towers over S4") {
    auto t1 = tower_T(1);
    CHECK(t1.degree() == 4);
    CHECK(t1.order() == 24);
    auto t2 = tower_T(2);
    CHECK(t2.degree() == 16);
    CHECK(t2.order() == 7962624);
    CHECK(is_transitive(t2));
    CHECK(find_block_system(t2).has_value());
    auto t3 = tower_T(3);
    CHECK(t3.degree() == 64);
    CHECK(t3.order() == big_pow(BigInt(24), 21));
}

TEST_CASE("product action tower") {
    auto p0 = tower_P(0);
    CHECK(p0.degree() == 4);
    CHECK(p0.order() == 24);
    auto p1 = tower_P(1);
    CHECK(p1.degree() == 256);
    CHECK(p1.order() == 7962624);
    CHECK(is_transitive(p1));
    CHECK(is_primitive(p1));
}

TEST_CASE("matrix tower and its shadow") {
    auto spec0 = tower_L_matrices(0);
    CHECK(spec0.dim == 2);
    CHECK(spec0.order == 6);
    CHECK(tower_L_shadow(0).degree() == 3);
    CHECK(tower_L_shadow(0).order() == 6);
    CHECK_THROWS(tower_L_matrices(3));

    auto spec = tower_L_matrices(1);
    CHECK(spec.dim == 8);
    CHECK(spec.order == 31104);
    auto rep = test_irreducible(*spec.field, spec.dim, spec.gens);
    CHECK(rep.verdict == ModuleVerdict::Irreducible);
    auto shadow = tower_L_shadow(1);
    CHECK(shadow.degree() == 255);
    CHECK(shadow.order() == 31104);
    CHECK_FALSE(is_transitive(shadow));  // vectors with zero blocks sit in short orbits

    auto spec2 = tower_L_matrices(2);
    CHECK(spec2.dim == 32);
    CHECK(spec2.order == big_pow(BigInt(6), 16) * 7962624);
}

TEST_CASE("scalar quotient example, level zero") {
    auto ex = build_sp_ex(0);
    CHECK(ex.group.degree() == 8);
    CHECK(ex.group.order() == 48);
    CHECK(ex.witness.order() == 2);
    CHECK(ex.group.contains(ex.witness));
    auto z = normal_closure(ex.group, {ex.witness});
    CHECK(z.order() == 2);
    CHECK_FALSE(is_transitive(z));
    CHECK(is_transitive(ex.group));
    CHECK_FALSE(is_primitive(ex.group));
}

TEST_CASE("scalar quotient example, level one") {
    auto ex = build_sp_ex(1);
    CHECK(ex.group.degree() == 512);
    CHECK(ex.group.order() == 15925248);
    CHECK(is_transitive(ex.group));
    REQUIRE(!ex.witness.is_identity());
    CHECK(ex.witness.order() == 2);
    CHECK(ex.group.contains(ex.witness));
    auto z = normal_closure(ex.group, {ex.witness});
    CHECK(z.order() == 2);  // central involution survives the quotient
    CHECK_FALSE(is_transitive(z));
}

TEST_CASE("coset quotient example") {
    auto ex = build_qp_ex(1);
    CHECK(ex.group.degree() == 16875);
    CHECK(ex.group.order() == 622080000);
    CHECK(is_transitive(ex.group));
    CHECK(ex.socle.order() == big_pow(BigInt(60), 4));
    CHECK(is_transitive(ex.socle));
    CHECK(is_normal_in(ex.socle, ex.group));
}

TEST_CASE("construction grammar parses and evaluates") {
    auto t3 = construction_info("T(3)");
    CHECK(t3.degree == 64);
    CHECK(t3.order == big_pow(BigInt(24), 21));
    CHECK(t3.length == 84);
    CHECK(t3.canonical == "T(3)");

    CHECK(construction_info("T(1)").length == 4);
    CHECK(construction_info("T(2)").length == 20);

    auto p1 = construction_info("P(1)");
    CHECK(p1.degree == 256);
    CHECK(p1.order == 7962624);
    CHECK(p1.length == 20);
    CHECK(construction_info("P(0)").length == 4);

    // one more product-action level collapses onto the next tower level
    auto p2 = construction_info("P(2)");
    CHECK(p2.degree == big_pow(BigInt(4), 16));
    CHECK(p2.order == construction_info("T(3)").order);
    CHECK(p2.length == 84);

    auto l0 = construction_info("L(0)");
    CHECK(l0.degree == 3);
    CHECK(l0.order == 6);
    CHECK(l0.length == 2);
    CHECK(build_construction("L(0)").order() == 6);

    auto l1 = construction_info("L(1)");
    CHECK(l1.degree == 255);
    CHECK(l1.order == 31104);
    CHECK(l1.length == 12);
    CHECK(construction_info("L(2)").length == 52);
    CHECK(construction_info("L(2)").degree == BigInt(4294967295ull));

    CHECK(construction_info("sp_ex(0)").degree == 8);
    CHECK(construction_info("sp_ex(0)").order == 48);
    CHECK(construction_info("sp_ex(0)").length == 5);
    CHECK(construction_info("sp_ex(1)").degree == 512);
    CHECK(construction_info("sp_ex(1)").order == 15925248);
    CHECK(construction_info("sp_ex(1)").length == 21);

    CHECK(construction_info("qp_ex(1)").degree == 16875);
    CHECK(construction_info("qp_ex(1)").order == 622080000);
    CHECK(construction_info("qp_ex(1)").length == 9);

    CHECK(construction_info("wrP(S(5),T(1))").degree == 625);
    CHECK(construction_info("wrP(S(5),T(1))").length == 12);

    // nesting wreaths matches the tower, whichever way the brackets fall
    auto nested = construction_info("wr(S(4),T(2))");
    CHECK(nested.degree == t3.degree);
    CHECK(nested.order == t3.order);
    CHECK(nested.length == t3.length);

    auto dx = construction_info("directX(C(2),C(3),C(5))");
    CHECK(dx.degree == 10);
    CHECK(dx.order == 30);
    CHECK(dx.length == 3);

    CHECK(construction_info("GLperm(3,2)").order == 168);
    CHECK(construction_info("GLperm(3,2)").length == 1);  // simple
    CHECK(construction_info("GLperm(2,3)").length == 5);
    CHECK(construction_info("GLperm(1,13)").length == 3);  // cyclic of order 12 = 2^2 * 3
    CHECK(construction_info("GLperm(4,5)").length == 2 + 2 + 1);  // omega(4) + omega(gcd(4,4)) + 1

    CHECK(construction_info(" wr( S(4) , T(2) ) ").canonical == "wr(S(4),T(2))");
}

TEST_CASE("construction grammar rejects malformed input") {
    CHECK_THROWS(construction_info("wr(S(4)"));
    CHECK_THROWS(construction_info("Q(3)"));
    CHECK_THROWS(construction_info("S(4) x"));
    CHECK_THROWS(construction_info("S()"));
    CHECK_THROWS(construction_info("GLperm(2,6)"));
    CHECK_THROWS(construction_info("T(0)"));
    CHECK_THROWS(construction_info("wr(S(4))"));
    CHECK_THROWS(construction_info("directX(C(2))"));
}

TEST_CASE("explicit builds agree with the closed forms") {
    for (const char* s : {"S(6)", "A(5)", "C(9)", "GLperm(2,3)", "T(2)", "L(1)", "wr(C(2),C(3))",
                          "wrP(S(3),C(2))", "directX(S(3),C(4))", "sp_ex(0)"}) {
        ConstructionInfo info = construction_info(s);
        PermGroup g = build_construction(s);
        INFO(s);
        CHECK(BigInt(g.degree()) == info.degree);
        CHECK(g.order() == info.order);
    }
    CHECK_THROWS(build_construction("P(2)"));  // degree way past the cap
}
