#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "complen/bounds.hpp"

using namespace complen;

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

BigFloat to_float(const Rational& q) {
    return BigFloat(numerator(q)) / BigFloat(denominator(q));
}

BigFloat eval_float(const BoundExpr& b) {
    BigFloat v = to_float(b.a);
    BigFloat logbase = log(BigFloat(b.base));
    for (const auto& [c, m] : b.terms) v += to_float(c) * log(BigFloat(m)) / logbase;
    return v;
}

}  // namespace

TEST_CASE("pinned bound values on the flagship degrees") {
    CHECK(bound_T12(BigInt(16), BigInt(1)).compare(Rational(20)) == 0);
    CHECK(bound_T12(BigInt(4), BigInt(1)).compare(Rational(4)) == 0);
    CHECK(bound_T12(BigInt(8), BigInt(2)).compare(Rational(8)) == 0);
    CHECK(bound_T13(BigInt(256)).compare(Rational(20)) == 0);
    CHECK(bound_T13(BigInt(4)).compare(Rational(4)) == 0);
    CHECK(bound_T13(big_pow(BigInt(4), 16)).compare(Rational(84)) == 0);
    CHECK(bound_T15(BigInt(625)).compare(Rational(12)) == 0);
    CHECK(bound_T16b(BigInt(8)).compare(Rational(5)) == 0);
    CHECK(bound_T16b(BigInt(512)).compare(Rational(21)) == 0);
    CHECK(bound_T14(8, 2, 1, 1).compare(Rational(12)) == 0);
    CHECK(bound_T14(2, 2, 1, 1).compare(Rational(2)) == 0);
    CHECK(bound_T14(32, 2, 1, 1).compare(Rational(52)) == 0);
    CHECK(bound_T14(1, 2, 2, 1).compare(Rational(1)) == 0);
    CHECK(bound_T14(2, 2, 2, 2).compare(Rational(2)) == 0);
    CHECK(bound_T14(3, 2, 2, 3).compare(Rational(3)) == 0);

    // strict inequalities resolve with the right sign
    CHECK(bound_T12(BigInt(16), BigInt(1)).compare(Rational(19)) > 0);
    CHECK(bound_T12(BigInt(16), BigInt(1)).compare(Rational(21)) < 0);
    CHECK(bound_T16a(BigInt(16875)).compare(Rational(9)) > 0);
    CHECK(bound_T13(BigInt(6)).compare(Rational(5)) > 0);
    CHECK(bound_T13(BigInt(6)).compare(Rational(6)) < 0);
}

TEST_CASE("bound factories reject malformed parameters") {
    CHECK_THROWS_AS(bound_T12(BigInt(3), BigInt(5)), std::invalid_argument);
    CHECK_THROWS_AS(bound_T12(BigInt(3), BigInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(bound_T13(BigInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(bound_T14(2, 4, 1, 1), std::invalid_argument);  // 4 is not prime
    CHECK_THROWS_AS(bound_T14(2, 2, 1, 3), std::invalid_argument);  // more pieces than dimensions
    CHECK_THROWS_AS(bound_T14(0, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("bound expressions render readably") {
    CHECK(bound_T12(BigInt(16), BigInt(1)).str() == "20");
    CHECK(bound_T13(BigInt(256)).str() == "8/3*log2(256) - 4/3");
    CHECK(bound_T16b(BigInt(8)).str() == "8/3*log2(8) - 3");
    CHECK(bound_T15(BigInt(625)).str() == "10/3*log5(625) - 4/3");
    CHECK(bound_T16a(BigInt(16875)).str() == "10/3*log5(16875) - 10/3*log5(2) - 4/3");
    CHECK(bound_T14(8, 2, 1, 1).str() == "64/3*log2(2) - 28/3");
    CHECK(bound_T13(BigInt(256)).approx() == Catch::Approx(20.0));
    CHECK(bound_T16a(BigInt(16875)).approx() == Catch::Approx(17.3903).margin(0.001));
}

TEST_CASE("exact comparison agrees with 100-digit floats on random instances") {
    std::mt19937_64 rng(0xB0B5ULL);
    auto rnd_rational = [&](int span) {
        long long num = static_cast<long long>(rng() % (2 * span + 1)) - span;
        long long den = 1 + static_cast<long long>(rng() % 6);
        return Rational(num, den);
    };
    const unsigned bases[] = {2, 3, 5, 7};
    for (int iter = 0; iter < 1000; ++iter) {
        BoundExpr b;
        b.base = bases[rng() % 4];
        b.a = rnd_rational(40);
        unsigned nterms = 1 + rng() % 3;
        for (unsigned i = 0; i < nterms; ++i)
            b.terms.push_back({rnd_rational(24), BigInt(2 + rng() % 1000000)});
        Rational t = rnd_rational(200);

        int cmp = b.compare(t);
        BigFloat diff = eval_float(b) - to_float(t);
        if (diff > BigFloat("1e-40"))
            CHECK(cmp > 0);
        else if (diff < BigFloat("-1e-40"))
            CHECK(cmp < 0);
        else
            CHECK(cmp == 0);
    }
}

TEST_CASE("comparison is exact on power-of-base arguments") {
    for (unsigned k = 0; k <= 20; ++k) {
        CHECK(bound_T13(big_pow(BigInt(2), k)).compare(Rational(8 * static_cast<long long>(k) - 4, 3)) == 0);
        CHECK(bound_T15(big_pow(BigInt(5), k)).compare(Rational(10 * static_cast<long long>(k) - 4, 3)) == 0);
        // the two log5 terms cancel exactly on arguments of the form 2*5^k
        CHECK(bound_T16a(2 * big_pow(BigInt(5), k)).compare(Rational(10 * static_cast<long long>(k) - 4, 3)) == 0);
    }
}

TEST_CASE("theorem names round-trip") {
    for (Theorem t : {Theorem::T12, Theorem::T13, Theorem::T14, Theorem::T15, Theorem::T16a, Theorem::T16b})
        CHECK(parse_theorem(theorem_name(t)) == t);
    CHECK(!parse_theorem("T17"));
    CHECK(!parse_theorem("t12"));
}

TEST_CASE("classification of small groups") {
    ClassifyFlags c4 = classify(cyclic_group(4));
    CHECK(c4.transitive);
    CHECK(!c4.primitive);
    CHECK(c4.quasiprimitive == Tri::No);
    REQUIRE(c4.quasi_witness.has_value());
    CHECK(normal_closure(cyclic_group(4), {*c4.quasi_witness}).order() == 2);
    CHECK(c4.semiprimitive == Tri::Yes);  // regular, so every subgroup is semiregular
    CHECK(c4.affine_socle == Tri::Yes);

    ClassifyFlags d4 = classify(dihedral_group(4));
    CHECK(d4.transitive);
    CHECK(!d4.primitive);
    CHECK(d4.quasiprimitive == Tri::No);
    CHECK(d4.semiprimitive == Tri::No);
    REQUIRE(d4.semi_witness.has_value());
    {
        PermGroup w = normal_closure(dihedral_group(4), {*d4.semi_witness});
        CHECK(!is_transitive(w));
        CHECK(!is_semiregular(w));
    }

    ClassifyFlags s4 = classify(symmetric_group(4));
    CHECK(s4.primitive);
    CHECK(s4.quasiprimitive == Tri::Yes);
    CHECK(s4.semiprimitive == Tri::Yes);
    CHECK(s4.affine_socle == Tri::Yes);  // the double transpositions close into a regular klein group

    ClassifyFlags a5 = classify(alternating_group(5));
    CHECK(a5.primitive);
    CHECK(a5.affine_socle == Tri::No);

    ClassifyFlags c5 = classify(cyclic_group(5));
    CHECK(c5.primitive);
    CHECK(c5.quasiprimitive == Tri::Yes);
    CHECK(c5.affine_socle == Tri::Yes);

    ClassifyFlags split = classify(direct_product(symmetric_group(3), cyclic_group(2)));
    CHECK(!split.transitive);
    CHECK(split.quasiprimitive == Tri::No);
    CHECK(split.semiprimitive == Tri::No);  // a transposition in the first factor has fixed points

    ClassifyFlags triv = classify(PermGroup(3));
    CHECK(triv.quasiprimitive == Tri::Yes);
    CHECK(triv.semiprimitive == Tri::Yes);
    CHECK(triv.affine_socle == Tri::No);
}

TEST_CASE("semiprimitive without quasiprimitive at degree 8") {
    PermGroup g = build_construction("sp_ex(0)");
    ClassifyFlags fl = classify(g);
    CHECK(fl.transitive);
    CHECK(!fl.primitive);
    CHECK(fl.semiprimitive == Tri::Yes);
    CHECK(fl.quasiprimitive == Tri::No);
    REQUIRE(fl.quasi_witness.has_value());
    PermGroup w = normal_closure(g, {*fl.quasi_witness});
    CHECK(w.order() == 2);
    CHECK(!is_transitive(w));
}

TEST_CASE("primitivity flag matches an exhaustive block search") {
    auto primitive_by_brute_force = [](const PermGroup& G) {
        unsigned n = G.degree();
        if (!is_transitive(G)) return false;
        std::vector<Perm> elems;
        G.chain().enumerate([&](const Perm& p) { elems.push_back(p); });
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            unsigned sz = static_cast<unsigned>(__builtin_popcount(mask));
            if (sz < 2 || sz >= n || !(mask & 1u)) continue;  // proper blocks through point 0
            bool block = true;
            for (const auto& g : elems) {
                unsigned img = 0;
                for (unsigned i = 0; i < n; ++i)
                    if (mask & (1u << i)) img |= 1u << g[i];
                if (img != mask && (img & mask)) {
                    block = false;
                    break;
                }
            }
            if (block) return false;
        }
        return true;
    };

    std::vector<PermGroup> groups;
    for (unsigned n : {2u, 3u, 4u, 5u, 6u, 7u, 8u}) {
        groups.push_back(symmetric_group(n));
        groups.push_back(cyclic_group(n));
        if (n >= 3) groups.push_back(alternating_group(n));
        if (n >= 3) groups.push_back(dihedral_group(n));
    }
    groups.push_back(wreath_imprimitive(cyclic_group(2), cyclic_group(2)));
    groups.push_back(wreath_imprimitive(symmetric_group(3), cyclic_group(2)));
    groups.push_back(build_construction("GLperm(3,2)"));
    groups.push_back(build_construction("sp_ex(0)"));
    for (const auto& G : groups) {
        INFO(G.tag());
        CHECK(classify(G).primitive == primitive_by_brute_force(G));
    }
}

TEST_CASE("orbit bound reports: equality families and strict cases") {
    VerifyOptions opts;

    BoundReport t1 = verify(tower_T(1), Theorem::T12, opts);
    CHECK(t1.c == 4);
    CHECK(t1.verdict == Verdict::Equal);
    CHECK(t1.hypothesis_met);
    REQUIRE(t1.fingerprint.has_value());
    CHECK(*t1.fingerprint);

    BoundReport pair = verify(direct_product(tower_T(1), tower_T(1)), Theorem::T12, opts);
    CHECK(pair.r == 2);
    CHECK(pair.c == 8);
    CHECK(pair.verdict == Verdict::Equal);
    REQUIRE(pair.fingerprint.has_value());
    CHECK(*pair.fingerprint);

    BoundReport s5 = verify(symmetric_group(5), Theorem::T12, opts);
    CHECK(s5.c == 2);
    CHECK(s5.verdict == Verdict::Strict);
    CHECK(!s5.fingerprint.has_value());

    // a group of the right length but the wrong shape cannot fake the fingerprint
    BoundReport d = verify(direct_product(cyclic_group(2), cyclic_group(2)), Theorem::T12, opts);
    CHECK(d.c == 2);  // 4/3 * (4 - 2) = 8/3 > 2
    CHECK(d.verdict == Verdict::Strict);
}

TEST_CASE("primitive bound reports") {
    VerifyOptions opts;

    BoundReport p0 = verify(build_construction("P(0)"), Theorem::T13, opts);
    CHECK(p0.c == 4);
    CHECK(p0.verdict == Verdict::Equal);
    CHECK(p0.hypothesis_met);
    REQUIRE(p0.fingerprint.has_value());
    CHECK(*p0.fingerprint);

    BoundReport imp = verify(wreath_imprimitive(symmetric_group(3), cyclic_group(2)), Theorem::T13, opts);
    CHECK(!imp.hypothesis_met);
    CHECK(imp.note == "not primitive");
    CHECK(imp.verdict == Verdict::Strict);  // 8/3*log2(6) - 4/3 > 5

    // S6 is primitive but far from the tower shape: strict and no fingerprint
    BoundReport s6 = verify(symmetric_group(6), Theorem::T13, opts);
    CHECK(s6.hypothesis_met);
    CHECK(s6.verdict == Verdict::Strict);
}

TEST_CASE("semiprimitive bound reports") {
    VerifyOptions opts;

    BoundReport c4 = verify(cyclic_group(4), Theorem::T16b, opts);
    CHECK(c4.hypothesis_met);  // regular and not quasiprimitive
    CHECK(c4.verdict == Verdict::Strict);

    BoundReport sp0 = verify(build_construction("sp_ex(0)"), Theorem::T16b, opts);
    CHECK(sp0.c == 5);
    CHECK(sp0.hypothesis_met);
    CHECK(sp0.verdict == Verdict::Equal);
    REQUIRE(sp0.fingerprint.has_value());
    CHECK(*sp0.fingerprint);

    BoundReport s4 = verify(symmetric_group(4), Theorem::T16b, opts);
    CHECK(!s4.hypothesis_met);  // primitive, hence quasiprimitive

    BoundReport d4 = verify(dihedral_group(4), Theorem::T16b, opts);
    CHECK(!d4.hypothesis_met);
    CHECK(d4.note.rfind("not semiprimitive", 0) == 0);
}

TEST_CASE("quasiprimitive bound reports") {
    VerifyOptions opts;

    // primitive input is deferred to the stronger statement
    BoundReport t1 = verify(tower_T(1), Theorem::T16a, opts);
    CHECK(!t1.hypothesis_met);

    BoundReport sp0 = verify(build_construction("sp_ex(0)"), Theorem::T16a, opts);
    CHECK(!sp0.hypothesis_met);
    CHECK(sp0.note.rfind("not quasiprimitive", 0) == 0);
}

TEST_CASE("non-affine primitive bound reports") {
    VerifyOptions opts;

    BoundReport a5 = verify(alternating_group(5), Theorem::T15, opts);
    CHECK(a5.hypothesis_met);
    CHECK(a5.c == 1);
    CHECK(a5.verdict == Verdict::Strict);

    BoundReport s4 = verify(symmetric_group(4), Theorem::T15, opts);
    CHECK(!s4.hypothesis_met);
    CHECK(s4.note == "abelian normal subgroup present");

    BoundReport c4 = verify(cyclic_group(4), Theorem::T15, opts);
    CHECK(!c4.hypothesis_met);
    CHECK(c4.note == "not primitive");
}

TEST_CASE("matrix bound reports certify complete reducibility first") {
    const Field& f2 = Field::get(2);
    const Field& f4 = Field::get(4);

    LinearGroupSpec l0 = tower_L_matrices(0);
    BoundReport r0 = verify_linear(f2, l0.dim, l0.gens, l0.tag);
    CHECK(r0.r == 1);
    CHECK(r0.c == 2);
    CHECK(r0.hypothesis_met);
    CHECK(r0.verdict == Verdict::Equal);
    REQUIRE(r0.fingerprint.has_value());
    CHECK(*r0.fingerprint);

    LinearGroupSpec l1 = tower_L_matrices(1);
    BoundReport r1 = verify_linear(f2, l1.dim, l1.gens, l1.tag);
    CHECK(r1.r == 1);
    CHECK(r1.c == 12);
    CHECK(r1.certainty == Certainty::Certified);
    CHECK(r1.verdict == Verdict::Equal);
    REQUIRE(r1.fingerprint.has_value());
    CHECK(*r1.fingerprint);

    // scalars of gf(4) on two independent lines: equality of the second kind
    std::vector<Mat> diag_gens;
    {
        Mat m = Mat::identity(f4, 2);
        m.at(0, 0) = 2;
        diag_gens.push_back(m);
        Mat m2 = Mat::identity(f4, 2);
        m2.at(1, 1) = 2;
        diag_gens.push_back(m2);
    }
    BoundReport rd = verify_linear(f4, 2, diag_gens, "scalar-lines");
    CHECK(rd.r == 2);
    CHECK(rd.c == 2);
    CHECK(rd.verdict == Verdict::Equal);
    REQUIRE(rd.fingerprint.has_value());
    CHECK(*rd.fingerprint);

    // a transvection has no invariant complement: hypothesis unmet, no verdict claimed
    Mat shear = Mat::identity(f2, 2);
    shear.at(0, 1) = 1;
    std::vector<Mat> trans = {shear};
    BoundReport rt = verify_linear(f2, 2, trans, "shear");
    CHECK(!rt.hypothesis_met);
    CHECK(rt.note == "complete reducibility not certified");
    CHECK(!rt.fingerprint.has_value());
}

TEST_CASE("matrix reports fall back to the closed form when the shadow is too big") {
    LinearGroupSpec l2 = tower_L_matrices(2);
    BoundReport r2 = verify_linear(*l2.field, l2.dim, l2.gens, l2.tag);
    CHECK(r2.r == 1);
    CHECK(r2.c == 52);
    CHECK(r2.certainty == Certainty::Probable);
    CHECK(r2.verdict == Verdict::Equal);
    REQUIRE(r2.fingerprint.has_value());
    CHECK(*r2.fingerprint);
}

TEST_CASE("report rendering carries the verdict and flags") {
    BoundReport rep = verify(build_construction("sp_ex(0)"), Theorem::T16b);
    std::string rec = report_record(rep);
    CHECK(rec.find("spec=sp_ex(0)") != std::string::npos);
    CHECK(rec.find("theorem=T16b") != std::string::npos);
    CHECK(rec.find("c=5") != std::string::npos);
    CHECK(rec.find("verdict=equal") != std::string::npos);
    CHECK(rec.find("fingerprint=match") != std::string::npos);
    CHECK(rec.find("qp=no") != std::string::npos);
    CHECK(rec.find("sp=yes") != std::string::npos);

    std::string row = report_table_row(rep);
    CHECK(row.find("sp_ex(0)") != std::string::npos);
    CHECK(row.find("equal") != std::string::npos);
    CHECK(report_table_header().find("verdict") != std::string::npos);
}
