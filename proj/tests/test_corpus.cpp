#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>

#include "complen/corpus.hpp"

using namespace complen;
namespace fs = std::filesystem;

TEST_CASE("transitive group counts at small degrees") {
    CHECK(enumerate_transitive_small(1).size() == 1);
    CHECK(enumerate_transitive_small(2).size() == 1);
    CHECK(enumerate_transitive_small(3).size() == 2);
    CHECK(enumerate_transitive_small(4).size() == 5);
    CHECK(enumerate_transitive_small(5).size() == 5);
    CHECK(enumerate_transitive_small(6).size() == 16);
    CHECK_THROWS_AS(enumerate_transitive_small(7), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_transitive_small(0), std::invalid_argument);
}

TEST_CASE("degree-4 representatives carry the classical orders") {
    auto groups = enumerate_transitive_small(4);
    std::multiset<BigInt> orders;
    for (const auto& g : groups) {
        CHECK(is_transitive(g));
        CHECK(g.degree() == 4);
        orders.insert(g.order());
    }
    CHECK(orders == std::multiset<BigInt>{4, 4, 8, 12, 24});
}

TEST_CASE("degree-5 representatives are the classical chain") {
    auto groups = enumerate_transitive_small(5);
    std::multiset<BigInt> orders;
    for (const auto& g : groups) orders.insert(g.order());
    CHECK(orders == std::multiset<BigInt>{5, 10, 20, 60, 120});
}

TEST_CASE("representatives are pairwise non-conjugate even when orders tie") {
    // the two order-4 groups of degree 4: cyclic and klein
    auto groups = enumerate_transitive_small(4);
    std::vector<const PermGroup*> small;
    for (const auto& g : groups)
        if (g.order() == 4) small.push_back(&g);
    REQUIRE(small.size() == 2);
    bool c4_seen = false, klein_seen = false;
    for (const auto* g : small) {
        bool has_4_cycle = false;
        g->chain().enumerate([&](const Perm& p) { has_4_cycle |= p.order() == 4; });
        (has_4_cycle ? c4_seen : klein_seen) = true;
    }
    CHECK(c4_seen);
    CHECK(klein_seen);
}

TEST_CASE("permutation files parse in both generator notations") {
    ParsedGroup a = parse_group_text("permgroup 4\ngen (1,2,3,4)\ngen (1,2)\n", "s4");
    REQUIRE(a.perm.has_value());
    CHECK(a.perm->degree() == 4);
    CHECK(a.perm->order() == 24);

    ParsedGroup b = parse_group_text("permgroup 4\ngen img 2,3,4,1\ngen img 2,1,3,4\n", "s4img");
    CHECK(b.perm->order() == 24);

    // comments, blank lines, and spacing are tolerated
    ParsedGroup c = parse_group_text("# a cyclic group\npermgroup 3\n\ngen ( 1 , 2 , 3 )  # rotation\n", "c3");
    CHECK(c.perm->order() == 3);

    // multiple cycles on one line
    ParsedGroup d = parse_group_text("permgroup 4\ngen (1,2)(3,4)\n", "klein-ish");
    CHECK(d.perm->order() == 2);
}

TEST_CASE("malformed permutation files are rejected with line numbers") {
    CHECK_THROWS_WITH(parse_group_text("permgroup 0\n", "z"), Catch::Matchers::ContainsSubstring("bad degree"));
    CHECK_THROWS_WITH(parse_group_text("permgroup 3\ngen (1,2,5)\n", "z"),
                      Catch::Matchers::ContainsSubstring("outside 1..3"));
    CHECK_THROWS_WITH(parse_group_text("permgroup 3\ngen (1,2)(2,3)\n", "z"),
                      Catch::Matchers::ContainsSubstring("repeated"));
    CHECK_THROWS_WITH(parse_group_text("permgroup 3\ngen img 1,1,2\n", "z"),
                      Catch::Matchers::ContainsSubstring("repeated"));
    CHECK_THROWS_WITH(parse_group_text("permgroup 3\ngen img 1,2\n", "z"),
                      Catch::Matchers::ContainsSubstring("expected 3 images"));
    CHECK_THROWS_WITH(parse_group_text("permgroup 3\nrot (1,2,3)\n", "z"),
                      Catch::Matchers::ContainsSubstring("expected 'gen'"));
    CHECK_THROWS_WITH(parse_group_text("grp 3\n", "z"), Catch::Matchers::ContainsSubstring("unknown header"));
    CHECK_THROWS_WITH(parse_group_text("\n# only comments\n", "z"), Catch::Matchers::ContainsSubstring("empty"));
    CHECK_THROWS_WITH(parse_group_text("permgroup 3\ngen (1,2,3\n", "z"),
                      Catch::Matchers::ContainsSubstring("z:2"));
}

TEST_CASE("matrix files parse hex rows") {
    ParsedGroup g = parse_group_text("matgroup 2 2\ngen\n01\n10\ngen\n11\n01\n", "gl22");
    REQUIRE(g.is_linear());
    CHECK(g.dim == 2);
    CHECK(g.field->q() == 2);
    REQUIRE(g.mat_gens.size() == 2);
    CHECK(constituent_dims(*g.field, 2, g.mat_gens) == std::vector<unsigned>{2});

    CHECK_THROWS_WITH(parse_group_text("matgroup 2 2\ngen\n01\n12\n", "z"),
                      Catch::Matchers::ContainsSubstring("outside gf(2)"));
    CHECK_THROWS_WITH(parse_group_text("matgroup 2 2\ngen\n01\n1\n", "z"),
                      Catch::Matchers::ContainsSubstring("expected 2 entries"));
    CHECK_THROWS_WITH(parse_group_text("matgroup 2 2\ngen\n01\n", "z"),
                      Catch::Matchers::ContainsSubstring("truncated"));
    CHECK_THROWS_WITH(parse_group_text("matgroup 2 6\ngen\n01\n10\n", "z"),
                      Catch::Matchers::ContainsSubstring("not a prime power"));
    CHECK_THROWS_WITH(parse_group_text("matgroup 2 2\n", "z"),
                      Catch::Matchers::ContainsSubstring("at least one generator"));
}

TEST_CASE("written group files read back identically") {
    for (const char* spec : {"S(4)", "D(6)", "T(1)", "sp_ex(0)", "C(7)"}) {
        PermGroup g = build_construction(spec);
        std::ostringstream os;
        write_group_file(os, g);
        ParsedGroup back = parse_group_text(os.str(), spec);
        REQUIRE(back.perm.has_value());
        CHECK(back.perm->degree() == g.degree());
        CHECK(back.perm->order() == g.order());
    }
}

TEST_CASE("corpus scan keeps going past parse failures and preserves input order") {
    fs::path dir = fs::temp_directory_path() / "complen-scan-test";
    fs::create_directories(dir);
    std::ofstream(dir / "a.grp") << "permgroup 4\ngen (1,2,3,4)\ngen (1,2)\n";
    std::ofstream(dir / "b.grp") << "this is not a group\n";
    std::ofstream(dir / "c.grp") << "permgroup 3\ngen (1,2,3)\n";

    std::vector<fs::path> files = {dir / "a.grp", dir / "b.grp", dir / "c.grp"};
    ScanResult res = scan_corpus(files, Theorem::T12);
    REQUIRE(res.reports.size() == 2);
    CHECK(res.reports[0].id == "a.grp");
    CHECK(res.reports[1].id == "c.grp");
    REQUIRE(res.errors.size() == 1);
    CHECK(res.errors[0].find("b.grp") != std::string::npos);
    CHECK(!res.violation);
    CHECK(res.summary.find("2 groups") != std::string::npos);
    CHECK(res.summary.find("1 parse errors") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("empty corpus yields an empty table") {
    ScanResult res = scan_corpus({}, Theorem::T12);
    CHECK(res.reports.empty());
    CHECK(res.summary.rfind("0 groups", 0) == 0);
}

TEST_CASE("built-in corpus satisfies the orbit bound with equality only at degree 4") {
    ScanResult res = scan_builtin(Theorem::T12);
    CHECK(res.reports.size() == 29);  // 1 + 2 + 5 + 5 + 16
    CHECK(!res.violation);
    unsigned equal = 0;
    for (const auto& rep : res.reports) {
        CHECK(rep.hypothesis_met);
        CHECK(rep.verdict != Verdict::Violation);
        if (rep.verdict == Verdict::Equal) {
            ++equal;
            CHECK(rep.n == 4);
            REQUIRE(rep.fingerprint.has_value());
            CHECK(*rep.fingerprint);
        }
    }
    CHECK(equal == 1);
    CHECK(res.summary.find("equality: t(4,5)") != std::string::npos);
    REQUIRE(!res.notes.empty());
    CHECK(res.notes[0].find("7..24") != std::string::npos);
    CHECK(res.notes[0].find("skipped") != std::string::npos);
}

TEST_CASE("scan results are independent of the worker count") {
    ScanOptions one;
    one.jobs = 1;
    ScanOptions many;
    many.jobs = 4;
    ScanResult a = scan_builtin(Theorem::T13, one);
    ScanResult b = scan_builtin(Theorem::T13, many);
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) CHECK(report_record(a.reports[i]) == report_record(b.reports[i]));
    CHECK(a.summary == b.summary);
}

TEST_CASE("matrix files can be scanned against the linear bound") {
    fs::path dir = fs::temp_directory_path() / "complen-scan-linear";
    fs::create_directories(dir);
    std::ofstream(dir / "gl22.grp") << "matgroup 2 2\ngen\n01\n10\ngen\n11\n01\n";
    std::ofstream(dir / "shear.grp") << "matgroup 2 2\ngen\n11\n01\n";

    ScanResult res = scan_corpus({dir / "gl22.grp", dir / "shear.grp"}, Theorem::T14);
    REQUIRE(res.reports.size() == 2);
    CHECK(res.reports[0].verdict == Verdict::Equal);
    CHECK(res.reports[0].hypothesis_met);
    CHECK(!res.reports[1].hypothesis_met);  // the shear is not completely reducible
    fs::remove_all(dir);
}
