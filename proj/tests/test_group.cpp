#include <catch2/catch_amalgamated.hpp>
#include <algorithm>
#include <cstdio>
#include <random>

#include "schurpow/dixon.hpp"
#include "schurpow/group.hpp"
#include "schurpow/table_io.hpp"

using namespace schurpow;

namespace {

EnumeratedGroup make_perm_group(const std::string& name, int degree, std::vector<std::string> cycles) {
    std::vector<Permutation> gens;
    for (const auto& c : cycles) gens.push_back(Permutation::from_cycles(c, degree));
    return EnumeratedGroup::enumerate(name, PermutationOps{degree}, gens);
}

std::size_t class_by_label(const ConjugacyClasses& cc, const std::string& label) {
    for (std::size_t i = 0; i < cc.count(); ++i)
        if (cc.labels[i] == label) return i;
    throw std::runtime_error("no class " + label);
}

}  // namespace

TEST_CASE("permutation parsing and printing") {
    Permutation p = Permutation::from_cycles("(1,2,3)(4,5)", 5);
    CHECK(p.to_cycles() == "(1,2,3)(4,5)");
    CHECK(Permutation::from_cycles("()", 3) == Permutation::identity(3));
    CHECK(p * p.inverse() == Permutation::identity(5));
    CHECK_THROWS_AS(Permutation::from_cycles("(1,2", 3), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles("(1,6)", 3), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles("(1,2)(2,3)", 3), std::invalid_argument);
}

TEST_CASE("group orders from generators") {
    CHECK(make_perm_group("S4", 4, {"(1,2)", "(1,2,3,4)"}).order() == 24);
    CHECK(make_perm_group("A4", 4, {"(1,2,3)", "(1,2)(3,4)"}).order() == 12);
    CHECK(make_perm_group("PSL(2,7)", 7, {"(1,2,3,4,5,6,7)", "(2,3)(4,7)"}).order() == 168);
    CHECK(make_perm_group("trivial", 3, {}).order() == 1);
}

TEST_CASE("order cap") {
    CHECK_THROWS_AS(EnumeratedGroup::enumerate("S4", PermutationOps{4},
                                               std::vector<Permutation>{Permutation::from_cycles("(1,2)", 4),
                                                                        Permutation::from_cycles("(1,2,3,4)", 4)},
                                               10),
                    GroupCapError);
}

TEST_CASE("conjugacy classes of S4 and A4") {
    auto s4 = make_perm_group("S4", 4, {"(1,2)", "(1,2,3,4)"});
    auto s4cc = conjugacy_classes(s4);
    std::vector<long long> sizes(s4cc.sizes);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<long long>{1, 3, 6, 6, 8});
    CHECK(s4cc.labels[0] == "1a");
    CHECK(s4cc.sizes[0] == 1);

    auto a4 = make_perm_group("A4", 4, {"(1,2,3)", "(1,2)(3,4)"});
    auto a4cc = conjugacy_classes(a4);
    std::vector<long long> a4sizes(a4cc.sizes);
    std::sort(a4sizes.begin(), a4sizes.end());
    CHECK(a4sizes == std::vector<long long>{1, 3, 4, 4});
    std::vector<long long> a4orders(a4cc.orders);
    std::sort(a4orders.begin(), a4orders.end());
    CHECK(a4orders == std::vector<long long>{1, 2, 3, 3});

    auto triv = make_perm_group("trivial", 2, {});
    CHECK(conjugacy_classes(triv).count() == 1);
}

TEST_CASE("power maps") {
    auto a4 = make_perm_group("A4", 4, {"(1,2,3)", "(1,2)(3,4)"});
    auto cc = conjugacy_classes(a4);
    // squaring swaps the two 3-cycle classes and collapses the involutions
    auto pm2 = class_power_map(a4, cc, 2);
    std::size_t c1 = class_by_label(cc, "1a"), c2 = class_by_label(cc, "2a");
    std::size_t c3a = class_by_label(cc, "3a"), c3b = class_by_label(cc, "3b");
    CHECK(pm2[c1] == c1);
    CHECK(pm2[c2] == c1);
    CHECK(pm2[c3a] == c3b);
    CHECK(pm2[c3b] == c3a);
    // m = 1 is the identity map
    auto pm1 = class_power_map(a4, cc, 1);
    for (std::size_t i = 0; i < cc.count(); ++i) CHECK(pm1[i] == i);

    // S4 cube map fixes everything except the 3-cycles, whose cube is trivial
    auto s4 = make_perm_group("S4", 4, {"(1,2)", "(1,2,3,4)"});
    auto s4cc = conjugacy_classes(s4);
    auto pm3 = class_power_map(s4, s4cc, 3);
    for (std::size_t i = 0; i < s4cc.count(); ++i) {
        if (s4cc.orders[i] == 3)
            CHECK(pm3[i] == class_by_label(s4cc, "1a"));
        else
            CHECK(pm3[i] == i);
    }

    // order arithmetic: order(g^m) = order(g)/gcd(order(g), m)
    for (long long m = 1; m <= 12; ++m) {
        auto pm = class_power_map(s4, s4cc, m);
        for (std::size_t i = 0; i < s4cc.count(); ++i)
            CHECK(s4cc.orders[pm[i]] == s4cc.orders[i] / gcd_ll(s4cc.orders[i], m));
    }
}

TEST_CASE("character tables of the small groups") {
    auto a4 = make_perm_group("A4", 4, {"(1,2,3)", "(1,2)(3,4)"});
    auto a4cc = conjugacy_classes(a4);
    auto a4tbl = compute_character_table(a4, a4cc);
    CHECK(a4tbl.degrees() == std::vector<long long>{1, 1, 1, 3});
    CHECK(a4tbl.validate().ok());
    // 3-dim row by class label: (1a,3a,3b,2a) -> (3,0,0,-1)
    std::size_t c3a = class_by_label(a4cc, "3a"), c3b = class_by_label(a4cc, "3b"),
                c2a = class_by_label(a4cc, "2a");
    const auto& row = a4tbl.irreducibles[3];
    CHECK(row[0] == Cyclotomic::integer(3));
    CHECK(row[c3a].is_zero());
    CHECK(row[c3b].is_zero());
    CHECK(row[c2a] == Cyclotomic::integer(-1));

    auto s4 = make_perm_group("S4", 4, {"(1,2)", "(1,2,3,4)"});
    auto s4tbl = compute_character_table(s4, conjugacy_classes(s4));
    CHECK(s4tbl.degrees() == std::vector<long long>{1, 1, 2, 3, 3});
    CHECK(s4tbl.validate().ok());

    auto psl = make_perm_group("PSL(2,7)", 7, {"(1,2,3,4,5,6,7)", "(2,3)(4,7)"});
    auto psltbl = compute_character_table(psl, conjugacy_classes(psl));
    CHECK(psltbl.degrees() == std::vector<long long>{1, 3, 3, 6, 7, 8});
    CHECK(psltbl.validate().ok());
}

TEST_CASE("SL(2,9) from matrix generators over F9") {
    SmallField f9(9);
    CHECK(f9.characteristic() == 3);
    CHECK(f9.modulus() == std::vector<int>{1, 0, 1});  // t^2 + 1, the smallest monic irreducible
    FqMatrixOps ops{std::make_shared<SmallField>(9), 2};
    std::vector<FqMatrix> gens(3);
    gens[0].dim = 2;
    gens[0].entries = {1, 1, 0, 1};
    gens[1].dim = 2;
    gens[1].entries = {1, 3, 0, 1};
    gens[2].dim = 2;
    gens[2].entries = {0, 2, 1, 0};
    auto g = EnumeratedGroup::enumerate("SL(2,9)", ops, gens);
    CHECK(g.order() == 720);
    CHECK(g.exponent() == 120);
    auto cc = conjugacy_classes(g);
    CHECK(cc.count() == 13);
    auto tbl = compute_character_table(g, cc);
    CHECK(tbl.degrees() == std::vector<long long>{1, 4, 4, 5, 5, 8, 8, 8, 8, 9, 10, 10, 10});
    CHECK(tbl.validate().ok());
}

TEST_CASE("cyclotomic matrix group") {
    // C6 generated by the 1x1 matrix (zeta_6)
    CycMatrixOps ops{1};
    CycMatrix gen;
    gen.dim = 1;
    gen.entries = {Cyclotomic::root_of_unity(6, 1)};
    auto g = EnumeratedGroup::enumerate("C6", ops, {gen});
    CHECK(g.order() == 6);
    auto tbl = compute_character_table(g, conjugacy_classes(g));
    CHECK(tbl.degrees() == std::vector<long long>(6, 1));
    CHECK(tbl.validate().ok());
}

TEST_CASE("table file round trip") {
    auto s4 = make_perm_group("S4", 4, {"(1,2)", "(1,2,3,4)"});
    auto tbl = compute_character_table(s4, conjugacy_classes(s4));
    std::string path = "build_test_s4_roundtrip.tbl";
    write_character_table(tbl, path);
    CharacterTable back = load_character_table(path);
    CHECK(back.order == tbl.order);
    CHECK(back.classes.size() == tbl.classes.size());
    for (std::size_t i = 0; i < tbl.irreducibles.size(); ++i)
        for (std::size_t c = 0; c < tbl.classes.size(); ++c)
            CHECK(back.irreducibles[i][c] == tbl.irreducibles[i][c]);
    // byte-exact rewrite
    std::string path2 = "build_test_s4_roundtrip2.tbl";
    write_character_table(back, path2);
    std::ifstream f1(path), f2(path2);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    std::remove(path.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("validation failures are distinguished") {
    auto a4 = make_perm_group("A4", 4, {"(1,2,3)", "(1,2)(3,4)"});
    auto tbl = compute_character_table(a4, conjugacy_classes(a4));

    SECTION("corrupted value breaks orthogonality") {
        CharacterTable bad = tbl;
        bad.irreducibles[3][1] = Cyclotomic::integer(1);  // was 0
        TableValidation v = bad.validate();
        CHECK_FALSE(v.ok());
        CHECK_FALSE(v.row_orthogonality_ok);
    }
    SECTION("corrupted power map is flagged as a power-map problem") {
        CharacterTable bad = tbl;
        auto pm = bad.prime_power_maps.at(2);
        // claim that the squares of one 3-cycle class land in the same class;
        // order arithmetic still holds, the Galois check must catch it
        for (std::size_t c = 0; c < pm.size(); ++c)
            if (bad.classes[c].element_order == 3 && pm[c] != c) pm[c] = c;
        bad.prime_power_maps[2] = pm;
        TableValidation v = bad.validate();
        CHECK_FALSE(v.power_maps_ok);
        CHECK(v.row_orthogonality_ok);
    }
    SECTION("wrong class size breaks structure") {
        CharacterTable bad = tbl;
        bad.classes[1].size += 1;
        TableValidation v = bad.validate();
        CHECK_FALSE(v.ok());
    }
    SECTION("trivial-group table is accepted") {
        CharacterTable t;
        t.name = "1";
        t.order = 1;
        t.classes = {{"1a", 1, 1}};
        t.irreducibles = {{Cyclotomic::integer(1)}};
        CHECK(t.validate().ok());
    }
}

TEST_CASE("group spec files") {
    GroupSpec spec = read_group_spec("fixtures/sl2f9.grp");
    CHECK(spec.kind == "matrix");
    CHECK(spec.field == "gf 9");
    auto g = build_group(spec);
    CHECK(g.order() == 720);
    CHECK_THROWS_AS(read_group_spec("fixtures/does_not_exist.grp"), TableParseError);
}

TEST_CASE("bundled fixtures load and validate") {
    for (const std::string base : {"a4", "s4", "psl2f7", "sl2f9"}) {
        CharacterTable t = load_character_table("fixtures/" + base + ".tbl");
        CHECK(t.validate().ok());
        CHECK(t.provenance == "computed");
    }
    CharacterTable v = load_character_table("fixtures/v1080.tbl");
    CHECK(v.order == 1080);
    CHECK(v.class_count() == 17);
    CHECK(v.irreducible_count() == 17);
    CHECK(v.provenance.substr(0, 8) == "external");
}
