#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "schurpow/dixon.hpp"
#include "schurpow/plethysm.hpp"
#include "schurpow/table_io.hpp"

using namespace schurpow;

namespace {

const CharacterTable& a4_table() {
    static CharacterTable t = [] {
        auto g = EnumeratedGroup::enumerate("A4", PermutationOps{4},
                                            {Permutation::from_cycles("(1,2,3)", 4),
                                             Permutation::from_cycles("(1,2)(3,4)", 4)});
        return compute_character_table(g, conjugacy_classes(g));
    }();
    return t;
}

const CharacterTable& s4_table() {
    static CharacterTable t = [] {
        auto g = EnumeratedGroup::enumerate("S4", PermutationOps{4},
                                            {Permutation::from_cycles("(1,2)", 4),
                                             Permutation::from_cycles("(1,2,3,4)", 4)});
        return compute_character_table(g, conjugacy_classes(g));
    }();
    return t;
}

const CharacterTable& psl_table() {
    static CharacterTable t = [] {
        auto g = EnumeratedGroup::enumerate("PSL(2,7)", PermutationOps{7},
                                            {Permutation::from_cycles("(1,2,3,4,5,6,7)", 7),
                                             Permutation::from_cycles("(2,3)(4,7)", 7)});
        return compute_character_table(g, conjugacy_classes(g));
    }();
    return t;
}

const CharacterTable& v1080_table() {
    static CharacterTable t = load_character_table("fixtures/v1080.tbl");
    return t;
}

std::size_t class_index(const CharacterTable& t, const std::string& label) {
    for (std::size_t i = 0; i < t.class_count(); ++i)
        if (t.classes[i].label == label) return i;
    throw std::runtime_error("no class " + label);
}

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("adams operations") {
    const CharacterTable& t = a4_table();
    ClassFunction chi = irreducible(t, 3);
    CHECK(adams(chi, 1) == chi);
    // squaring: value at 2a becomes chi(1a), the 3-cycle classes swap
    ClassFunction sq = adams(chi, 2);
    CHECK(sq.values[class_index(t, "1a")] == Cyclotomic::integer(3));
    CHECK(sq.values[class_index(t, "2a")] == Cyclotomic::integer(3));
    CHECK(sq.values[class_index(t, "3a")].is_zero());
    ClassFunction triv = trivial_character(t);
    for (long long m = 1; m <= 6; ++m) CHECK(adams(triv, m) == triv);
}

TEST_CASE("symmetric power values and degrees") {
    const CharacterTable& t = a4_table();
    ClassFunction chi = irreducible(t, 3);
    ClassFunction s2 = sym_power(chi, 2);
    CHECK(s2.values[class_index(t, "1a")] == Cyclotomic::integer(6));
    CHECK(s2.values[class_index(t, "2a")] == Cyclotomic::integer(2));
    CHECK(s2.values[class_index(t, "3a")].is_zero());
    CHECK(s2.values[class_index(t, "3b")].is_zero());
    CHECK(sym_power(chi, 0) == trivial_character(t));
    CHECK(sym_power(chi, 1) == chi);
    for (long long k = 0; k <= 8; ++k) CHECK(cf_degree(sym_power(chi, k)) == binom(3 + k - 1, k));
}

TEST_CASE("exterior power values and degrees") {
    for (const CharacterTable* tp : {&a4_table(), &psl_table()}) {
        const CharacterTable& t = *tp;
        for (std::size_t i = 0; i < t.irreducible_count(); ++i) {
            if (t.degree(i) != 3) continue;
            ClassFunction chi = irreducible(t, i);
            for (long long k = 0; k <= 5; ++k) CHECK(cf_degree(ext_power(chi, k)) == binom(3, k));
            CHECK(ext_power(chi, 0) == trivial_character(t));
            // Lambda^2 = conj(chi) * det, Lambda^3 = det
            ClassFunction det = determinant_character(chi);
            CHECK(ext_power(chi, 2) == cf_mul(cf_conj(chi), det));
            CHECK(ext_power(chi, 3) == det);
        }
    }
    // 4-dimensional case: Lambda^3 = conj(chi) * det
    CharacterTable sl = load_character_table("fixtures/sl2f9.tbl");
    for (std::size_t i = 0; i < sl.irreducible_count(); ++i) {
        if (sl.degree(i) != 4) continue;
        ClassFunction chi = irreducible(sl, i);
        ClassFunction det = determinant_character(chi);
        CHECK(ext_power(chi, 3) == cf_mul(cf_conj(chi), det));
        CHECK(cf_degree(ext_power(chi, 2)) == 6);
    }
}

TEST_CASE("adjoint character") {
    const CharacterTable& t = a4_table();
    CHECK(adjoint(trivial_character(t)).values[0].is_zero());
    ClassFunction ad = adjoint(irreducible(t, 3));
    CHECK(ad.values[class_index(t, "1a")] == Cyclotomic::integer(8));
    CHECK(ad.values[class_index(t, "2a")].is_zero());
    CHECK(ad.values[class_index(t, "3a")] == Cyclotomic::integer(-1));
    CHECK(ad.values[class_index(t, "3b")] == Cyclotomic::integer(-1));
}

TEST_CASE("squared-adjoint identity from the degree-6 polynomial identity") {
    // Sym2*conj(Sym2) + Sym2*conj(L2) + conj(Sym2)*L2 + L2*conj(L2)
    //   = Ad^2 + 2 Ad + 1 pointwise, for 3-dimensional characters
    std::vector<ClassFunction> chis;
    chis.push_back(irreducible(a4_table(), 3));
    for (std::size_t i = 0; i < psl_table().irreducible_count(); ++i)
        if (psl_table().degree(i) == 3) chis.push_back(irreducible(psl_table(), i));
    chis.push_back(irreducible(v1080_table(), 1));
    for (const ClassFunction& chi : chis) {
        ClassFunction s2 = sym_power(chi, 2), l2 = ext_power(chi, 2);
        ClassFunction lhs = cf_add(cf_add(cf_mul(s2, cf_conj(s2)), cf_mul(s2, cf_conj(l2))),
                                   cf_add(cf_mul(cf_conj(s2), l2), cf_mul(l2, cf_conj(l2))));
        ClassFunction ad = adjoint(chi);
        ClassFunction rhs = cf_add(cf_mul(ad, ad), cf_add(cf_add(ad, ad), trivial_character(*chi.table)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("inner products") {
    const CharacterTable& t = a4_table();
    ClassFunction triv = trivial_character(t);
    CHECK(inner_product(triv, triv) == 1);
    ClassFunction s2 = sym_power(irreducible(t, 3), 2);
    CHECK(inner_product(s2, triv) == 1);
    for (std::size_t i = 0; i < t.irreducible_count(); ++i)
        for (std::size_t j = 0; j < t.irreducible_count(); ++j)
            CHECK(inner_product(irreducible(t, i), irreducible(t, j)) == Rational(i == j ? 1 : 0));
}

TEST_CASE("decomposition of the worked symmetric squares") {
    const CharacterTable& a4 = a4_table();
    Decomposition d = decompose(sym_power(irreducible(a4, 3), 2));
    CHECK(d.multiplicities == std::vector<long long>{1, 1, 1, 1});
    CHECK(d.summand_count == 4);
    CHECK(d.constituent_degrees == std::vector<long long>{1, 1, 1, 3});

    const CharacterTable& s4 = s4_table();
    for (std::size_t i = 0; i < s4.irreducible_count(); ++i) {
        if (s4.degree(i) != 3) continue;
        Decomposition ds = decompose(sym_power(irreducible(s4, i), 2));
        CHECK(ds.summand_count == 3);
        CHECK(ds.constituent_degrees == std::vector<long long>{1, 2, 3});
    }

    const CharacterTable& v = v1080_table();
    Decomposition dv = decompose(sym_power(irreducible(v, 1), 4));
    std::vector<long long> expected(17, 0);
    expected[7] = 1;   // chi_8
    expected[12] = 1;  // chi_13
    CHECK(dv.multiplicities == expected);
    CHECK(dv.summand_count == 2);
}

TEST_CASE("virtual inputs are rejected by decompose but handled by decompose_virtual") {
    const CharacterTable& t = a4_table();
    ClassFunction virt = cf_sub(irreducible(t, 0), irreducible(t, 3));
    CHECK_THROWS_AS(decompose(virt), std::domain_error);
    std::vector<long long> signed_mult = decompose_virtual(virt);
    CHECK(signed_mult == std::vector<long long>{1, 0, 0, -1});
}

TEST_CASE("decomposition round trip on random nonnegative combinations") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long long> mult(0, 5);
    const std::vector<const CharacterTable*> tables{&a4_table(), &s4_table(), &psl_table()};
    for (int trial = 0; trial < 400; ++trial) {
        const CharacterTable& t = *tables[static_cast<std::size_t>(trial) % tables.size()];
        std::vector<long long> coeffs(t.irreducible_count());
        bool nonzero = false;
        for (auto& c : coeffs) {
            c = mult(rng);
            nonzero = nonzero || c > 0;
        }
        if (!nonzero) coeffs[0] = 1;
        ClassFunction sum{&t, std::vector<Cyclotomic>(t.class_count(), Cyclotomic())};
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            for (std::size_t c = 0; c < t.class_count(); ++c)
                sum.values[c] += t.irreducibles[i][c] * Rational(coeffs[i]);
        Decomposition dec = decompose(sum);
        CHECK(dec.multiplicities == coeffs);
    }
}

TEST_CASE("character-level identities on the computed fixtures") {
    ClassFunction a4chi = irreducible(a4_table(), 3);
    for (long long m = 3; m <= 10; ++m) CHECK(verify_character_identity(a4chi, m, "gl3").pass);
    for (std::size_t i = 0; i < psl_table().irreducible_count(); ++i) {
        if (psl_table().degree(i) != 3) continue;
        ClassFunction chi = irreducible(psl_table(), i);
        for (long long m = 3; m <= 10; ++m) CHECK(verify_character_identity(chi, m, "gl3").pass);
    }
    CharacterTable sl = load_character_table("fixtures/sl2f9.tbl");
    for (std::size_t i = 0; i < sl.irreducible_count(); ++i) {
        if (sl.degree(i) != 4) continue;
        ClassFunction chi = irreducible(sl, i);
        for (long long m = 4; m <= 8; ++m) CHECK(verify_character_identity(chi, m, "gl4").pass);
    }
    CHECK_THROWS_AS(verify_character_identity(a4chi, 3, "gl4"), std::invalid_argument);
    CHECK_THROWS_AS(verify_character_identity(a4chi, 2, "gl3"), std::invalid_argument);
}

TEST_CASE("adjoint link biconditional") {
    AdjointLinkReport a4rep = adjoint_link_check(irreducible(a4_table(), 3));
    CHECK_FALSE(a4rep.sym2_irreducible);
    CHECK_FALSE(a4rep.adjoint_irreducible);
    CHECK(a4rep.biconditional_holds);
    CHECK(a4rep.sym2_norm == 4);

    for (std::size_t i = 0; i < psl_table().irreducible_count(); ++i) {
        if (psl_table().degree(i) != 3) continue;
        AdjointLinkReport rep = adjoint_link_check(irreducible(psl_table(), i));
        CHECK(rep.sym2_irreducible);
        CHECK(rep.adjoint_irreducible);
        CHECK(rep.biconditional_holds);
    }

    AdjointLinkReport vrep = adjoint_link_check(irreducible(v1080_table(), 1));
    CHECK(vrep.sym2_irreducible);
    CHECK(vrep.adjoint_irreducible);
    CHECK(vrep.biconditional_holds);
}

TEST_CASE("self twists") {
    SelfTwists a4st = self_twists(irreducible(a4_table(), 3));
    CHECK(a4st.fixing.size() == 3);
    CHECK(a4st.dualizing.size() == 3);
    CHECK(a4st.fixing == a4st.dualizing);  // the character is real-valued

    for (std::size_t i = 0; i < psl_table().irreducible_count(); ++i) {
        if (psl_table().degree(i) != 3) continue;
        SelfTwists st = self_twists(irreducible(psl_table(), i));
        CHECK(st.fixing == std::vector<std::size_t>{0});  // perfect group: only the trivial twist
    }

    // trivial character is always a fixing twist; nontrivial fixing twists of
    // a 3-dim irreducible cube to the trivial character
    for (const CharacterTable* tp : {&a4_table(), &s4_table(), &psl_table(), &v1080_table()}) {
        const CharacterTable& t = *tp;
        for (std::size_t i = 0; i < t.irreducible_count(); ++i) {
            if (t.degree(i) != 3) continue;
            SelfTwists st = self_twists(irreducible(t, i));
            CHECK(std::find(st.fixing.begin(), st.fixing.end(), 0u) != st.fixing.end());
            if (!st.dualizing.empty()) CHECK(st.fixing.size() == st.dualizing.size());
            for (std::size_t mu : st.fixing) {
                ClassFunction m = irreducible(t, mu);
                ClassFunction cube = cf_mul(cf_mul(m, m), m);
                CHECK(cube == trivial_character(t));
            }
        }
    }
}

TEST_CASE("Koszul alternating sum vanishes") {
    std::vector<ClassFunction> chis;
    chis.push_back(irreducible(a4_table(), 3));
    chis.push_back(irreducible(s4_table(), 4));
    chis.push_back(irreducible(psl_table(), 3));  // a 6-dimensional character as well
    chis.push_back(irreducible(v1080_table(), 1));
    for (const ClassFunction& chi : chis) {
        for (long long k = 1; k <= 6; ++k) {
            ClassFunction acc{chi.table, std::vector<Cyclotomic>(chi.table->class_count(), Cyclotomic())};
            for (long long i = 0; i <= k; ++i) {
                ClassFunction term = cf_mul(ext_power(chi, i), sym_power(chi, k - i));
                acc = (i % 2 == 1) ? cf_sub(acc, term) : cf_add(acc, term);
            }
            for (const auto& v : acc.values) CHECK(v.is_zero());
        }
    }
}

TEST_CASE("missing power maps are reported") {
    CharacterTable t = a4_table();
    t.prime_power_maps.erase(2);
    ClassFunction chi = irreducible(t, 3);
    CHECK_THROWS_WITH(adams(chi, 2), Catch::Matchers::ContainsSubstring("power map"));
}
