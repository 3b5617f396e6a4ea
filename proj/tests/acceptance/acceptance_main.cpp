// Acceptance suite: end-to-end checks of the full stack at fixed tolerances,
// one PASS/FAIL line per criterion. All comparisons are exact; the only
// numeric tolerances are the runtime budgets. Exits nonzero if any criterion
// fails.
//
// Usage: acceptance_tests [fixtures-dir]   (default: fixtures, or the
// SCHURPOW_FIXTURES environment variable)

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "schurpow/bounds.hpp"
#include "schurpow/dixon.hpp"
#include "schurpow/parallel.hpp"
#include "schurpow/plethysm.hpp"
#include "schurpow/schur.hpp"
#include "schurpow/table_io.hpp"
#include "../support/schur_oracle.hpp"

using namespace schurpow;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_fixtures = "fixtures";
int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    Clock::time_point start = Clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name;
    if (!detail.empty()) line << " -- " << detail;
    line << "  [" << seconds << "s]";
    std::cout << line.str() << std::endl;
    if (!ok) ++g_failures;
}

std::string fx(const std::string& file) { return g_fixtures + "/" + file; }

CharacterTable computed_table(const std::string& grp_file) {
    GroupSpec spec = read_group_spec(fx(grp_file));
    EnumeratedGroup g = build_group(spec);
    return compute_character_table(g, conjugacy_classes(g));
}

std::vector<std::size_t> indices_of_degree(const CharacterTable& t, long long d) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < t.irreducible_count(); ++i)
        if (t.degree(i) == d) out.push_back(i);
    return out;
}

// 1. exact polynomial identity suites, m in [3,40], under 60 seconds
bool c1_identities(std::string& detail) {
    Clock::time_point start = Clock::now();
    std::atomic<int> failures{0};
    parallel_for(38, default_jobs(), [&](std::size_t i) {
        long long m = 3 + static_cast<long long>(i);
        if (!verify_gl3_identity(m).passed()) ++failures;
        if (!verify_gl4_identity(m).passed()) ++failures;
    });
    if (!verify_gl3_adjoint_identity().passed()) ++failures;
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream os;
    os << "gl3 + gl4 for m in [3,40] and the adjoint identity, " << seconds << "s";
    detail = os.str();
    return failures == 0 && seconds < 60.0;
}

// 2. LR rule vs brute-force polynomial expansion, all |lambda|,|mu| <= 6
bool c2_lr_oracle(std::string& detail) {
    std::vector<Partition> shapes;
    for (int w = 0; w <= 6; ++w)
        for (const Partition& p : partitions_of(w)) shapes.push_back(p);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < shapes.size(); ++a)
        for (std::size_t b = a; b < shapes.size(); ++b) pairs.emplace_back(a, b);
    std::atomic<int> mismatches{0};
    parallel_for(pairs.size(), default_jobs(), [&](std::size_t i) {
        const Partition& a = shapes[pairs[i].first];
        const Partition& b = shapes[pairs[i].second];
        if (!(lr_expand(a, b) == testing::oracle_lr_expand(a, b))) ++mismatches;
    });
    std::ostringstream os;
    os << pairs.size() << " unordered pairs, " << mismatches << " mismatches";
    detail = os.str();
    return mismatches == 0;
}

// 3. bialternant vs tableau construction, |lambda| <= 8, n in {2,3,4,5}
bool c3_two_constructions(std::string& detail) {
    std::vector<Partition> shapes;
    for (int w = 0; w <= 8; ++w)
        for (const Partition& p : partitions_of(w)) shapes.push_back(p);
    std::atomic<int> mismatches{0};
    parallel_for(shapes.size(), default_jobs(), [&](std::size_t i) {
        for (int n = 2; n <= 5; ++n)
            if (!(schur_bialternant(shapes[i], n) == schur_tableau(shapes[i], n))) ++mismatches;
    });
    std::ostringstream os;
    os << shapes.size() << " shapes x 4 variable counts, " << mismatches << " mismatches";
    detail = os.str();
    return mismatches == 0;
}

// 4. GL3 thresholds over k <= 500, exact, under 1 second
bool c4_gl3_thresholds(std::string& detail) {
    Clock::time_point start = Clock::now();
    ThresholdReport rep = threshold_scan(BoundCase::GL3, 500);
    bool ok = rep.all_hold();
    ok = ok && rep.row(7).effective_bound == 3;
    ok = ok && rep.row(19).effective_bound == 2;
    for (long long k = 2; k <= 500; ++k) ok = ok && rep.row(k).effective_bound <= 4;
    for (long long k = 7; k <= 500; ++k) ok = ok && rep.row(k).effective_bound <= 3;
    ok = ok && rep.row(3).effective_bound <= 3 && rep.row(4).effective_bound <= 3;
    for (long long k = 19; k <= 500; ++k)
        if (k % 3 == 1) ok = ok && rep.row(k).effective_bound <= 2;
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream os;
    os << "k <= 500, spot values k=7 -> 3 and k=19 -> 2, " << seconds << "s";
    detail = os.str();
    return ok && seconds < 1.0;
}

// 5. GL4 thresholds over k <= 1000, exact, under 1 second
bool c5_gl4_thresholds(std::string& detail) {
    Clock::time_point start = Clock::now();
    ThresholdReport rep = threshold_scan(BoundCase::GL4, 1000);
    bool ok = rep.all_hold();
    for (long long k = 15; k <= 1000; ++k) ok = ok && rep.row(k).effective_bound <= 6;
    for (long long k = 21; k <= 1000; ++k) ok = ok && rep.row(k).effective_bound <= 5;
    for (long long k = 39; k <= 1000; ++k) ok = ok && rep.row(k).effective_bound <= 4;
    for (long long k = 139; k <= 1000; ++k)
        if (k % 8 == 3 || k % 8 == 5 || k % 8 == 7) ok = ok && rep.row(k).effective_bound <= 3;
    ok = ok && rep.row(15).generic_bound == 7 && rep.row(15).enhanced_bound == 6;
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream os;
    os << "k <= 1000, k=15 records generic 7 vs enhanced 6, " << seconds << "s";
    detail = os.str();
    return ok && seconds < 1.0;
}

// 6. computed character tables with exact orthogonality and degree data
bool c6_tables(std::string& detail) {
    Clock::time_point t0 = Clock::now();
    CharacterTable s4 = computed_table("s4.grp");
    CharacterTable a4 = computed_table("a4.grp");
    bool ok = s4.degrees() == std::vector<long long>{1, 1, 2, 3, 3};
    ok = ok && a4.degrees() == std::vector<long long>{1, 1, 1, 3};

    Clock::time_point t1 = Clock::now();
    CharacterTable psl = computed_table("psl2f7.grp");
    double psl_seconds = std::chrono::duration<double>(Clock::now() - t1).count();
    ok = ok && psl.degrees() == std::vector<long long>{1, 3, 3, 6, 7, 8};
    ok = ok && psl_seconds < 30.0;

    Clock::time_point t2 = Clock::now();
    CharacterTable sl = computed_table("sl2f9.grp");
    double sl_seconds = std::chrono::duration<double>(Clock::now() - t2).count();
    ok = ok && sl.order == 720;
    ok = ok && sl.degrees() == std::vector<long long>{1, 4, 4, 5, 5, 8, 8, 8, 8, 9, 10, 10, 10};
    ok = ok && sl_seconds < 300.0;

    // compute_character_table validates internally; re-validate explicitly
    for (const CharacterTable* t : {&s4, &a4, &psl, &sl}) {
        TableValidation v = t->validate();
        ok = ok && v.row_orthogonality_ok && v.column_orthogonality_ok && v.degrees_ok;
        long long sumsq = 0;
        for (long long d : t->degrees()) sumsq += d * d;
        ok = ok && sumsq == t->order;
    }
    std::ostringstream os;
    os << "S4, A4, PSL(2,7) in " << psl_seconds << "s, SL(2,9) in " << sl_seconds << "s; total "
       << std::chrono::duration<double>(Clock::now() - t0).count() << "s";
    detail = os.str();
    return ok;
}

// 7. finite-group symmetric-power decompositions, required set
bool c7_required_decompositions(std::string& detail) {
    bool ok = true;
    CharacterTable a4 = computed_table("a4.grp");
    Decomposition a4d = decompose(sym_power(irreducible(a4, 3), 2));
    ok = ok && a4d.summand_count == 4 && a4d.constituent_degrees == std::vector<long long>{1, 1, 1, 3};

    CharacterTable s4 = computed_table("s4.grp");
    for (std::size_t i : indices_of_degree(s4, 3)) {
        Decomposition d = decompose(sym_power(irreducible(s4, i), 2));
        ok = ok && d.summand_count == 3 && d.constituent_degrees == std::vector<long long>{1, 2, 3};
    }

    CharacterTable psl = computed_table("psl2f7.grp");
    std::vector<std::size_t> threes = indices_of_degree(psl, 3);
    ok = ok && threes.size() == 2;
    for (std::size_t i : threes) {
        ClassFunction chi = irreducible(psl, i);
        ok = ok && inner_product(sym_power(chi, 2), sym_power(chi, 2)) == 1;
        Decomposition d = decompose(sym_power(chi, 3));
        ok = ok && d.summand_count == 2 && d.constituent_degrees == std::vector<long long>{3, 7};
    }

    CharacterTable sl = computed_table("sl2f9.grp");
    std::vector<std::size_t> fours = indices_of_degree(sl, 4);
    ok = ok && fours.size() == 2;
    for (std::size_t i : fours) {
        ClassFunction chi = irreducible(sl, i);
        ClassFunction s2 = sym_power(chi, 2);
        ok = ok && inner_product(s2, s2) == 1 && cf_degree(s2) == 10;
        Decomposition d = decompose(sym_power(chi, 3));
        ok = ok && d.summand_count == 2 && d.constituent_degrees == std::vector<long long>{10, 10};
    }
    detail = "A4 {1,1,1,3}; S4 {1,2,3}; PSL(2,7) Sym^3 {3,7}; SL(2,9) Sym^2 = 10-dim, Sym^3 {10,10}";
    return ok;
}

// 8. the ingested 1080-element table: printed rows and Sym^2/3/4 structure
bool c8_v1080(std::string& detail) {
    CharacterTable t = load_character_table(fx("v1080.tbl"));  // throws if orthogonality fails
    bool ok = t.order == 1080 && t.class_count() == 17;

    const Cyclotomic one = Cyclotomic::integer(1);
    const Cyclotomic alpha = Cyclotomic::root_of_unity(6, 1);
    const Cyclotomic alphar = alpha.conj();
    const Cyclotomic beta = -(Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4));
    const Cyclotomic betas = -(Cyclotomic::root_of_unity(5, 2) + Cyclotomic::root_of_unity(5, 3));
    const Cyclotomic gamma = -(alpha * beta);
    const Cyclotomic gammar = gamma.conj();
    const Cyclotomic delta = -(alpha * betas);
    const Cyclotomic deltar = delta.conj();
    const Cyclotomic zero;
    auto times = [](long long c, const Cyclotomic& z) { return z * Rational(c); };

    using Row = std::vector<Cyclotomic>;
    const std::vector<Row> printed = {
        {times(3, one), times(-3, alpha), times(-3, alphar), -one, alpha, alphar, zero, zero, -alpha, -alphar, one,
         beta, gamma, gammar, deltar, betas, delta},
        {times(3, one), times(-3, alpha), times(-3, alphar), -one, alpha, alphar, zero, zero, -alpha, -alphar, one,
         betas, delta, deltar, gammar, beta, gamma},
        {times(3, one), times(-3, alphar), times(-3, alpha), -one, alphar, alpha, zero, zero, -alphar, -alpha, one,
         beta, gammar, gamma, delta, betas, deltar},
        {times(3, one), times(-3, alphar), times(-3, alpha), -one, alphar, alpha, zero, zero, -alphar, -alpha, one,
         betas, deltar, delta, gamma, beta, gammar},
    };
    for (std::size_t j = 0; j < printed.size(); ++j)
        for (std::size_t c = 0; c < 17; ++c) ok = ok && t.irreducibles[j + 1][c] == printed[j][c];

    ClassFunction chi2 = irreducible(t, 1);
    ok = ok && sym_power(chi2, 2) == irreducible(t, 8);    // chi_9
    ok = ok && sym_power(chi2, 3) == irreducible(t, 14);   // chi_15
    Decomposition d4 = decompose(sym_power(chi2, 4));
    std::vector<long long> expected(17, 0);
    expected[7] = 1;   // chi_8
    expected[12] = 1;  // chi_13
    ok = ok && d4.multiplicities == expected && d4.summand_count == 2;
    detail = "rows chi_2..chi_5 match the printed values; Sym^2(chi_2)=chi_9, Sym^3=chi_15, Sym^4=chi_8+chi_13";
    return ok;
}

// 9. character-level identity for every 3- and 4-dimensional fixture character
bool c9_character_identities(std::string& detail) {
    int checked = 0;
    bool ok = true;
    std::vector<CharacterTable> with3 = {computed_table("a4.grp"), computed_table("s4.grp"),
                                         computed_table("psl2f7.grp"), load_character_table(fx("v1080.tbl"))};
    for (const CharacterTable& t : with3)
        for (std::size_t i : indices_of_degree(t, 3)) {
            ClassFunction chi = irreducible(t, i);
            for (long long m = 3; m <= 12; ++m) ok = ok && verify_character_identity(chi, m, "gl3").pass;
            ++checked;
        }
    CharacterTable sl = computed_table("sl2f9.grp");
    for (std::size_t i : indices_of_degree(sl, 4)) {
        ClassFunction chi = irreducible(sl, i);
        for (long long m = 4; m <= 12; ++m) ok = ok && verify_character_identity(chi, m, "gl4").pass;
        ++checked;
    }
    std::ostringstream os;
    os << checked << " characters, m <= 12, exact pointwise equality";
    detail = os.str();
    return ok && checked >= 11;
}

// 10. Sym^2 irreducible <=> adjoint irreducible, with the A4 sharpness witness
bool c10_adjoint_link(std::string& detail) {
    bool ok = true;
    int checked = 0;
    std::vector<CharacterTable> tables = {computed_table("a4.grp"), computed_table("s4.grp"),
                                          computed_table("psl2f7.grp"), load_character_table(fx("v1080.tbl"))};
    for (const CharacterTable& t : tables)
        for (std::size_t i : indices_of_degree(t, 3)) {
            AdjointLinkReport rep = adjoint_link_check(irreducible(t, i));
            ok = ok && rep.biconditional_holds;
            ++checked;
        }
    Decomposition a4d = decompose(sym_power(irreducible(tables[0], 3), 2));
    ok = ok && a4d.summand_count == 4;  // the sharpness witness
    std::ostringstream os;
    os << checked << " degree-3 characters; A4 attains N(Sym^2) = 4";
    detail = os.str();
    return ok && checked >= 9;
}

// 11. property suites: Koszul sums, self-twist order law, decomposition
// round trips; >= 1000 randomized trials in total
bool c11_properties(std::string& detail) {
    bool ok = true;
    long long trials = 0;

    std::vector<CharacterTable> tables = {computed_table("a4.grp"), computed_table("s4.grp"),
                                          computed_table("psl2f7.grp"), computed_table("sl2f9.grp"),
                                          load_character_table(fx("v1080.tbl"))};

    // Koszul alternating sums for k in [1,6] on every irreducible of degree <= 4
    for (const CharacterTable& t : tables)
        for (std::size_t i = 0; i < t.irreducible_count(); ++i) {
            if (t.degree(i) > 4) continue;
            ClassFunction chi = irreducible(t, i);
            for (long long k = 1; k <= 6; ++k) {
                ClassFunction acc{&t, std::vector<Cyclotomic>(t.class_count(), Cyclotomic())};
                for (long long j = 0; j <= k; ++j) {
                    ClassFunction term = cf_mul(ext_power(chi, j), sym_power(chi, k - j));
                    acc = (j % 2 == 1) ? cf_sub(acc, term) : cf_add(acc, term);
                }
                for (const auto& v : acc.values) ok = ok && v.is_zero();
                ++trials;
            }
        }

    // self-twist order-3 law for 3-dimensional irreducibles
    for (const CharacterTable& t : tables)
        for (std::size_t i : indices_of_degree(t, 3)) {
            SelfTwists st = self_twists(irreducible(t, i));
            if (!st.dualizing.empty()) ok = ok && st.fixing.size() == st.dualizing.size();
            for (std::size_t mu : st.fixing) {
                ClassFunction m = irreducible(t, mu);
                ok = ok && cf_mul(cf_mul(m, m), m) == trivial_character(t);
                ++trials;
            }
        }

    // decomposition round trips on random nonnegative combinations
    std::mt19937 rng(20250810);
    std::uniform_int_distribution<long long> mult(0, 5);
    for (int trial = 0; trial < 900; ++trial) {
        const CharacterTable& t = tables[static_cast<std::size_t>(trial) % 3];
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
        ok = ok && decompose(sum).multiplicities == coeffs;
        ++trials;
    }
    std::ostringstream os;
    os << trials << " checks, zero failures required";
    detail = os.str();
    return ok && trials >= 1000;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        g_fixtures = argv[1];
    } else if (const char* env = std::getenv("SCHURPOW_FIXTURES")) {
        g_fixtures = env;
    }
    std::cout << "fixtures: " << g_fixtures << "\n";

    criterion(1, "Schur identity suites (gl3, gl3-adjoint, gl4), exact", c1_identities);
    criterion(2, "LR rule agrees with the polynomial-expansion oracle", c2_lr_oracle);
    criterion(3, "bialternant and tableau constructions agree", c3_two_constructions);
    criterion(4, "GL3 bound thresholds", c4_gl3_thresholds);
    criterion(5, "GL4 bound thresholds", c5_gl4_thresholds);
    criterion(6, "character tables computed with exact orthogonality", c6_tables);
    criterion(7, "symmetric-power decompositions, required groups", c7_required_decompositions);
    criterion(8, "ingested 1080-element table and its symmetric powers", c8_v1080);
    criterion(9, "character-level identities on all fixture characters", c9_character_identities);
    criterion(10, "adjoint link biconditional with sharpness witness", c10_adjoint_link);
    criterion(11, "property suites (Koszul, self-twists, round trips)", c11_properties);

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " acceptance criteria FAILED\n";
    return 1;
}
