#pragma once

// Class functions over a character table: Adams operations through power maps,
// symmetric and exterior powers by Newton-type recursions, adjoint, inner
// products, decomposition into irreducibles with the multiplicity-counting
// summand number N, and the character-level identity checks.

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurpow/character_table.hpp"

namespace schurpow {

/// Cyclotomic-valued class function attached to a table.
struct ClassFunction {
    const CharacterTable* table = nullptr;
    std::vector<Cyclotomic> values;

    bool operator==(const ClassFunction& rhs) const {
        if (table != rhs.table || values.size() != rhs.values.size()) return false;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (!(values[i] == rhs.values[i])) return false;
        return true;
    }
};

inline void check_same_table(const ClassFunction& a, const ClassFunction& b) {
    if (a.table == nullptr || a.table != b.table)
        throw std::invalid_argument("class functions live on different tables");
}

inline ClassFunction trivial_character(const CharacterTable& t) {
    return {&t, std::vector<Cyclotomic>(t.class_count(), Cyclotomic::integer(1))};
}

inline ClassFunction irreducible(const CharacterTable& t, std::size_t index) {
    return {&t, t.irreducibles.at(index)};
}

inline ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
    check_same_table(a, b);
    ClassFunction out{a.table, a.values};
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

inline ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b) {
    check_same_table(a, b);
    ClassFunction out{a.table, a.values};
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
    return out;
}

inline ClassFunction cf_mul(const ClassFunction& a, const ClassFunction& b) {
    check_same_table(a, b);
    ClassFunction out{a.table, a.values};
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
    return out;
}

inline ClassFunction cf_conj(const ClassFunction& a) {
    ClassFunction out{a.table, a.values};
    for (auto& v : out.values) v = v.conj();
    return out;
}

/// Degree = value at the identity class; must be a rational integer.
inline long long cf_degree(const ClassFunction& a) {
    Rational d = a.values.at(0).reduce().to_rational();
    if (rational_den(d) != 1) throw std::domain_error("class function has non-integral degree");
    return static_cast<long long>(rational_num(d));
}

/// Adams operation: value at c is the value at the class of c^m.
inline ClassFunction adams(const ClassFunction& chi, long long m) {
    if (m < 1) throw std::invalid_argument("adams: m must be >= 1");
    auto pm = chi.table->power_map(m);
    ClassFunction out{chi.table, {}};
    out.values.reserve(chi.values.size());
    for (std::size_t c = 0; c < chi.values.size(); ++c) out.values.push_back(chi.values[pm[c]]);
    return out;
}

/// Symmetric power character by the Newton recursion
///   k * Sym^k = sum_{i=1..k} Adams^i(chi) * Sym^(k-i).
inline ClassFunction sym_power(const ClassFunction& chi, long long k) {
    if (k < 0) throw std::invalid_argument("sym_power: k must be >= 0");
    std::vector<ClassFunction> sym{trivial_character(*chi.table)};
    std::vector<ClassFunction> psi;  // psi[i] = adams(chi, i+1)
    for (long long j = 1; j <= k; ++j) {
        psi.push_back(adams(chi, j));
        ClassFunction acc{chi.table, std::vector<Cyclotomic>(chi.values.size(), Cyclotomic())};
        for (long long i = 1; i <= j; ++i)
            acc = cf_add(acc, cf_mul(psi[static_cast<std::size_t>(i - 1)], sym[static_cast<std::size_t>(j - i)]));
        for (auto& v : acc.values) v = v / Rational(j);
        sym.push_back(std::move(acc));
    }
    return sym.back();
}

/// Exterior power character by the signed Newton recursion
///   k * Lambda^k = sum_{i=1..k} (-1)^(i-1) Adams^i(chi) * Lambda^(k-i).
inline ClassFunction ext_power(const ClassFunction& chi, long long k) {
    if (k < 0) throw std::invalid_argument("ext_power: k must be >= 0");
    std::vector<ClassFunction> ext{trivial_character(*chi.table)};
    std::vector<ClassFunction> psi;
    for (long long j = 1; j <= k; ++j) {
        psi.push_back(adams(chi, j));
        ClassFunction acc{chi.table, std::vector<Cyclotomic>(chi.values.size(), Cyclotomic())};
        for (long long i = 1; i <= j; ++i) {
            ClassFunction term = cf_mul(psi[static_cast<std::size_t>(i - 1)], ext[static_cast<std::size_t>(j - i)]);
            if (i % 2 == 0)
                acc = cf_sub(acc, term);
            else
                acc = cf_add(acc, term);
        }
        for (auto& v : acc.values) v = v / Rational(j);
        ext.push_back(std::move(acc));
    }
    return ext.back();
}

/// Determinant character Lambda^n(chi) of a degree-n character.
inline ClassFunction determinant_character(const ClassFunction& chi) {
    return ext_power(chi, cf_degree(chi));
}

/// Adjoint character chi * conj(chi) - 1, of degree n^2 - 1.
inline ClassFunction adjoint(const ClassFunction& chi) {
    return cf_sub(cf_mul(chi, cf_conj(chi)), trivial_character(*chi.table));
}

/// Exact inner product (1/|G|) sum_c |c| phi(c) conj(psi(c)).
inline Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    check_same_table(a, b);
    return a.table->inner_product_rows(a.values, b.values);
}

/// Constituents of an actual character, with multiplicity.
struct Decomposition {
    std::vector<long long> multiplicities;  // aligned with table irreducibles
    long long summand_count = 0;            // N: total multiplicity
    std::vector<long long> constituent_degrees;  // degree per constituent, with multiplicity, ascending

    std::string to_string(const CharacterTable& t) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < multiplicities.size(); ++i) {
            if (multiplicities[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (multiplicities[i] > 1) os << multiplicities[i] << '*';
            os << "chi_" << i + 1;
        }
        if (first) os << '0';
        (void)t;
        return os.str();
    }
};

/// Signed multiplicities of a virtual class function.
inline std::vector<long long> decompose_virtual(const ClassFunction& chi) {
    const CharacterTable& t = *chi.table;
    std::vector<long long> mult;
    for (std::size_t i = 0; i < t.irreducible_count(); ++i) {
        Rational m = inner_product(chi, irreducible(t, i));
        if (rational_den(m) != 1)
            throw std::domain_error("decompose_virtual: non-integral multiplicity (corrupt table or input)");
        mult.push_back(static_cast<long long>(rational_num(m)));
    }
    // reconstruction must be exact
    ClassFunction rebuilt{&t, std::vector<Cyclotomic>(t.class_count(), Cyclotomic())};
    for (std::size_t i = 0; i < mult.size(); ++i)
        for (std::size_t c = 0; c < t.class_count(); ++c)
            rebuilt.values[c] += t.irreducibles[i][c] * Rational(mult[i]);
    if (!(rebuilt == chi)) throw std::domain_error("decompose_virtual: reconstruction mismatch");
    return mult;
}

/// Decomposition of an actual (non-virtual) character; rejects inputs with
/// negative or non-integral multiplicities.
inline Decomposition decompose(const ClassFunction& chi) {
    std::vector<long long> mult = decompose_virtual(chi);
    Decomposition d;
    d.multiplicities = std::move(mult);
    for (std::size_t i = 0; i < d.multiplicities.size(); ++i) {
        long long m = d.multiplicities[i];
        if (m < 0) throw std::domain_error("decompose: negative multiplicity, input is virtual");
        if (m > 0) {
            d.summand_count += m;
            long long deg = chi.table->degree(i);
            for (long long j = 0; j < m; ++j) d.constituent_degrees.push_back(deg);
        }
    }
    std::sort(d.constituent_degrees.begin(), d.constituent_degrees.end());
    return d;
}

/// Pointwise check of the degree-3 / degree-4 symmetric-power factorization
/// identities at the character level.
struct CharIdentityReport {
    std::string family;  // "gl3" or "gl4"
    long long m = 0;
    bool pass = false;
    std::vector<std::string> mismatched_classes;
};

inline CharIdentityReport verify_character_identity(const ClassFunction& chi, long long m, const std::string& family) {
    CharIdentityReport rep;
    rep.family = family;
    rep.m = m;
    long long n = cf_degree(chi);
    ClassFunction lhs{chi.table, {}}, rhs{chi.table, {}};
    if (family == "gl3") {
        if (n != 3) throw std::invalid_argument("verify_character_identity: gl3 case needs a degree-3 character");
        if (m < 3) throw std::invalid_argument("verify_character_identity: gl3 case needs m >= 3");
        lhs = cf_add(cf_mul(sym_power(chi, m - 1), chi), cf_mul(sym_power(chi, m - 3), ext_power(chi, 3)));
        rhs = cf_add(sym_power(chi, m), cf_mul(sym_power(chi, m - 2), ext_power(chi, 2)));
    } else if (family == "gl4") {
        if (n != 4) throw std::invalid_argument("verify_character_identity: gl4 case needs a degree-4 character");
        if (m < 4) throw std::invalid_argument("verify_character_identity: gl4 case needs m >= 4");
        lhs = cf_add(cf_add(sym_power(chi, m), cf_mul(sym_power(chi, m - 2), ext_power(chi, 2))),
                     cf_mul(sym_power(chi, m - 4), ext_power(chi, 4)));
        rhs = cf_add(cf_mul(sym_power(chi, m - 1), chi), cf_mul(sym_power(chi, m - 3), ext_power(chi, 3)));
    } else {
        throw std::invalid_argument("verify_character_identity: family must be gl3 or gl4");
    }
    rep.pass = true;
    for (std::size_t c = 0; c < lhs.values.size(); ++c)
        if (!(lhs.values[c] == rhs.values[c])) {
            rep.pass = false;
            rep.mismatched_classes.push_back(chi.table->classes[c].label);
        }
    return rep;
}

/// Self-inner-products of Sym^2(chi) and Ad(chi) for a degree-3 character,
/// with the irreducibility biconditional.
struct AdjointLinkReport {
    Rational sym2_norm;
    Rational adjoint_norm;
    bool sym2_irreducible = false;
    bool adjoint_irreducible = false;
    bool biconditional_holds = false;
};

inline AdjointLinkReport adjoint_link_check(const ClassFunction& chi) {
    if (cf_degree(chi) != 3) throw std::invalid_argument("adjoint_link_check: needs a degree-3 character");
    AdjointLinkReport rep;
    ClassFunction s2 = sym_power(chi, 2);
    ClassFunction ad = adjoint(chi);
    rep.sym2_norm = inner_product(s2, s2);
    rep.adjoint_norm = inner_product(ad, ad);
    rep.sym2_irreducible = (rep.sym2_norm == 1);
    rep.adjoint_irreducible = (rep.adjoint_norm == 1);
    rep.biconditional_holds = (rep.sym2_irreducible == rep.adjoint_irreducible);
    return rep;
}

/// Degree-1 twists fixing chi (S) and those carrying chi to its conjugate (T).
struct SelfTwists {
    std::vector<std::size_t> fixing;      // mu with chi * mu = chi
    std::vector<std::size_t> dualizing;   // mu with chi * mu = conj(chi)
};

inline SelfTwists self_twists(const ClassFunction& chi) {
    const CharacterTable& t = *chi.table;
    SelfTwists out;
    ClassFunction conjchi = cf_conj(chi);
    for (std::size_t i = 0; i < t.irreducible_count(); ++i) {
        if (t.degree(i) != 1) continue;
        ClassFunction twisted = cf_mul(chi, irreducible(t, i));
        if (twisted == chi) out.fixing.push_back(i);
        if (twisted == conjchi) out.dualizing.push_back(i);
    }
    return out;
}

}  // namespace schurpow
