#pragma once

// Character tables: conjugacy-class data, prime power maps, and irreducible
// characters with exact cyclotomic values. The same validation gate is applied
// to tables we compute and tables ingested from files: both orthogonality
// relations, degree bookkeeping, and power-map coherence, all in exact
// arithmetic.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurpow/cyclotomic.hpp"
#include "schurpow/numeric.hpp"

namespace schurpow {

struct ClassInfo {
    std::string label;
    long long element_order = 1;
    long long size = 1;
};

struct TableValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-category validation outcome, so failures are distinguishable.
struct TableValidation {
    bool structure_ok = true;
    bool degrees_ok = true;
    bool row_orthogonality_ok = true;
    bool column_orthogonality_ok = true;
    bool power_maps_ok = true;
    std::vector<std::string> messages;

    bool ok() const {
        return structure_ok && degrees_ok && row_orthogonality_ok && column_orthogonality_ok && power_maps_ok;
    }
};

class CharacterTable {
public:
    std::string name;
    std::string provenance;  // "computed" or a note on external origin
    long long order = 0;
    std::vector<ClassInfo> classes;
    std::map<long long, std::vector<std::size_t>> prime_power_maps;
    std::vector<std::vector<Cyclotomic>> irreducibles;

    std::size_t class_count() const { return classes.size(); }
    std::size_t irreducible_count() const { return irreducibles.size(); }

    /// Degree of irreducible i (its value at the identity class).
    long long degree(std::size_t i) const {
        Rational d = irreducibles.at(i).at(0).reduce().to_rational();
        if (rational_den(d) != 1) throw std::domain_error("CharacterTable: non-integral degree");
        return static_cast<long long>(rational_num(d));
    }

    std::vector<long long> degrees() const {
        std::vector<long long> out;
        out.reserve(irreducibles.size());
        for (std::size_t i = 0; i < irreducibles.size(); ++i) out.push_back(degree(i));
        return out;
    }

    /// Class map of g -> g^m, composed from the stored prime maps. m = 0 maps
    /// every class to the identity class.
    std::vector<std::size_t> power_map(long long m) const {
        if (m < 0) throw std::invalid_argument("power_map: m must be nonnegative");
        std::size_t r = classes.size();
        std::vector<std::size_t> pm(r);
        if (m == 0) {
            for (std::size_t c = 0; c < r; ++c) pm[c] = 0;
            return pm;
        }
        for (std::size_t c = 0; c < r; ++c) pm[c] = c;
        for (auto [p, e] : factorize(m)) {
            auto it = prime_power_maps.find(p);
            if (it == prime_power_maps.end())
                throw std::runtime_error("power_map: table '" + name + "' lacks the power map for prime " +
                                         std::to_string(p));
            for (int i = 0; i < e; ++i)
                for (std::size_t c = 0; c < r; ++c) pm[c] = it->second[pm[c]];
        }
        return pm;
    }

    /// Class of inverses of class c (g -> g^(order-1)).
    std::size_t inverse_class(std::size_t c) const {
        long long o = classes[c].element_order;
        if (o == 1) return c;
        std::size_t cur = c;
        for (auto [p, e] : factorize(o - 1)) {
            auto it = prime_power_maps.find(p);
            if (it == prime_power_maps.end())
                throw std::runtime_error("inverse_class: missing power map for prime " + std::to_string(p));
            for (int i = 0; i < e; ++i) cur = it->second[cur];
        }
        return cur;
    }

    /// Exact inner product of two value rows over this table's classes.
    Rational inner_product_rows(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const {
        Cyclotomic sum;
        for (std::size_t c = 0; c < classes.size(); ++c)
            sum += a[c] * b[c].conj() * Rational(classes[c].size);
        Cyclotomic scaled = sum / Rational(order);
        Cyclotomic reduced = scaled.reduce();
        if (!reduced.is_rational())
            throw std::domain_error("inner_product_rows: value is not rational");
        return reduced.to_rational();
    }

    TableValidation validate() const {
        TableValidation v;
        std::size_t r = classes.size();

        // structure: identity class first, sizes sum to |G|, labels nonempty
        if (r == 0 || order <= 0 || irreducibles.size() != r) {
            v.structure_ok = false;
            v.messages.push_back("structure: need a nonempty square table with positive order");
            return v;
        }
        if (classes[0].element_order != 1 || classes[0].size != 1) {
            v.structure_ok = false;
            v.messages.push_back("structure: first class must be the identity class");
        }
        long long total = 0;
        for (const auto& c : classes) total += c.size;
        if (total != order) {
            v.structure_ok = false;
            v.messages.push_back("structure: class sizes sum to " + std::to_string(total) + ", expected " +
                                 std::to_string(order));
        }
        for (const auto& row : irreducibles)
            if (row.size() != r) {
                v.structure_ok = false;
                v.messages.push_back("structure: character row length mismatch");
                return v;
            }

        // degrees: positive integers, sum of squares = |G|, first character trivial
        long long sumsq = 0;
        try {
            for (std::size_t i = 0; i < r; ++i) {
                long long d = degree(i);
                if (d <= 0) throw std::domain_error("nonpositive degree");
                sumsq += d * d;
            }
        } catch (const std::exception& e) {
            v.degrees_ok = false;
            v.messages.push_back(std::string("degrees: ") + e.what());
        }
        if (v.degrees_ok && sumsq != order) {
            v.degrees_ok = false;
            v.messages.push_back("degrees: sum of squares is " + std::to_string(sumsq) + ", expected " +
                                 std::to_string(order));
        }
        for (std::size_t c = 0; v.degrees_ok && c < r; ++c)
            if (!(irreducibles[0][c] == Cyclotomic::integer(1))) {
                v.degrees_ok = false;
                v.messages.push_back("degrees: first character is not the trivial character");
            }

        // row orthogonality
        for (std::size_t i = 0; i < r && v.row_orthogonality_ok; ++i)
            for (std::size_t j = i; j < r; ++j) {
                Rational ip;
                try {
                    ip = inner_product_rows(irreducibles[i], irreducibles[j]);
                } catch (const std::exception&) {
                    v.row_orthogonality_ok = false;
                    v.messages.push_back("row orthogonality: irrational inner product");
                    break;
                }
                if (ip != Rational(i == j ? 1 : 0)) {
                    v.row_orthogonality_ok = false;
                    std::ostringstream os;
                    os << "row orthogonality: <chi_" << i + 1 << ", chi_" << j + 1 << "> != " << (i == j ? 1 : 0);
                    v.messages.push_back(os.str());
                    break;
                }
            }

        // column orthogonality
        for (std::size_t c = 0; c < r && v.column_orthogonality_ok; ++c)
            for (std::size_t d = c; d < r; ++d) {
                Cyclotomic sum;
                for (std::size_t i = 0; i < r; ++i) sum += irreducibles[i][c] * irreducibles[i][d].conj();
                Cyclotomic expected = (c == d) ? Cyclotomic::rational(Rational(order) / Rational(classes[c].size))
                                               : Cyclotomic();
                if (!(sum == expected)) {
                    v.column_orthogonality_ok = false;
                    v.messages.push_back("column orthogonality: classes " + classes[c].label + ", " +
                                         classes[d].label);
                    break;
                }
            }

        // power maps: totality, order arithmetic, Galois coherence,
        // commutation, and conj(chi(c)) = chi(c^-1)
        for (const auto& [p, pm] : prime_power_maps) {
            if (pm.size() != r) {
                v.power_maps_ok = false;
                v.messages.push_back("power maps: map for prime " + std::to_string(p) + " has wrong length");
                continue;
            }
            for (std::size_t c = 0; c < r; ++c) {
                if (pm[c] >= r) {
                    v.power_maps_ok = false;
                    v.messages.push_back("power maps: index out of range");
                    break;
                }
                long long o = classes[c].element_order;
                long long expect = o / gcd_ll(o, p);
                if (classes[pm[c]].element_order != expect) {
                    v.power_maps_ok = false;
                    v.messages.push_back("power maps: order of " + classes[c].label + "^" + std::to_string(p) +
                                         " should be " + std::to_string(expect));
                    break;
                }
                if (o % p != 0) {
                    // coprime case: chi(g^p) is the Galois twist sigma_p of chi(g)
                    for (std::size_t i = 0; i < r; ++i) {
                        Cyclotomic value = irreducibles[i][c].reduce();
                        bool consistent = false;
                        if (gcd_ll(p, value.conductor()) == 1)
                            consistent = (value.galois(p) == irreducibles[i][pm[c]]);
                        if (!consistent) {
                            v.power_maps_ok = false;
                            v.messages.push_back("power maps: Galois inconsistency at class " + classes[c].label +
                                                 ", prime " + std::to_string(p) + ", character " + std::to_string(i + 1));
                            break;
                        }
                    }
                    if (!v.power_maps_ok) break;
                }
            }
        }
        if (v.power_maps_ok) {
            for (const auto& [p, pma] : prime_power_maps)
                for (const auto& [q, pmb] : prime_power_maps)
                    for (std::size_t c = 0; c < r; ++c)
                        if (pma[pmb[c]] != pmb[pma[c]]) {
                            v.power_maps_ok = false;
                            v.messages.push_back("power maps: maps for primes " + std::to_string(p) + " and " +
                                                 std::to_string(q) + " do not commute");
                        }
        }
        if (v.power_maps_ok && !prime_power_maps.empty()) {
            try {
                for (std::size_t c = 0; c < r; ++c) {
                    std::size_t ic = inverse_class(c);
                    for (std::size_t i = 0; i < r; ++i)
                        if (!(irreducibles[i][ic] == irreducibles[i][c].conj())) {
                            v.power_maps_ok = false;
                            v.messages.push_back("power maps: chi(c^-1) != conj(chi(c)) at class " + classes[c].label);
                            break;
                        }
                    if (!v.power_maps_ok) break;
                }
            } catch (const std::exception& e) {
                v.power_maps_ok = false;
                v.messages.push_back(std::string("power maps: ") + e.what());
            }
        }
        return v;
    }

    /// Validates and throws TableValidationError on any failure.
    void validate_or_throw() const {
        TableValidation v = validate();
        if (!v.ok()) {
            std::string msg = "character table '" + name + "' failed validation:";
            for (const auto& m : v.messages) msg += "\n  " + m;
            throw TableValidationError(msg);
        }
    }
};

}  // namespace schurpow
