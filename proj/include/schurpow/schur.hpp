#pragma once

// Schur polynomials, Littlewood-Richardson products, and mechanical
// verification of the symmetric-power factorization identities in 3 and 4
// variables. schur_poly always runs two independent constructions (bialternant
// quotient and tableau sum) and insists they agree.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurpow/partition.hpp"
#include "schurpow/sparse_poly.hpp"

namespace schurpow {

/// Nonnegative integer combination of Schur functions, all of one weight.
class SchurExpansion {
public:
    using Terms = std::map<Partition, long long>;

    SchurExpansion() = default;

    void add(const Partition& p, long long mult) {
        if (mult == 0) return;
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            terms_.emplace(p, mult);
        } else {
            it->second += mult;
            if (it->second == 0) terms_.erase(it);
        }
        if (terms_.count(p) && terms_.at(p) < 0)
            throw std::domain_error("SchurExpansion: negative multiplicity");
    }

    const Terms& terms() const { return terms_; }
    bool operator==(const SchurExpansion& rhs) const { return terms_ == rhs.terms_; }

    long long multiplicity(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? 0 : it->second;
    }

    /// Drops all partitions of length > n (restriction to n variables).
    SchurExpansion restrict_length(std::size_t n) const {
        SchurExpansion out;
        for (const auto& [p, m] : terms_)
            if (p.length() <= n) out.add(p, m);
        return out;
    }

    /// Rendering in descending lexicographic order, e.g. "S(4,1) + S(3,1,1)".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            if (it->second != 1) os << it->second << '*';
            os << "S(" << it->first.to_string() << ')';
        }
        return os.str();
    }

private:
    Terms terms_;
};

namespace detail {

/// Determinant |x_j^(lambda_i + n - 1 - i)| via the Leibniz sum (n <= 5 or so).
inline SparsePoly alternant(const Partition& lambda, int n) {
    std::vector<std::uint32_t> expo(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        expo[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(lambda.part(static_cast<std::size_t>(i)) + n - 1 - i);
    SparsePoly det(n);
    std::vector<int> cols(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = j;
    // Iterate permutations with explicit parity.
    do {
        int sign = 1;
        // parity by counting inversions
        for (std::size_t a = 0; a < cols.size(); ++a)
            for (std::size_t b = a + 1; b < cols.size(); ++b)
                if (cols[a] > cols[b]) sign = -sign;
        Monomial m(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < cols.size(); ++i)
            m[static_cast<std::size_t>(cols[i])] = expo[i];
        det.add_term(m, sign);
    } while (std::next_permutation(cols.begin(), cols.end()));
    return det;
}

inline SparsePoly vandermonde(int n) {
    SparsePoly delta = SparsePoly::constant(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            delta *= SparsePoly::variable(n, i) - SparsePoly::variable(n, j);
    return delta;
}

}  // namespace detail

/// Bialternant construction: |x_j^(lambda_i+n-i)| / prod_{i<j}(x_i - x_j).
/// Zero when lambda has more than n rows.
inline SparsePoly schur_bialternant(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("schur_bialternant: need n >= 1");
    if (lambda.length() > static_cast<std::size_t>(n)) return SparsePoly::zero(n);
    SparsePoly num = detail::alternant(lambda, n);
    // Divide by each binomial factor of the Vandermonde determinant in turn.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            num = num.divide_exact(SparsePoly::variable(n, i) - SparsePoly::variable(n, j));
    return num;
}

/// Tableau construction: sum of x^content over semistandard Young tableaux of
/// shape lambda with entries in 1..n, enumerated row by row in lexicographic
/// order. Zero when lambda has more than n rows.
inline SparsePoly schur_tableau(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("schur_tableau: need n >= 1");
    SparsePoly out(n);
    if (lambda.length() > static_cast<std::size_t>(n)) return out;
    if (lambda.empty()) return SparsePoly::constant(n, 1);

    std::size_t rows = lambda.length();
    std::vector<std::vector<int>> tab(rows);
    for (std::size_t r = 0; r < rows; ++r) tab[r].assign(static_cast<std::size_t>(lambda.part(r)), 0);
    Monomial content(static_cast<std::size_t>(n), 0);

    auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == rows) {
            out.add_term(content, 1);
            return;
        }
        if (c == tab[r].size()) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);
        if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            tab[r][c] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            self(self, r, c + 1);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    fill(fill, 0, 0);
    return out;
}

/// Schur polynomial in n variables, computed by both constructions, which are
/// required to agree exactly.
inline SparsePoly schur_poly(const Partition& lambda, int n) {
    SparsePoly a = schur_bialternant(lambda, n);
    SparsePoly b = schur_tableau(lambda, n);
    if (!(a == b))
        throw std::logic_error("schur_poly: bialternant and tableau constructions disagree for " +
                               lambda.to_string() + " in " + std::to_string(n) + " variables");
    return a;
}

namespace detail {

/// Number of Littlewood-Richardson fillings of nu/lambda with content mu:
/// semistandard skew tableaux whose reverse reading word is a lattice word.
inline long long lr_filling_count(const Partition& nu, const Partition& lambda, const Partition& mu) {
    std::size_t rows = nu.length();
    std::size_t vals = mu.length();
    if (vals == 0) return contains(nu, lambda) && nu == lambda ? 1 : 0;

    // Cell list in reverse reading order: rows top to bottom, right to left.
    struct Cell {
        std::size_t r, c;
    };
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < rows; ++r)
        for (int c = nu.part(r) - 1; c >= lambda.part(r); --c)
            cells.push_back({r, static_cast<std::size_t>(c)});

    std::vector<std::vector<int>> fill(rows);
    for (std::size_t r = 0; r < rows; ++r) fill[r].assign(static_cast<std::size_t>(nu.part(r)), 0);
    std::vector<int> counts(vals + 1, 0);

    long long total = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[idx];
        int hi = static_cast<int>(std::min(vals, r + 1));  // lattice words force entry <= row index + 1
        for (int v = 1; v <= hi; ++v) {
            // content bound
            if (counts[static_cast<std::size_t>(v)] + 1 > mu.part(static_cast<std::size_t>(v - 1))) continue;
            // lattice condition on the reverse reading word
            if (v > 1 && counts[static_cast<std::size_t>(v)] + 1 > counts[static_cast<std::size_t>(v - 1)]) continue;
            // row weakly increasing left to right (right neighbour already placed)
            if (c + 1 < fill[r].size() && fill[r][c + 1] != 0 && v > fill[r][c + 1]) continue;
            // column strictly increasing downward (cell above, when in the skew shape)
            if (r > 0 && static_cast<int>(c) >= lambda.part(r - 1)) {
                if (static_cast<int>(c) < nu.part(r - 1) && fill[r - 1][c] >= v) continue;
            }
            fill[r][c] = v;
            ++counts[static_cast<std::size_t>(v)];
            self(self, idx + 1);
            --counts[static_cast<std::size_t>(v)];
            fill[r][c] = 0;
        }
    };
    rec(rec, 0);
    return total;
}

/// Candidate outer shapes for S_lambda * S_mu: partitions of |lambda|+|mu|
/// containing lambda, with row 1 bounded by lambda_1 + mu_1 and at most
/// len(lambda)+len(mu) rows.
inline std::vector<Partition> lr_candidates(const Partition& lambda, const Partition& mu) {
    long long total = lambda.weight() + mu.weight();
    std::size_t max_rows = lambda.length() + mu.length();
    std::vector<Partition> out;
    std::vector<int> nu;
    auto rec = [&](auto&& self, std::size_t i, long long remaining, int prev) -> void {
        if (remaining == 0) {
            // remaining rows must still contain lambda
            if (i >= lambda.length()) out.emplace_back(nu);
            return;
        }
        if (i == max_rows) return;
        int lo = std::max(lambda.part(i), 1);
        long long cap = (i == 0) ? static_cast<long long>(lambda.part(0)) + mu.part(0)
                                 : static_cast<long long>(prev);
        int hi = static_cast<int>(std::min<long long>(cap, remaining));
        for (int v = hi; v >= lo; --v) {
            nu.push_back(v);
            self(self, i + 1, remaining - v, v);
            nu.pop_back();
        }
    };
    if (total == 0) {
        out.emplace_back();
        return out;
    }
    rec(rec, 0, total, 0);
    return out;
}

}  // namespace detail

/// Littlewood-Richardson expansion of S_lambda * S_mu as a sum of S_nu.
inline SchurExpansion lr_expand(const Partition& lambda, const Partition& mu) {
    SchurExpansion out;
    for (const Partition& nu : detail::lr_candidates(lambda, mu)) {
        long long c = detail::lr_filling_count(nu, lambda, mu);
        if (c > 0) out.add(nu, c);
    }
    return out;
}

/// Single coefficient C_{lambda,mu,nu}; zero when weights or containment fail.
inline long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.weight() != lambda.weight() + mu.weight()) return 0;
    if (!contains(nu, lambda)) return 0;
    return detail::lr_filling_count(nu, lambda, mu);
}

/// Expansion * S_mu, by linearity of the LR rule.
inline SchurExpansion lr_mul(const SchurExpansion& a, const Partition& mu) {
    SchurExpansion out;
    for (const auto& [p, mult] : a.terms()) {
        SchurExpansion piece = lr_expand(p, mu);
        for (const auto& [nu, c] : piece.terms()) out.add(nu, mult * c);
    }
    return out;
}

inline SchurExpansion lr_add(SchurExpansion a, const SchurExpansion& b) {
    for (const auto& [p, m] : b.terms()) a.add(p, m);
    return a;
}

/// Outcome of checking one identity instance. Both sides' Schur expansions
/// (restricted to the ambient variable count) are kept for diagnostics.
struct IdentityReport {
    std::string family;
    long long m = 0;  // 0 for the m-independent adjoint family
    int nvars = 3;
    bool poly_equal = false;
    std::optional<bool> expansion_equal;
    std::optional<bool> dropped_term_vanishes;
    SchurExpansion lhs_expansion;
    SchurExpansion rhs_expansion;

    bool passed() const {
        return poly_equal && expansion_equal.value_or(true) && dropped_term_vanishes.value_or(true);
    }
};

/// Checks, in 3 variables,
///   S_(m-1)*S_(1) + S_(m-3)*S_(1,1,1) = S_(m) + S_(m-2)*S_(1,1)
/// both as exact polynomials and as restricted LR expansions. For m >= 4 the
/// discarded length-4 term S_(m-3,1,1,1) is confirmed to vanish.
inline IdentityReport verify_gl3_identity(long long m) {
    if (m < 3) throw std::invalid_argument("verify_gl3_identity: need m >= 3");
    IdentityReport rep;
    rep.family = "gl3";
    rep.m = m;
    rep.nvars = 3;

    const int n = 3;
    Partition row_m({static_cast<int>(m)});
    Partition row_m1({static_cast<int>(m - 1)});
    Partition row_m2({static_cast<int>(m - 2)});
    Partition row_m3 = (m == 3) ? Partition{} : Partition({static_cast<int>(m - 3)});

    SparsePoly lhs = schur_poly(row_m1, n) * schur_poly(Partition{1}, n) +
                     schur_poly(row_m3, n) * schur_poly(Partition{1, 1, 1}, n);
    SparsePoly rhs = schur_poly(row_m, n) + schur_poly(row_m2, n) * schur_poly(Partition{1, 1}, n);
    rep.poly_equal = (lhs == rhs);

    SchurExpansion L = lr_add(lr_expand(row_m1, Partition{1}), lr_expand(row_m3, Partition{1, 1, 1}));
    SchurExpansion R = lr_expand(row_m2, Partition{1, 1});
    R.add(row_m, 1);
    rep.lhs_expansion = L.restrict_length(n);
    rep.rhs_expansion = R.restrict_length(n);
    rep.expansion_equal = (rep.lhs_expansion == rep.rhs_expansion);

    if (m >= 4) {
        Partition dropped({static_cast<int>(m - 3), 1, 1, 1});
        rep.dropped_term_vanishes = schur_poly(dropped, n).is_zero();
    }
    return rep;
}

/// Checks, in 3 variables, the degree-6 identity behind the adjoint link:
///   S_(2)S_(2,2) + S_(2)S_(1)S_(1,1,1) + S_(2,2)S_(1,1) + S_(1,1)S_(1)S_(1,1,1)
///     = S_(2,1)^2 + 2 S_(2,1)S_(1,1,1) + S_(1,1,1)^2.
inline IdentityReport verify_gl3_adjoint_identity() {
    IdentityReport rep;
    rep.family = "gl3-adjoint";
    rep.nvars = 3;
    const int n = 3;

    auto S = [&](std::initializer_list<int> p) { return schur_poly(Partition(p), n); };
    SparsePoly lhs = S({2}) * S({2, 2}) + S({2}) * S({1}) * S({1, 1, 1}) + S({2, 2}) * S({1, 1}) +
                     S({1, 1}) * S({1}) * S({1, 1, 1});
    SparsePoly rhs = S({2, 1}) * S({2, 1});
    SparsePoly cross = S({2, 1}) * S({1, 1, 1});
    cross *= Int(2);
    rhs += cross;
    rhs += S({1, 1, 1}) * S({1, 1, 1});
    rep.poly_equal = (lhs == rhs);

    auto E = [&](std::initializer_list<int> p) {
        SchurExpansion e;
        e.add(Partition(p), 1);
        return e;
    };
    SchurExpansion L = lr_mul(E({2}), Partition{2, 2});
    L = lr_add(L, lr_mul(lr_mul(E({2}), Partition{1}), Partition{1, 1, 1}));
    L = lr_add(L, lr_mul(E({2, 2}), Partition{1, 1}));
    L = lr_add(L, lr_mul(lr_mul(E({1, 1}), Partition{1}), Partition{1, 1, 1}));
    SchurExpansion R = lr_mul(E({2, 1}), Partition{2, 1});
    SchurExpansion R2 = lr_mul(E({2, 1}), Partition{1, 1, 1});
    for (const auto& [p, mult] : R2.terms()) R.add(p, 2 * mult);
    R = lr_add(R, lr_mul(E({1, 1, 1}), Partition{1, 1, 1}));
    rep.lhs_expansion = L.restrict_length(n);
    rep.rhs_expansion = R.restrict_length(n);
    rep.expansion_equal = (rep.lhs_expansion == rep.rhs_expansion);
    return rep;
}

/// Checks, in 4 variables, for m >= 4,
///   S_(m) + S_(1,1)*S_(m-2) + S_(1,1,1,1)*S_(m-4) = S_(m-1)*S_(1) + S_(1,1,1)*S_(m-3)
/// and for m = 3 the reduced variant S_(3) + S_(1)*S_(1,1) = S_(2)*S_(1) + S_(1,1,1).
/// For m >= 5 the discarded length-5 term S_(m-4,1,1,1,1) is confirmed to vanish.
inline IdentityReport verify_gl4_identity(long long m) {
    if (m < 3) throw std::invalid_argument("verify_gl4_identity: need m >= 3");
    IdentityReport rep;
    rep.family = "gl4";
    rep.m = m;
    rep.nvars = 4;
    const int n = 4;

    SparsePoly lhs(n), rhs(n);
    SchurExpansion L, R;
    if (m == 3) {
        lhs = schur_poly(Partition{3}, n) + schur_poly(Partition{1}, n) * schur_poly(Partition{1, 1}, n);
        rhs = schur_poly(Partition{2}, n) * schur_poly(Partition{1}, n) + schur_poly(Partition{1, 1, 1}, n);
        L = lr_expand(Partition{1}, Partition{1, 1});
        L.add(Partition{3}, 1);
        R = lr_expand(Partition{2}, Partition{1});
        R.add(Partition{1, 1, 1}, 1);
    } else {
        Partition row_m({static_cast<int>(m)});
        Partition row_m1({static_cast<int>(m - 1)});
        Partition row_m2({static_cast<int>(m - 2)});
        Partition row_m3({static_cast<int>(m - 3)});
        Partition row_m4 = (m == 4) ? Partition{} : Partition({static_cast<int>(m - 4)});
        lhs = schur_poly(row_m, n) + schur_poly(Partition{1, 1}, n) * schur_poly(row_m2, n) +
              schur_poly(Partition{1, 1, 1, 1}, n) * schur_poly(row_m4, n);
        rhs = schur_poly(row_m1, n) * schur_poly(Partition{1}, n) +
              schur_poly(Partition{1, 1, 1}, n) * schur_poly(row_m3, n);
        L = lr_add(lr_expand(row_m4, Partition{1, 1, 1, 1}), lr_expand(row_m2, Partition{1, 1}));
        L.add(row_m, 1);
        R = lr_add(lr_expand(row_m1, Partition{1}), lr_expand(row_m3, Partition{1, 1, 1}));
        if (m >= 5) {
            Partition dropped({static_cast<int>(m - 4), 1, 1, 1, 1});
            rep.dropped_term_vanishes = schur_poly(dropped, n).is_zero();
        }
    }
    rep.poly_equal = (lhs == rhs);
    rep.lhs_expansion = L.restrict_length(n);
    rep.rhs_expansion = R.restrict_length(n);
    rep.expansion_equal = (rep.lhs_expansion == rep.rhs_expansion);
    return rep;
}

}  // namespace schurpow
