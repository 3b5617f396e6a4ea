#pragma once

// Burnside-Dixon character table computation: simultaneous eigenvectors of the
// class-multiplication matrices over a prime field F_p with p = 1 (mod
// exponent(G)), lifted to exact cyclotomic values by a discrete Fourier
// transform over each class's element order. The finished table is validated
// in exact arithmetic before it is returned.

#include <cstdint>
#include <string>
#include <vector>

#include "schurpow/character_table.hpp"
#include "schurpow/group.hpp"
#include "schurpow/numeric.hpp"

namespace schurpow {

namespace detail {

using ModVec = std::vector<std::uint64_t>;
using ModMat = std::vector<ModVec>;

/// Reduced row echelon form in place; returns pivot column per row.
inline std::vector<std::size_t> rref_mod(ModMat& rows, std::uint64_t p) {
    std::vector<std::size_t> pivots;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[rank]);
        std::uint64_t inv = invmod_u64(rows[rank][col], p);
        for (auto& v : rows[rank]) v = mulmod_u64(v, inv, p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            std::uint64_t f = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = (rows[r][c] + p - mulmod_u64(f, rows[rank][c], p)) % p;
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

/// Nullspace basis of a square matrix mod p (vectors of coordinates).
inline ModMat nullspace_mod(ModMat m, std::uint64_t p) {
    std::size_t n = m.size();
    auto pivots = rref_mod(m, p);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    ModMat basis;
    for (std::size_t freeCol = 0; freeCol < n; ++freeCol) {
        if (is_pivot[freeCol]) continue;
        ModVec v(n, 0);
        v[freeCol] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = (p - m[r][freeCol]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::uint64_t primitive_root(std::uint64_t p) {
    auto fac = factorize(static_cast<long long>(p - 1));
    for (std::uint64_t h = 2; h < p; ++h) {
        bool ok = true;
        for (auto [q, e] : fac)
            if (powmod_u64(h, (p - 1) / static_cast<std::uint64_t>(q), p) == 1) {
                ok = false;
                break;
            }
        if (ok) return h;
    }
    throw std::logic_error("primitive_root: none found");
}

}  // namespace detail

/// Smallest prime p = 1 (mod e) with p > 2*floor(sqrt(order)) and p not
/// dividing the group order.
inline long long dixon_prime(long long order, long long e) {
    long long floor_sqrt = 0;
    while ((floor_sqrt + 1) * (floor_sqrt + 1) <= order) ++floor_sqrt;
    for (long long p = e + 1;; p += e) {
        if (p <= 2 * floor_sqrt) continue;
        if (order % p == 0) continue;
        if (is_prime_ll(p)) return p;
    }
}

/// Full irreducible character table of an enumerated group. Rows are ordered
/// with the trivial character first, then by (degree, canonical value key).
/// Power maps are stored for every prime up to max_power_map_prime.
inline CharacterTable compute_character_table(const EnumeratedGroup& g, const ConjugacyClasses& cc,
                                              long long max_power_map_prime = 13) {
    const std::size_t r = cc.count();
    const long long n = static_cast<long long>(g.order());
    long long e = 1;
    for (long long o : cc.orders) e = lcm_ll(e, o);
    const std::uint64_t p = static_cast<std::uint64_t>(dixon_prime(n, e));

    // class-multiplication structure constants a[i][j][k]
    std::vector<std::vector<std::vector<long long>>> a(
        r, std::vector<std::vector<long long>>(r, std::vector<long long>(r, 0)));
    for (std::size_t k = 0; k < r; ++k) {
        std::size_t z = cc.rep[k];
        for (std::size_t x = 0; x < g.order(); ++x) {
            std::size_t i = cc.class_of[x];
            std::size_t j = cc.class_of[g.mul(g.inv(x), z)];
            ++a[i][j][k];
        }
    }

    // simultaneous eigenspace refinement over F_p
    std::vector<detail::ModMat> subspaces;
    {
        detail::ModMat full(r, detail::ModVec(r, 0));
        for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
        subspaces.push_back(std::move(full));
    }
    for (std::size_t i = 1; i < r; ++i) {
        detail::ModMat m(r, detail::ModVec(r, 0));
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) m[j][k] = static_cast<std::uint64_t>(a[i][j][k] % static_cast<long long>(p));
        std::vector<detail::ModMat> next;
        for (auto& basis : subspaces) {
            std::size_t dim = basis.size();
            if (dim == 1) {
                next.push_back(std::move(basis));
                continue;
            }
            // pivot columns of the RREF basis give coordinates directly
            detail::ModMat b = basis;
            auto pivots = detail::rref_mod(b, p);
            // restriction R: column l = coordinates of M * b_l
            detail::ModMat rmat(dim, detail::ModVec(dim, 0));
            for (std::size_t l = 0; l < dim; ++l) {
                detail::ModVec w(r, 0);
                for (std::size_t row = 0; row < r; ++row) {
                    std::uint64_t acc = 0;
                    for (std::size_t k = 0; k < r; ++k)
                        if (b[l][k]) acc = (acc + mulmod_u64(m[row][k], b[l][k], p)) % p;
                    w[row] = acc;
                }
                detail::ModVec coords(dim);
                for (std::size_t t = 0; t < dim; ++t) coords[t] = w[pivots[t]];
                // invariance check: w must equal sum coords[t] * b_t
                for (std::size_t col = 0; col < r; ++col) {
                    std::uint64_t acc = 0;
                    for (std::size_t t = 0; t < dim; ++t)
                        if (coords[t]) acc = (acc + mulmod_u64(coords[t], b[t][col], p)) % p;
                    if (acc != w[col]) throw std::logic_error("compute_character_table: subspace not invariant");
                }
                for (std::size_t t = 0; t < dim; ++t) rmat[t][l] = coords[t];
            }
            // split by eigenvalues of the restriction
            std::size_t accounted = 0;
            bool split_any = false;
            std::vector<detail::ModMat> pieces;
            for (std::uint64_t lam = 0; lam < p && accounted < dim; ++lam) {
                detail::ModMat shifted = rmat;
                for (std::size_t t = 0; t < dim; ++t) shifted[t][t] = (shifted[t][t] + p - lam) % p;
                detail::ModMat ker = detail::nullspace_mod(std::move(shifted), p);
                if (ker.empty()) continue;
                accounted += ker.size();
                if (ker.size() == dim) break;  // acts as a scalar, no split
                split_any = true;
                detail::ModMat ambient;
                for (const auto& coords : ker) {
                    detail::ModVec v(r, 0);
                    for (std::size_t t = 0; t < dim; ++t)
                        if (coords[t])
                            for (std::size_t col = 0; col < r; ++col)
                                v[col] = (v[col] + mulmod_u64(coords[t], b[t][col], p)) % p;
                    ambient.push_back(std::move(v));
                }
                detail::rref_mod(ambient, p);
                pieces.push_back(std::move(ambient));
            }
            if (!split_any) {
                next.push_back(std::move(b));
            } else {
                if (accounted != dim) throw std::logic_error("compute_character_table: eigen decomposition incomplete");
                for (auto& piece : pieces) next.push_back(std::move(piece));
            }
        }
        subspaces = std::move(next);
    }
    for (const auto& s : subspaces)
        if (s.size() != 1) throw std::logic_error("compute_character_table: refinement did not reach dimension 1");
    if (subspaces.size() != r) throw std::logic_error("compute_character_table: wrong number of eigenvectors");

    // inverse classes and modular class sizes
    std::vector<std::size_t> inv_class(r);
    for (std::size_t k = 0; k < r; ++k) inv_class[k] = cc.class_of[g.inv(cc.rep[k])];
    std::vector<std::uint64_t> size_inv(r);
    for (std::size_t k = 0; k < r; ++k)
        size_inv[k] = invmod_u64(static_cast<std::uint64_t>(cc.sizes[k] % static_cast<long long>(p)), p);

    long long floor_sqrt = 0;
    while ((floor_sqrt + 1) * (floor_sqrt + 1) <= n) ++floor_sqrt;

    const std::uint64_t theta = detail::primitive_root(p);
    const std::uint64_t theta_e = powmod_u64(theta, (p - 1) / static_cast<std::uint64_t>(e), p);

    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& s : subspaces) {
        detail::ModVec w = s[0];
        if (w[0] == 0) throw std::logic_error("compute_character_table: eigenvector vanishes at the identity");
        std::uint64_t scale = invmod_u64(w[0], p);
        for (auto& v : w) v = mulmod_u64(v, scale, p);

        std::uint64_t ssum = 0;
        for (std::size_t k = 0; k < r; ++k)
            ssum = (ssum + mulmod_u64(mulmod_u64(w[k], w[inv_class[k]], p), size_inv[k], p)) % p;
        std::uint64_t dsq = mulmod_u64(static_cast<std::uint64_t>(n % static_cast<long long>(p)), invmod_u64(ssum, p), p);
        long long d = 0;
        for (long long cand = 1; cand <= floor_sqrt; ++cand)
            if (mulmod_u64(static_cast<std::uint64_t>(cand), static_cast<std::uint64_t>(cand), p) == dsq) {
                d = cand;
                break;
            }
        if (d == 0) throw std::logic_error("compute_character_table: no degree matches the eigenvector");

        std::vector<std::uint64_t> chi_p(r);
        for (std::size_t k = 0; k < r; ++k)
            chi_p[k] = mulmod_u64(mulmod_u64(static_cast<std::uint64_t>(d), w[k], p), size_inv[k], p);

        std::vector<Cyclotomic> row(r);
        for (std::size_t k = 0; k < r; ++k) {
            long long o = cc.orders[k];
            std::vector<std::size_t> pcls(static_cast<std::size_t>(o));
            for (long long j = 0; j < o; ++j) pcls[static_cast<std::size_t>(j)] = cc.class_of[g.power(cc.rep[k], j)];
            std::uint64_t theta_o = powmod_u64(theta_e, static_cast<std::uint64_t>(e / o), p);
            std::uint64_t o_inv = invmod_u64(static_cast<std::uint64_t>(o % static_cast<long long>(p)), p);
            std::vector<std::pair<long long, Rational>> terms;
            long long total = 0;
            for (long long t = 0; t < o; ++t) {
                std::uint64_t acc = 0;
                for (long long j = 0; j < o; ++j) {
                    std::uint64_t tw = powmod_u64(theta_o, static_cast<std::uint64_t>(((o - (j * t) % o) % o)), p);
                    acc = (acc + mulmod_u64(chi_p[pcls[static_cast<std::size_t>(j)]], tw, p)) % p;
                }
                std::uint64_t mt = mulmod_u64(acc, o_inv, p);
                if (mt > static_cast<std::uint64_t>(d))
                    throw std::logic_error("compute_character_table: eigenvalue multiplicity lift out of range");
                if (mt > 0) terms.emplace_back(t, Rational(static_cast<long long>(mt)));
                total += static_cast<long long>(mt);
            }
            if (total != d) throw std::logic_error("compute_character_table: eigenvalue multiplicities do not sum to the degree");
            row[k] = Cyclotomic::from_exponents(o, terms).reduce();
        }
        rows.push_back(std::move(row));
    }

    // deterministic row order: trivial first, then (degree, rendered values)
    std::vector<std::pair<std::pair<long long, std::string>, std::size_t>> keyed;
    std::size_t trivial_index = r;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool trivial = true;
        for (const auto& v : rows[i])
            if (!(v == Cyclotomic::integer(1))) {
                trivial = false;
                break;
            }
        if (trivial) {
            trivial_index = i;
            continue;
        }
        long long deg = static_cast<long long>(rational_num(rows[i][0].reduce().to_rational()));
        std::string key;
        for (const auto& v : rows[i]) {
            key += v.to_string();
            key += ',';
        }
        keyed.emplace_back(std::make_pair(deg, std::move(key)), i);
    }
    if (trivial_index == r) throw std::logic_error("compute_character_table: trivial character missing");
    std::sort(keyed.begin(), keyed.end());

    CharacterTable table;
    table.name = g.name();
    table.provenance = "computed";
    table.order = n;
    for (std::size_t c = 0; c < r; ++c)
        table.classes.push_back({cc.labels[c], cc.orders[c], cc.sizes[c]});
    for (long long q = 2; q <= max_power_map_prime; ++q)
        if (is_prime_ll(q)) table.prime_power_maps[q] = class_power_map(g, cc, q);
    table.irreducibles.push_back(std::move(rows[trivial_index]));
    for (const auto& [key, idx] : keyed) table.irreducibles.push_back(std::move(rows[idx]));

    table.validate_or_throw();
    return table;
}

}  // namespace schurpow
