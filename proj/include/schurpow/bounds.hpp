#pragma once

// Closed-form upper-bound calculators for the number of constituents in
// symmetric-power lifts, in the degree-3 and degree-4 cases: the generic and
// congruence-enhanced floor/ceiling formulas, the small-k constants that
// replace them, and a scanner that checks every piecewise threshold claim.
// All arithmetic is exact integer arithmetic; ceilings and floors are integer
// divisions, never floating point.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurpow/numeric.hpp"

namespace schurpow {

enum class BoundCase { GL3, GL4 };

inline std::string bound_case_name(BoundCase c) { return c == BoundCase::GL3 ? "gl3" : "gl4"; }

inline BoundCase parse_bound_case(const std::string& s) {
    if (s == "gl3" || s == "GL3") return BoundCase::GL3;
    if (s == "gl4" || s == "GL4") return BoundCase::GL4;
    throw std::invalid_argument("unknown bound case '" + s + "' (expected gl3 or gl4)");
}

/// Degree of the k-th symmetric power of a 3- or 4-dimensional space.
inline long long sym_degree(int n, long long k) {
    if (k < 0) throw std::invalid_argument("sym_degree: k must be >= 0");
    if (n == 3) return (k + 1) * (k + 2) / 2;
    if (n == 4) return (k + 1) * (k + 2) * (k + 3) / 6;
    throw std::invalid_argument("sym_degree: n must be 3 or 4");
}

/// Small-k constants that replace the formulas: GL3 k=2 -> 4, k=3 -> 3;
/// GL4 k=3 -> 6, k=4 -> 7.
inline std::optional<long long> proposition_constant(BoundCase c, long long k) {
    if (c == BoundCase::GL3) {
        if (k == 2) return 4;
        if (k == 3) return 3;
    } else {
        if (k == 3) return 6;
        if (k == 4) return 7;
    }
    return std::nullopt;
}

/// Per-k record of degree, denominators, and bounds. Formula entries are
/// present for k >= 4; the enhanced pair only when the congruence applies.
struct BoundsRow {
    BoundCase bound_case = BoundCase::GL3;
    long long k = 0;
    long long degree = 0;
    std::optional<long long> generic_denominator;
    std::optional<long long> enhanced_denominator;
    std::optional<long long> generic_bound;
    std::optional<long long> enhanced_bound;
    std::optional<long long> proposition_bound;
    long long effective_bound = 0;
    std::string source;  // "formula" or "proposition-constant"
};

namespace detail {

inline BoundsRow bounds_row(BoundCase c, long long k) {
    long long min_k = (c == BoundCase::GL3) ? 2 : 3;
    if (k < min_k)
        throw std::invalid_argument("bounds: k must be >= " + std::to_string(min_k) + " for " + bound_case_name(c));
    BoundsRow row;
    row.bound_case = c;
    row.k = k;
    row.degree = sym_degree(c == BoundCase::GL3 ? 3 : 4, k);
    if (k >= 4) {
        if (c == BoundCase::GL3) {
            row.generic_denominator = ceil_div(k * (k + 1), 6);
            if (k % 3 == 1) row.enhanced_denominator = ceil_div(3 * k * (k + 1), 16);
        } else {
            row.generic_denominator = ceil_div((k - 2) * (k - 1) * k, 24);
            long long res = k % 8;
            if (res == 3 || res == 5 || res == 7) row.enhanced_denominator = ceil_div(2 * (k - 2) * (k - 1) * k, 45);
        }
        row.generic_bound = floor_div(row.degree, *row.generic_denominator);
        if (row.enhanced_denominator) row.enhanced_bound = floor_div(row.degree, *row.enhanced_denominator);
    }
    row.proposition_bound = proposition_constant(c, k);

    std::optional<long long> best_formula;
    if (row.generic_bound) best_formula = row.generic_bound;
    if (row.enhanced_bound && (!best_formula || *row.enhanced_bound < *best_formula)) best_formula = row.enhanced_bound;
    if (row.proposition_bound && (!best_formula || *row.proposition_bound <= *best_formula)) {
        row.effective_bound = *row.proposition_bound;
        row.source = "proposition-constant";
    } else if (best_formula) {
        row.effective_bound = *best_formula;
        row.source = "formula";
    } else {
        throw std::logic_error("bounds: no bound available");
    }
    return row;
}

}  // namespace detail

/// GL3 row: generic floor((k+1)(k+2)/2 / ceil(k(k+1)/6)); when k = 1 (mod 3)
/// also floor(... / ceil(3k(k+1)/16)). k = 2, 3 carry proposition constants.
inline BoundsRow gl3_bounds(long long k) { return detail::bounds_row(BoundCase::GL3, k); }

/// GL4 row: generic floor((k+1)(k+2)(k+3)/6 / ceil((k-2)(k-1)k/24)); when
/// k = 3, 5, 7 (mod 8) also floor(... / ceil(2(k-2)(k-1)k/45)). k = 3, 4 carry
/// proposition constants.
inline BoundsRow gl4_bounds(long long k) { return detail::bounds_row(BoundCase::GL4, k); }

inline BoundsRow bounds_row(BoundCase c, long long k) { return detail::bounds_row(c, k); }

/// One piecewise claim: effective_bound <= bound for every k in the scan range
/// satisfying the predicate.
struct ClaimResult {
    std::string description;
    long long bound = 0;
    bool holds = true;
    std::vector<long long> violations;
};

struct ThresholdReport {
    BoundCase bound_case = BoundCase::GL3;
    long long k_min = 0;
    long long k_max = 0;
    std::vector<BoundsRow> rows;  // rows[i] is k = k_min + i
    std::vector<ClaimResult> claims;
    std::map<long long, long long> first_k_with_effective;  // bound value -> minimal k

    bool all_hold() const {
        for (const auto& c : claims)
            if (!c.holds) return false;
        return true;
    }

    const BoundsRow& row(long long k) const { return rows.at(static_cast<std::size_t>(k - k_min)); }
};

/// Evaluates every k in [case minimum, k_max] and asserts the piecewise
/// threshold claims. Violations are recorded, not swallowed.
inline ThresholdReport threshold_scan(BoundCase c, long long k_max) {
    long long largest_claim = (c == BoundCase::GL3) ? 19 : 139;
    if (k_max < largest_claim)
        throw std::invalid_argument("threshold_scan: k_max must cover the largest claimed threshold " +
                                    std::to_string(largest_claim));
    if (k_max > 1000000) throw std::invalid_argument("threshold_scan: k_max too large");

    ThresholdReport rep;
    rep.bound_case = c;
    rep.k_min = (c == BoundCase::GL3) ? 2 : 3;
    rep.k_max = k_max;
    for (long long k = rep.k_min; k <= k_max; ++k) rep.rows.push_back(detail::bounds_row(c, k));

    struct Claim {
        std::string description;
        long long bound;
        bool (*applies)(long long);
    };
    std::vector<Claim> claims;
    if (c == BoundCase::GL3) {
        claims = {
            {"effective <= 4 for k >= 2", 4, [](long long k) { return k >= 2; }},
            {"effective <= 3 for k >= 7 or k in {3,4}", 3, [](long long k) { return k >= 7 || k == 3 || k == 4; }},
            {"effective <= 2 for k >= 19 with k = 1 (mod 3)", 2, [](long long k) { return k >= 19 && k % 3 == 1; }},
        };
    } else {
        claims = {
            {"effective <= 6 for k >= 15", 6, [](long long k) { return k >= 15; }},
            {"effective <= 5 for k >= 21", 5, [](long long k) { return k >= 21; }},
            {"effective <= 4 for k >= 39", 4, [](long long k) { return k >= 39; }},
            {"effective <= 3 for k >= 139 with k = 3,5,7 (mod 8)", 3,
             [](long long k) { return k >= 139 && (k % 8 == 3 || k % 8 == 5 || k % 8 == 7); }},
        };
    }
    for (const auto& claim : claims) {
        ClaimResult res;
        res.description = claim.description;
        res.bound = claim.bound;
        for (const auto& row : rep.rows)
            if (claim.applies(row.k) && row.effective_bound > claim.bound) {
                res.holds = false;
                res.violations.push_back(row.k);
            }
        rep.claims.push_back(std::move(res));
    }
    for (const auto& row : rep.rows)
        if (!rep.first_k_with_effective.count(row.effective_bound))
            rep.first_k_with_effective[row.effective_bound] = row.k;
    return rep;
}

}  // namespace schurpow
