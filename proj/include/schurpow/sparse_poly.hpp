#pragma once

// Sparse multivariate polynomials over arbitrary-precision integers. Terms are
// kept in descending graded-lexicographic order, which makes the leading term
// of a symmetric polynomial a weakly decreasing exponent vector and gives the
// exact-division algorithm a deterministic notion of remainder.

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurpow/numeric.hpp"

namespace schurpow {

/// Exponent vector; length is the ambient variable count.
using Monomial = std::vector<std::uint32_t>;

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long long da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        return a > b;  // lexicographic tiebreak
    }
};

/// Polynomial with exact integer coefficients; zero coefficients are never
/// stored, so equality is equality of term maps.
class SparsePoly {
public:
    using TermMap = std::map<Monomial, Int, GrlexGreater>;

    explicit SparsePoly(int nvars = 0) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("SparsePoly: negative variable count");
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    static SparsePoly zero(int nvars) { return SparsePoly(nvars); }

    static SparsePoly constant(int nvars, Int c) {
        SparsePoly p(nvars);
        if (c != 0) p.terms_.emplace(Monomial(static_cast<std::size_t>(nvars), 0), std::move(c));
        return p;
    }

    static SparsePoly variable(int nvars, int index) {
        if (index < 0 || index >= nvars) throw std::invalid_argument("SparsePoly::variable: index out of range");
        Monomial m(static_cast<std::size_t>(nvars), 0);
        m[static_cast<std::size_t>(index)] = 1;
        SparsePoly p(nvars);
        p.terms_.emplace(std::move(m), 1);
        return p;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (m.size() != static_cast<std::size_t>(nvars_))
            throw std::invalid_argument("SparsePoly::add_term: monomial arity mismatch");
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& rhs) {
        check_arity(rhs);
        for (const auto& [m, c] : rhs.terms_) add_term(m, c);
        return *this;
    }

    SparsePoly& operator-=(const SparsePoly& rhs) {
        check_arity(rhs);
        for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
        return *this;
    }

    friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
    friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }

    SparsePoly operator-() const {
        SparsePoly out(nvars_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
        lhs.check_arity(rhs);
        SparsePoly out(lhs.nvars_);
        Monomial prod(static_cast<std::size_t>(lhs.nvars_));
        for (const auto& [ma, ca] : lhs.terms_) {
            for (const auto& [mb, cb] : rhs.terms_) {
                for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
                out.add_term(prod, ca * cb);
            }
        }
        return out;
    }

    SparsePoly& operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }

    SparsePoly& operator*=(const Int& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [m, coeff] : terms_) coeff *= c;
        }
        return *this;
    }

    bool operator==(const SparsePoly& rhs) const { return nvars_ == rhs.nvars_ && terms_ == rhs.terms_; }

    /// Leading term under descending grlex. Polynomial must be nonzero.
    const std::pair<const Monomial, Int>& leading_term() const {
        if (terms_.empty()) throw std::domain_error("SparsePoly: zero polynomial has no leading term");
        return *terms_.begin();
    }

    /// Exact quotient by d; throws std::domain_error when d does not divide
    /// *this (nonzero remainder under the grlex order).
    SparsePoly divide_exact(const SparsePoly& d) const {
        check_arity(d);
        if (d.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
        SparsePoly quotient(nvars_);
        SparsePoly rem(*this);
        const auto& [dm, dc] = d.leading_term();
        Monomial qm(static_cast<std::size_t>(nvars_));
        while (!rem.is_zero()) {
            const auto& [rm, rc] = rem.leading_term();
            bool divisible = true;
            for (std::size_t i = 0; i < qm.size(); ++i) {
                if (rm[i] < dm[i]) {
                    divisible = false;
                    break;
                }
                qm[i] = rm[i] - dm[i];
            }
            if (!divisible || rc % dc != 0)
                throw std::domain_error("divide_exact: division is not exact");
            Int qc = rc / dc;
            quotient.add_term(qm, qc);
            // rem -= (qc * x^qm) * d
            Monomial prod(static_cast<std::size_t>(nvars_));
            for (const auto& [m, c] : d.terms_) {
                for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = qm[i] + m[i];
                rem.add_term(prod, -qc * c);
            }
        }
        return quotient;
    }

    /// Invariance under all variable permutations, checked via the n-1
    /// adjacent transpositions that generate the symmetric group.
    bool is_symmetric() const {
        for (int i = 0; i + 1 < nvars_; ++i) {
            for (const auto& [m, c] : terms_) {
                Monomial swapped(m);
                std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i) + 1]);
                auto it = terms_.find(swapped);
                if (it == terms_.end() || it->second != c) return false;
            }
        }
        return true;
    }

    /// Exact evaluation at integer points.
    Int evaluate(const std::vector<Int>& point) const {
        if (point.size() != static_cast<std::size_t>(nvars_))
            throw std::invalid_argument("SparsePoly::evaluate: point arity mismatch");
        Int total = 0;
        for (const auto& [m, c] : terms_) {
            Int v = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::uint32_t e = 0; e < m[i]; ++e) v *= point[i];
            total += v;
        }
        return total;
    }

    /// Human-readable rendering in descending grlex order, e.g.
    /// "x^2*y + 2*x*y*z". Variables are x,y,z,w for n <= 4, else x1..xn.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Int a = c;
            if (first) {
                if (a < 0) {
                    os << '-';
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool constant_term = true;
            for (auto e : m)
                if (e) constant_term = false;
            if (a != 1 || constant_term) os << a.str();
            bool need_star = (a != 1);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (need_star) os << '*';
                os << var_name(static_cast<int>(i));
                if (m[i] > 1) os << '^' << m[i];
                need_star = true;
            }
        }
        return os.str();
    }

private:
    void check_arity(const SparsePoly& other) const {
        if (nvars_ != other.nvars_)
            throw std::invalid_argument("SparsePoly: variable-count mismatch");
    }

    std::string var_name(int i) const {
        static const char* named[] = {"x", "y", "z", "w"};
        if (nvars_ <= 4) return named[i];
        return "x" + std::to_string(i + 1);
    }

    int nvars_;
    TermMap terms_;
};

}  // namespace schurpow
