#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N). Elements are stored as
// rational coordinate vectors in the power basis 1, z, ..., z^(phi(N)-1)
// reduced modulo the N-th cyclotomic polynomial; conductors are kept != 2
// (mod 4), so Q(zeta_2m) with m odd is always represented over m. Mixed
// conductors embed into Q(zeta_lcm) first. Equality is decided on exact
// coordinates, never by floating comparison; reduce() rewrites an element
// over its minimal conductor, the canonical form used for text output.

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurpow/numeric.hpp"

namespace schurpow {

namespace detail {

inline std::vector<Int> poly_divide_int(std::vector<Int> num, const std::vector<Int>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<Int> quot(num.size() - den.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int q = num[k + den.size() - 1] / den.back();
        quot[k] = q;
        if (q != 0)
            for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= q * den[i];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("poly_divide_int: inexact division");
    return quot;
}

/// Phi_N by the recursive quotient Phi_N = (x^N - 1) / prod_{d|N, d<N} Phi_d.
inline std::vector<Int> cyclotomic_polynomial(long long n) {
    static std::map<long long, std::vector<Int>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<Int> result;
    if (n == 1) {
        result = {-1, 1};
    } else {
        std::vector<Int> p(static_cast<std::size_t>(n) + 1, 0);
        p[0] = -1;
        p[static_cast<std::size_t>(n)] = 1;
        for (long long d = 1; d < n; ++d)
            if (n % d == 0) p = poly_divide_int(std::move(p), cyclotomic_polynomial(d));
        result = std::move(p);
    }
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(n, result);
    return cache.at(n);
}

/// Reduction rows x^j mod Phi_N for all exponents products and embeddings use.
struct CycTables {
    std::size_t degree = 1;
    std::vector<Int> phi_poly;
    std::vector<std::vector<Int>> power;
};

inline const CycTables& cyc_tables(long long n) {
    static std::map<long long, std::unique_ptr<CycTables>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    auto t = std::make_unique<CycTables>();
    t->phi_poly = cyclotomic_polynomial(n);
    t->degree = t->phi_poly.size() - 1;
    std::size_t rows = std::max<std::size_t>(2 * t->degree, static_cast<std::size_t>(n)) + 1;
    t->power.resize(rows);
    std::vector<Int> cur(t->degree, 0);
    cur[0] = 1;
    for (std::size_t j = 0; j < rows; ++j) {
        t->power[j] = cur;
        Int top = cur.back();
        for (std::size_t i = t->degree; i-- > 1;) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::size_t i = 0; i < t->degree; ++i) cur[i] -= top * t->phi_poly[i];
    }
    std::lock_guard<std::mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(n, std::move(t));
    return *it->second;
}

inline long long normalize_conductor(long long n) {
    while (n % 4 == 2) n /= 2;
    return n;
}

}  // namespace detail

class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1, Rational(0)) {}

    static Cyclotomic rational(Rational r) {
        Cyclotomic z;
        z.c_[0] = std::move(r);
        return z;
    }

    static Cyclotomic integer(long long v) { return rational(Rational(v)); }

    /// zeta_N^a at its primitive, normalized conductor.
    static Cyclotomic root_of_unity(long long n, long long a) {
        if (n < 1) throw std::invalid_argument("root_of_unity: conductor must be positive");
        a %= n;
        if (a < 0) a += n;
        if (a == 0) return integer(1);
        long long g = std::gcd(a, n);
        n /= g;
        a /= g;
        Rational sign(1);
        if (n % 4 == 2) {  // zeta_{2m}^a = -zeta_m^(a(m+1)/2 mod m), a odd, m odd
            long long m = n / 2;
            a = (a % m) * ((m + 1) / 2) % m;
            n = m;
            sign = -1;
        }
        if (n == 1) return rational(sign);
        Cyclotomic z;
        z.n_ = n;
        const auto& tab = detail::cyc_tables(n);
        z.c_.assign(tab.degree, Rational(0));
        for (std::size_t i = 0; i < tab.degree; ++i)
            z.c_[i] = sign * Rational(tab.power[static_cast<std::size_t>(a)][i]);
        return z;
    }

    /// Sum of coeff * zeta_N^exponent terms; exponents arbitrary (reduced mod N).
    static Cyclotomic from_exponents(long long n, const std::vector<std::pair<long long, Rational>>& terms) {
        if (n < 1) throw std::invalid_argument("from_exponents: conductor must be positive");
        Cyclotomic z;
        for (const auto& [e, c] : terms) z = z + root_of_unity(n, e) * c;
        return z;
    }

    long long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    /// Rational value; throws std::domain_error for irrational elements.
    Rational to_rational() const {
        if (!is_rational()) throw std::domain_error("Cyclotomic::to_rational: element is irrational");
        return c_[0];
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = embed_pair(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = embed_pair(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }

    Cyclotomic operator-() const {
        Cyclotomic z(*this);
        for (auto& c : z.c_) c = -c;
        return z;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = embed_pair(a, b);
        const auto& tab = detail::cyc_tables(x.n_);
        std::size_t d = tab.degree;
        std::vector<Rational> conv(2 * d - 1, Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (x.c_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (y.c_[j] == 0) continue;
                conv[i + j] += x.c_[i] * y.c_[j];
            }
        }
        Cyclotomic z;
        z.n_ = x.n_;
        z.c_.assign(d, Rational(0));
        for (std::size_t k = 0; k < conv.size(); ++k) {
            if (conv[k] == 0) continue;
            if (k < d) {
                z.c_[k] += conv[k];
            } else {
                const auto& row = tab.power[k];
                for (std::size_t i = 0; i < d; ++i)
                    if (row[i] != 0) z.c_[i] += conv[k] * Rational(row[i]);
            }
        }
        return z;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& s) {
        Cyclotomic z(a);
        for (auto& c : z.c_) c *= s;
        return z;
    }
    friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) { return a * s; }

    friend Cyclotomic operator/(const Cyclotomic& a, const Rational& s) {
        if (s == 0) throw std::domain_error("Cyclotomic: division by zero scalar");
        Cyclotomic z(a);
        for (auto& c : z.c_) c /= s;
        return z;
    }

    Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
    Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
    Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

    bool operator==(const Cyclotomic& rhs) const {
        auto [x, y] = embed_pair(*this, rhs);
        return x.c_ == y.c_;
    }

    /// Galois automorphism zeta_N -> zeta_N^a; requires gcd(a, N) = 1.
    Cyclotomic galois(long long a) const {
        long long m = ((a % n_) + n_) % n_;
        if (n_ == 1) return *this;
        if (std::gcd(m, n_) != 1) throw std::invalid_argument("Cyclotomic::galois: exponent not coprime to conductor");
        const auto& tab = detail::cyc_tables(n_);
        Cyclotomic z;
        z.n_ = n_;
        z.c_.assign(tab.degree, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& row = tab.power[static_cast<std::size_t>((static_cast<long long>(i) * m) % n_)];
            for (std::size_t j = 0; j < tab.degree; ++j)
                if (row[j] != 0) z.c_[j] += c_[i] * Rational(row[j]);
        }
        return z;
    }

    /// Complex conjugation, zeta_N -> zeta_N^(-1).
    Cyclotomic conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    /// modulo Phi_N; throws std::domain_error on zero.
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("Cyclotomic::inverse: zero is not invertible");
        if (n_ == 1) return rational(Rational(1) / c_[0]);
        const auto& tab = detail::cyc_tables(n_);
        // r0 = Phi_N, r1 = this; maintain only the cofactor of r1.
        std::vector<Rational> r0(tab.phi_poly.size());
        for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(tab.phi_poly[i]);
        std::vector<Rational> r1(c_.begin(), c_.end());
        std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
        auto trim = [](std::vector<Rational>& p) {
            while (!p.empty() && p.back() == 0) p.pop_back();
        };
        trim(r0);
        trim(r1);
        while (true) {
            if (r1.empty()) throw std::logic_error("Cyclotomic::inverse: unexpected common factor");
            if (r1.size() == 1) break;
            // r0 = q*r1 + r; (s0, s1) <- (s1, s0 - q*s1)
            std::vector<Rational> q(r0.size() - r1.size() + 1, Rational(0));
            std::vector<Rational> rem = r0;
            for (std::size_t k = q.size(); k-- > 0;) {
                Rational f = rem[k + r1.size() - 1] / r1.back();
                q[k] = f;
                if (f != 0)
                    for (std::size_t i = 0; i < r1.size(); ++i) rem[k + i] -= f * r1[i];
            }
            trim(rem);
            std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
            for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
            }
            trim(s2);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r1 is a nonzero constant c: inverse = s1 / c, reduced mod Phi_N.
        Rational cst = r1[0];
        Cyclotomic z;
        z.n_ = n_;
        z.c_.assign(tab.degree, Rational(0));
        for (std::size_t i = 0; i < s1.size(); ++i) {
            if (s1[i] == 0) continue;
            Rational coef = s1[i] / cst;
            if (i < tab.degree) {
                z.c_[i] += coef;
            } else {
                const auto& row = tab.power[i];
                for (std::size_t j = 0; j < tab.degree; ++j)
                    if (row[j] != 0) z.c_[j] += coef * Rational(row[j]);
            }
        }
        return z;
    }

    /// The same element over its minimal conductor; idempotent.
    Cyclotomic reduce() const {
        Cyclotomic z(*this);
        for (;;) {
            if (z.n_ == 1) return z;
            if (z.is_rational()) {
                Cyclotomic r = rational(z.c_[0]);
                return r;
            }
            bool descended = false;
            for (auto [p, e] : factorize(z.n_)) {
                long long m = detail::normalize_conductor(z.n_ / p);
                if (m == z.n_) continue;
                if (auto over = z.try_express_over(m)) {
                    z = *over;
                    descended = true;
                    break;
                }
            }
            if (!descended) return z;
        }
    }

    /// Rewrites the element over conductor m (m | N after normalization) when
    /// it lies in Q(zeta_m); nullopt otherwise.
    std::optional<Cyclotomic> try_express_over(long long m) const {
        m = detail::normalize_conductor(m);
        if (n_ % m != 0) return std::nullopt;
        if (m == n_) return *this;
        // Galois check: fixed by every sigma_a with a = 1 (mod m), gcd(a, N) = 1.
        for (long long a = 1 + m; a < n_; a += m)
            if (std::gcd(a, n_) == 1 && !(galois(a) == *this)) return std::nullopt;
        // Solve for coordinates over the embedded basis of Q(zeta_m).
        const auto& tab = detail::cyc_tables(n_);
        std::size_t dn = tab.degree;
        std::size_t dm = detail::cyc_tables(m).degree;
        long long step = n_ / m;
        // Augmented matrix [B | z], columns are embeddings of zeta_m^j.
        std::vector<std::vector<Rational>> aug(dn, std::vector<Rational>(dm + 1, Rational(0)));
        for (std::size_t j = 0; j < dm; ++j) {
            const auto& row = tab.power[static_cast<std::size_t>(static_cast<long long>(j) * step)];
            for (std::size_t i = 0; i < dn; ++i) aug[i][j] = Rational(row[i]);
        }
        for (std::size_t i = 0; i < dn; ++i) aug[i][dm] = c_[i];
        // Gaussian elimination.
        std::vector<long long> pivot_col(dn, -1);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < dm && rank < dn; ++col) {
            std::size_t sel = rank;
            while (sel < dn && aug[sel][col] == 0) ++sel;
            if (sel == dn) continue;
            std::swap(aug[sel], aug[rank]);
            Rational inv = Rational(1) / aug[rank][col];
            for (auto& v : aug[rank]) v *= inv;
            for (std::size_t r = 0; r < dn; ++r) {
                if (r == rank || aug[r][col] == 0) continue;
                Rational f = aug[r][col];
                for (std::size_t cidx = col; cidx <= dm; ++cidx) aug[r][cidx] -= f * aug[rank][cidx];
            }
            pivot_col[rank] = static_cast<long long>(col);
            ++rank;
        }
        for (std::size_t r = rank; r < dn; ++r)
            if (aug[r][dm] != 0) return std::nullopt;  // inconsistent: not in the subfield
        Cyclotomic z;
        z.n_ = m;
        z.c_.assign(dm, Rational(0));
        for (std::size_t r = 0; r < rank; ++r)
            z.c_[static_cast<std::size_t>(pivot_col[r])] = aug[r][dm];
        return z;
    }

    /// Floating evaluation at zeta_N = exp(2*pi*i/N); diagnostics only.
    std::complex<double> approx() const {
        std::complex<double> total(0.0, 0.0);
        const double tau = 2.0 * std::numbers::pi;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            double angle = tau * static_cast<double>(i) / static_cast<double>(n_);
            total += static_cast<double>(c_[i]) * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        return total;
    }

    /// Canonical text form over the minimal conductor, e.g. "-E(5)-E(5)^4",
    /// "1+E(3)", "-3/2", "E(9)^4+E(9)^7".
    std::string to_string() const {
        Cyclotomic z = reduce();
        if (z.n_ == 1) return rational_string(z.c_[0]);
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < z.c_.size(); ++i) {
            if (z.c_[i] == 0) continue;
            Rational c = z.c_[i];
            if (first) {
                if (c < 0) {
                    os << '-';
                    c = -c;
                }
            } else {
                os << (c < 0 ? '-' : '+');
                if (c < 0) c = -c;
            }
            first = false;
            if (i == 0) {
                os << rational_string(c);
                continue;
            }
            if (c != 1) os << rational_string(c) << '*';
            os << "E(" << z.n_ << ')';
            if (i > 1) os << '^' << i;
        }
        return os.str();
    }

    /// Parses sums of terms "c", "c*E(N)^k", "E(N)^k", "-E(N)" with integer or
    /// a/b rational coefficients. Inverse of to_string on canonical forms.
    static Cyclotomic parse(const std::string& text) {
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        auto parse_uint = [&]() -> long long {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("Cyclotomic::parse: expected number in '" + text + "'");
            return std::stoll(text.substr(start, pos - start));
        };
        Cyclotomic total;
        skip_ws();
        if (pos == text.size()) throw std::invalid_argument("Cyclotomic::parse: empty input");
        while (pos < text.size()) {
            skip_ws();
            Rational sign(1);
            if (text[pos] == '+') {
                ++pos;
            } else if (text[pos] == '-') {
                sign = -1;
                ++pos;
            }
            skip_ws();
            Rational coef(1);
            bool have_coef = false;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                long long num = parse_uint();
                long long den = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    den = parse_uint();
                    if (den == 0) throw std::invalid_argument("Cyclotomic::parse: zero denominator");
                }
                coef = Rational(num, den);
                have_coef = true;
                skip_ws();
                if (pos < text.size() && text[pos] == '*') {
                    ++pos;
                    skip_ws();
                }
            }
            if (pos < text.size() && text[pos] == 'E') {
                ++pos;
                skip_ws();
                if (pos == text.size() || text[pos] != '(')
                    throw std::invalid_argument("Cyclotomic::parse: expected '(' after E");
                ++pos;
                long long n = parse_uint();
                skip_ws();
                if (pos == text.size() || text[pos] != ')')
                    throw std::invalid_argument("Cyclotomic::parse: expected ')'");
                ++pos;
                long long e = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    e = parse_uint();
                }
                total += root_of_unity(n, e) * (sign * coef);
            } else if (have_coef) {
                total += rational(sign * coef);
            } else {
                throw std::invalid_argument("Cyclotomic::parse: unexpected character in '" + text + "'");
            }
            skip_ws();
        }
        return total;
    }

private:
    static std::string rational_string(const Rational& r) {
        std::ostringstream os;
        os << rational_num(r).str();
        if (rational_den(r) != 1) os << '/' << rational_den(r).str();
        return os.str();
    }

    /// Embeds into Q(zeta_L) for N | L (both normalized).
    Cyclotomic embed_to(long long L) const {
        if (L == n_) return *this;
        if (L % n_ != 0) throw std::logic_error("Cyclotomic::embed_to: not a super-conductor");
        const auto& tab = detail::cyc_tables(L);
        long long step = L / n_;
        Cyclotomic z;
        z.n_ = L;
        z.c_.assign(tab.degree, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& row = tab.power[static_cast<std::size_t>(static_cast<long long>(i) * step)];
            for (std::size_t j = 0; j < tab.degree; ++j)
                if (row[j] != 0) z.c_[j] += c_[i] * Rational(row[j]);
        }
        return z;
    }

    static std::pair<Cyclotomic, Cyclotomic> embed_pair(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.n_ == b.n_) return {a, b};
        long long L = std::lcm(a.n_, b.n_);
        return {a.embed_to(L), b.embed_to(L)};
    }

    long long n_;
    std::vector<Rational> c_;
};

}  // namespace schurpow
