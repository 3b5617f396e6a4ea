#pragma once

// Small prime-power finite fields F_q with table-driven arithmetic. Elements
// are integers in [0, q) encoding polynomials over F_p by base-p digits, so
// for F_9 = F_3[t]/(t^2+1) the element a + b*t is encoded as a + 3b. The
// modulus is the lexicographically smallest monic irreducible polynomial of
// the right degree, found by search.

#include <stdexcept>
#include <string>
#include <vector>

#include "schurpow/numeric.hpp"

namespace schurpow {

class SmallField {
public:
    explicit SmallField(long long q) : q_(q) {
        auto fac = factorize(q);
        if (q < 2 || fac.size() != 1) throw std::invalid_argument("SmallField: order must be a prime power >= 2");
        p_ = fac[0].first;
        k_ = fac[0].second;
        if (q > 4096) throw std::invalid_argument("SmallField: order too large for table arithmetic");
        modulus_ = find_modulus();
        build_tables();
    }

    long long q() const { return q_; }
    long long characteristic() const { return p_; }
    int extension_degree() const { return k_; }

    /// Ascending coefficients of the defining polynomial (length k+1, monic).
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg_[static_cast<std::size_t>(b)])]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }

    int inv(int a) const {
        if (a == 0) throw std::domain_error("SmallField: zero has no inverse");
        return inv_[static_cast<std::size_t>(a)];
    }

    bool valid(long long e) const { return e >= 0 && e < q_; }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b); }

    std::vector<int> decode(long long e) const {
        std::vector<int> digits(static_cast<std::size_t>(k_));
        for (int i = 0; i < k_; ++i) {
            digits[static_cast<std::size_t>(i)] = static_cast<int>(e % p_);
            e /= p_;
        }
        return digits;
    }

    long long encode(const std::vector<int>& digits) const {
        long long e = 0;
        for (int i = k_ - 1; i >= 0; --i) e = e * p_ + digits[static_cast<std::size_t>(i)];
        return e;
    }

    /// Polynomial product of two elements reduced by the modulus.
    int raw_mul(int a, int b) const {
        std::vector<int> da = decode(a), db = decode(b);
        std::vector<int> prod(static_cast<std::size_t>(2 * k_ - 1), 0);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    static_cast<int>((prod[static_cast<std::size_t>(i + j)] +
                                      static_cast<long long>(da[static_cast<std::size_t>(i)]) * db[static_cast<std::size_t>(j)]) %
                                     p_);
        for (int d = 2 * k_ - 2; d >= k_; --d) {
            int top = prod[static_cast<std::size_t>(d)];
            if (top == 0) continue;
            prod[static_cast<std::size_t>(d)] = 0;
            for (int i = 0; i < k_; ++i) {
                long long v = prod[static_cast<std::size_t>(d - k_ + i)] -
                              static_cast<long long>(top) * modulus_[static_cast<std::size_t>(i)];
                prod[static_cast<std::size_t>(d - k_ + i)] = static_cast<int>(((v % p_) + p_) % p_);
            }
        }
        prod.resize(static_cast<std::size_t>(k_));
        return static_cast<int>(encode(prod));
    }

    bool is_irreducible(const std::vector<int>& poly) const {
        int deg = static_cast<int>(poly.size()) - 1;
        // trial division by all monic polynomials of degree 1..deg/2
        for (int d = 1; 2 * d <= deg; ++d) {
            long long count = 1;
            for (int i = 0; i < d; ++i) count *= p_;
            for (long long code = 0; code < count; ++code) {
                std::vector<int> div(static_cast<std::size_t>(d + 1), 0);
                long long c = code;
                for (int i = 0; i < d; ++i) {
                    div[static_cast<std::size_t>(i)] = static_cast<int>(c % p_);
                    c /= p_;
                }
                div[static_cast<std::size_t>(d)] = 1;
                // polynomial remainder of poly by div over F_p
                std::vector<int> rem(poly);
                for (int dd = deg; dd >= d; --dd) {
                    int top = rem[static_cast<std::size_t>(dd)];
                    if (top == 0) continue;
                    for (int i = 0; i <= d; ++i) {
                        long long v = rem[static_cast<std::size_t>(dd - d + i)] -
                                      static_cast<long long>(top) * div[static_cast<std::size_t>(i)];
                        rem[static_cast<std::size_t>(dd - d + i)] = static_cast<int>(((v % p_) + p_) % p_);
                    }
                }
                bool zero = true;
                for (int v : rem)
                    if (v != 0) zero = false;
                if (zero) return false;
            }
        }
        return true;
    }

    std::vector<int> find_modulus() const {
        if (k_ == 1) return {0, 1};  // x, unused
        long long count = 1;
        for (int i = 0; i < k_; ++i) count *= p_;
        for (long long code = 0; code < count; ++code) {
            std::vector<int> poly(static_cast<std::size_t>(k_ + 1), 0);
            long long c = code;
            for (int i = 0; i < k_; ++i) {
                poly[static_cast<std::size_t>(i)] = static_cast<int>(c % p_);
                c /= p_;
            }
            poly[static_cast<std::size_t>(k_)] = 1;
            if (is_irreducible(poly)) return poly;
        }
        throw std::logic_error("SmallField: no irreducible polynomial found");
    }

    void build_tables() {
        std::size_t n = static_cast<std::size_t>(q_);
        add_.resize(n * n);
        mul_.resize(n * n);
        neg_.resize(n);
        inv_.assign(n, 0);
        for (long long a = 0; a < q_; ++a) {
            std::vector<int> da = decode(a);
            std::vector<int> dn(static_cast<std::size_t>(k_));
            for (int i = 0; i < k_; ++i)
                dn[static_cast<std::size_t>(i)] = static_cast<int>((p_ - da[static_cast<std::size_t>(i)]) % p_);
            neg_[static_cast<std::size_t>(a)] = static_cast<int>(encode(dn));
            for (long long b = 0; b < q_; ++b) {
                std::vector<int> db = decode(b);
                std::vector<int> ds(static_cast<std::size_t>(k_));
                for (int i = 0; i < k_; ++i)
                    ds[static_cast<std::size_t>(i)] =
                        static_cast<int>((da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_);
                add_[idx(static_cast<int>(a), static_cast<int>(b))] = static_cast<int>(encode(ds));
                mul_[idx(static_cast<int>(a), static_cast<int>(b))] = raw_mul(static_cast<int>(a), static_cast<int>(b));
            }
        }
        for (long long a = 1; a < q_; ++a)
            for (long long b = 1; b < q_; ++b)
                if (mul_[idx(static_cast<int>(a), static_cast<int>(b))] == 1) inv_[static_cast<std::size_t>(a)] = static_cast<int>(b);
    }

    long long q_, p_;
    int k_ = 1;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_;
};

/// Square matrix over a SmallField; entries row-major in [0, q).
struct FqMatrix {
    int dim = 0;
    std::vector<int> entries;

    bool operator==(const FqMatrix& rhs) const = default;
};

inline FqMatrix fq_identity(int dim) {
    FqMatrix m;
    m.dim = dim;
    m.entries.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0);
    for (int i = 0; i < dim; ++i) m.entries[static_cast<std::size_t>(i * dim + i)] = 1;
    return m;
}

inline FqMatrix fq_mul(const SmallField& f, const FqMatrix& a, const FqMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("fq_mul: dimension mismatch");
    int n = a.dim;
    FqMatrix c;
    c.dim = n;
    c.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int aik = a.entries[static_cast<std::size_t>(i * n + k)];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) {
                int& out = c.entries[static_cast<std::size_t>(i * n + j)];
                out = f.add(out, f.mul(aik, b.entries[static_cast<std::size_t>(k * n + j)]));
            }
        }
    return c;
}

/// Matrix inverse by Gauss-Jordan elimination; throws on singular input.
inline FqMatrix fq_inverse(const SmallField& f, const FqMatrix& a) {
    int n = a.dim;
    std::vector<int> left(a.entries);
    FqMatrix result = fq_identity(n);
    std::vector<int>& right = result.entries;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (left[static_cast<std::size_t>(r * n + col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("fq_inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(left[static_cast<std::size_t>(pivot * n + j)], left[static_cast<std::size_t>(col * n + j)]);
                std::swap(right[static_cast<std::size_t>(pivot * n + j)], right[static_cast<std::size_t>(col * n + j)]);
            }
        int inv = f.inv(left[static_cast<std::size_t>(col * n + col)]);
        for (int j = 0; j < n; ++j) {
            left[static_cast<std::size_t>(col * n + j)] = f.mul(inv, left[static_cast<std::size_t>(col * n + j)]);
            right[static_cast<std::size_t>(col * n + j)] = f.mul(inv, right[static_cast<std::size_t>(col * n + j)]);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            int factor = left[static_cast<std::size_t>(r * n + col)];
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j) {
                left[static_cast<std::size_t>(r * n + j)] =
                    f.sub(left[static_cast<std::size_t>(r * n + j)], f.mul(factor, left[static_cast<std::size_t>(col * n + j)]));
                right[static_cast<std::size_t>(r * n + j)] =
                    f.sub(right[static_cast<std::size_t>(r * n + j)], f.mul(factor, right[static_cast<std::size_t>(col * n + j)]));
            }
        }
    }
    return result;
}

}  // namespace schurpow
