#pragma once

// Finite groups given by generators: breadth-first closure with a configurable
// order cap, conjugacy classes with a deterministic ordering, and power maps.
// Element kinds: permutations, matrices over a small finite field, matrices
// over a cyclotomic field. After enumeration the group is handled through
// element indices only.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "schurpow/cyclotomic.hpp"
#include "schurpow/finite_field.hpp"
#include "schurpow/permutation.hpp"

namespace schurpow {

struct GroupCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultGroupCap = 10000;

struct PermutationOps {
    using Element = Permutation;
    int degree = 0;
    Element identity() const { return Permutation::identity(degree); }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const { return a.inverse(); }
    std::string key(const Element& a) const { return a.key(); }
};

struct FqMatrixOps {
    using Element = FqMatrix;
    std::shared_ptr<const SmallField> field;
    int dim = 0;
    Element identity() const { return fq_identity(dim); }
    Element mul(const Element& a, const Element& b) const { return fq_mul(*field, a, b); }
    Element inv(const Element& a) const { return fq_inverse(*field, a); }
    std::string key(const Element& a) const {
        std::string k;
        k.reserve(a.entries.size() * sizeof(int));
        k.append(reinterpret_cast<const char*>(a.entries.data()), a.entries.size() * sizeof(int));
        return k;
    }
};

/// Square matrix with exact cyclotomic entries.
struct CycMatrix {
    int dim = 0;
    std::vector<Cyclotomic> entries;
};

inline CycMatrix cyc_identity(int dim) {
    CycMatrix m;
    m.dim = dim;
    m.entries.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Cyclotomic());
    for (int i = 0; i < dim; ++i) m.entries[static_cast<std::size_t>(i * dim + i)] = Cyclotomic::integer(1);
    return m;
}

inline CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("cyc_mul: dimension mismatch");
    int n = a.dim;
    CycMatrix c;
    c.dim = n;
    c.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Cyclotomic());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Cyclotomic& aik = a.entries[static_cast<std::size_t>(i * n + k)];
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                c.entries[static_cast<std::size_t>(i * n + j)] += aik * b.entries[static_cast<std::size_t>(k * n + j)];
        }
    return c;
}

inline CycMatrix cyc_inverse(const CycMatrix& a) {
    int n = a.dim;
    std::vector<Cyclotomic> left(a.entries);
    CycMatrix result = cyc_identity(n);
    std::vector<Cyclotomic>& right = result.entries;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!left[static_cast<std::size_t>(r * n + col)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("cyc_inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(left[static_cast<std::size_t>(pivot * n + j)], left[static_cast<std::size_t>(col * n + j)]);
                std::swap(right[static_cast<std::size_t>(pivot * n + j)], right[static_cast<std::size_t>(col * n + j)]);
            }
        Cyclotomic inv = left[static_cast<std::size_t>(col * n + col)].inverse();
        for (int j = 0; j < n; ++j) {
            left[static_cast<std::size_t>(col * n + j)] *= inv;
            right[static_cast<std::size_t>(col * n + j)] *= inv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Cyclotomic factor = left[static_cast<std::size_t>(r * n + col)];
            if (factor.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                left[static_cast<std::size_t>(r * n + j)] -= factor * left[static_cast<std::size_t>(col * n + j)];
                right[static_cast<std::size_t>(r * n + j)] -= factor * right[static_cast<std::size_t>(col * n + j)];
            }
        }
    }
    return result;
}

struct CycMatrixOps {
    using Element = CycMatrix;
    int dim = 0;
    Element identity() const { return cyc_identity(dim); }
    Element mul(const Element& a, const Element& b) const { return cyc_mul(a, b); }
    Element inv(const Element& a) const { return cyc_inverse(a); }
    std::string key(const Element& a) const {
        std::string k;
        for (const auto& e : a.entries) {
            k += e.to_string();
            k += ';';
        }
        return k;
    }
};

/// A fully enumerated finite group addressed by element indices. Index 0 is
/// the identity; the enumeration order (breadth-first over the generator list)
/// is deterministic, so downstream orderings are reproducible.
class EnumeratedGroup {
public:
    template <class Ops>
    static EnumeratedGroup enumerate(std::string name, const Ops& ops,
                                     const std::vector<typename Ops::Element>& generators,
                                     std::size_t cap = kDefaultGroupCap) {
        auto impl = std::make_shared<Impl<Ops>>();
        impl->ops = ops;
        impl->elements.push_back(ops.identity());
        impl->index.emplace(ops.key(impl->elements[0]), 0);
        for (std::size_t head = 0; head < impl->elements.size(); ++head) {
            for (const auto& g : generators) {
                auto prod = ops.mul(impl->elements[head], g);
                std::string k = ops.key(prod);
                if (impl->index.count(k)) continue;
                if (impl->elements.size() >= cap)
                    throw GroupCapError("group order cap (" + std::to_string(cap) + ") exceeded while enumerating " + name);
                impl->index.emplace(std::move(k), impl->elements.size());
                impl->elements.push_back(std::move(prod));
            }
        }

        EnumeratedGroup grp;
        grp.name_ = std::move(name);
        grp.n_ = impl->elements.size();
        grp.mul_ = [impl](std::size_t a, std::size_t b) {
            auto prod = impl->ops.mul(impl->elements[a], impl->elements[b]);
            return impl->index.at(impl->ops.key(prod));
        };
        grp.inv_.resize(grp.n_);
        for (std::size_t i = 0; i < grp.n_; ++i)
            grp.inv_[i] = impl->index.at(impl->ops.key(impl->ops.inv(impl->elements[i])));
        grp.element_order_.assign(grp.n_, 1);
        for (std::size_t i = 1; i < grp.n_; ++i) {
            long long o = 1;
            std::size_t x = i;
            while (x != 0) {
                x = grp.mul_(x, i);
                ++o;
            }
            grp.element_order_[i] = o;
        }
        return grp;
    }

    const std::string& name() const { return name_; }
    std::size_t order() const { return n_; }
    std::size_t identity_index() const { return 0; }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_(a, b); }
    std::size_t inv(std::size_t a) const { return inv_[a]; }
    long long element_order(std::size_t a) const { return element_order_[a]; }

    /// Index of x^m for m >= 0.
    std::size_t power(std::size_t x, long long m) const {
        long long o = element_order_[x];
        m %= o;
        if (m < 0) m += o;
        std::size_t acc = 0;
        for (long long i = 0; i < m; ++i) acc = mul_(acc, x);
        return acc;
    }

    /// Least common multiple of all element orders.
    long long exponent() const {
        long long e = 1;
        for (std::size_t i = 0; i < n_; ++i) e = lcm_ll(e, element_order_[i]);
        return e;
    }

private:
    template <class Ops>
    struct Impl {
        Ops ops;
        std::vector<typename Ops::Element> elements;
        std::unordered_map<std::string, std::size_t> index;
    };

    std::string name_;
    std::size_t n_ = 0;
    std::function<std::size_t(std::size_t, std::size_t)> mul_;
    std::vector<std::size_t> inv_;
    std::vector<long long> element_order_;
};

/// Conjugacy data; classes are ordered by (element order, class size,
/// first-seen element index) with the identity class first, and labelled
/// "1a", "2a", "2b", ... within each element order.
struct ConjugacyClasses {
    std::vector<std::size_t> class_of;   // element index -> class index
    std::vector<std::size_t> rep;        // class index -> element index
    std::vector<long long> sizes;
    std::vector<long long> orders;       // element orders per class
    std::vector<std::string> labels;

    std::size_t count() const { return rep.size(); }
};

inline ConjugacyClasses conjugacy_classes(const EnumeratedGroup& g) {
    std::size_t n = g.order();
    std::vector<std::size_t> class_of(n, static_cast<std::size_t>(-1));
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < n; ++i) {
        if (class_of[i] != static_cast<std::size_t>(-1)) continue;
        std::vector<std::size_t> orbit;
        std::size_t cls = members.size();
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t y = g.mul(g.mul(t, i), g.inv(t));
            if (class_of[y] == static_cast<std::size_t>(-1)) {
                class_of[y] = cls;
                orbit.push_back(y);
            }
        }
        members.push_back(std::move(orbit));
    }

    std::vector<std::size_t> perm(members.size());
    for (std::size_t c = 0; c < perm.size(); ++c) perm[c] = c;
    auto sort_key = [&](std::size_t c) {
        std::size_t first = *std::min_element(members[c].begin(), members[c].end());
        return std::tuple<long long, long long, std::size_t>(g.element_order(first),
                                                             static_cast<long long>(members[c].size()), first);
    };
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return sort_key(a) < sort_key(b); });

    ConjugacyClasses cc;
    cc.class_of.assign(n, 0);
    std::map<long long, int> letter;
    for (std::size_t newIdx = 0; newIdx < perm.size(); ++newIdx) {
        const auto& orbit = members[perm[newIdx]];
        std::size_t first = *std::min_element(orbit.begin(), orbit.end());
        cc.rep.push_back(first);
        cc.sizes.push_back(static_cast<long long>(orbit.size()));
        cc.orders.push_back(g.element_order(first));
        for (std::size_t e : orbit) cc.class_of[e] = newIdx;
        int idx = letter[cc.orders.back()]++;
        std::string label = std::to_string(cc.orders.back());
        label += static_cast<char>('a' + idx);
        cc.labels.push_back(label);
    }
    return cc;
}

/// Class-level power map c -> class of g^m for g in c.
inline std::vector<std::size_t> class_power_map(const EnumeratedGroup& g, const ConjugacyClasses& cc, long long m) {
    std::vector<std::size_t> pm(cc.count());
    for (std::size_t c = 0; c < cc.count(); ++c) pm[c] = cc.class_of[g.power(cc.rep[c], m)];
    return pm;
}

}  // namespace schurpow
