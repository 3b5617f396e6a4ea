#pragma once

// Integer partitions and the Young-diagram operations the Schur engine needs:
// conjugation, containment, and horizontal-strip (Pieri) extensions.

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurpow {

/// Weakly decreasing sequence of positive integers. The empty partition is a
/// first-class value; trailing zeros are never stored, so equality and
/// ordering are plain vector comparisons.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    long long weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0LL); }

    /// Part i (0-based), 0 beyond the last row.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Column counts of the Young diagram; an involution.
    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> cols(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
        return Partition(std::move(cols));
    }

    /// Canonical text form: comma-separated parts, "0" for the empty partition.
    std::string to_string() const {
        if (parts_.empty()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    /// Parses the canonical comma-separated form; "0" and "" give the empty partition.
    static Partition parse(const std::string& text) {
        if (text.empty() || text == "0") return {};
        std::vector<int> parts;
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("Partition::parse: bad token '" + tok + "'");
            parts.push_back(v);
        }
        return Partition(std::move(parts));
    }

    auto operator<=>(const Partition& other) const = default;

private:
    std::vector<int> parts_;
};

/// True iff the diagram of inner fits inside the diagram of outer rowwise.
inline bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (outer.part(i) < inner.part(i)) return false;
    return true;
}

/// All partitions obtained from lambda by adding a horizontal strip of r boxes
/// (no two added boxes in the same column). pieri_row(lambda, 0) = {lambda}.
inline std::set<Partition> pieri_row(const Partition& lambda, int r) {
    if (r < 0) throw std::invalid_argument("pieri_row: r must be nonnegative");
    std::set<Partition> out;
    // nu interlaces lambda: nu[i] >= lambda[i] >= nu[i+1], |nu| = |lambda| + r.
    std::size_t rows = lambda.length() + 1;
    std::vector<int> nu(rows, 0);
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == rows) {
            if (remaining == 0) out.insert(Partition(nu));
            return;
        }
        int lo = lambda.part(i);
        int hi = (i == 0) ? lambda.part(0) + remaining : lambda.part(i - 1);
        hi = std::min(hi, lambda.part(i) + remaining);
        for (int v = lo; v <= hi; ++v) {
            nu[i] = v;
            self(self, i + 1, remaining - (v - lo));
            nu[i] = 0;
        }
    };
    rec(rec, 0, r);
    return out;
}

/// All partitions of the given weight, ascending in lexicographic order.
inline std::vector<Partition> partitions_of(int weight) {
    if (weight < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, weight, weight);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace schurpow
