#pragma once

// Permutations of {1..n} with cycle-notation parsing and printing.

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurpow {

class Permutation {
public:
    Permutation() = default;

    /// images[i] is the 0-based image of point i.
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("Permutation: image list is not a bijection");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int degree) {
        std::vector<int> img(static_cast<std::size_t>(degree));
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    /// Parses disjoint-cycle notation with 1-based points, e.g. "(1,2,3)(4,5)".
    /// "()" denotes the identity.
    static Permutation from_cycles(const std::string& text, int degree) {
        std::vector<int> img(static_cast<std::size_t>(degree));
        std::iota(img.begin(), img.end(), 0);
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        skip_ws();
        while (pos < text.size()) {
            if (text[pos] != '(') throw std::invalid_argument("Permutation: expected '(' in '" + text + "'");
            ++pos;
            std::vector<int> cycle;
            skip_ws();
            while (pos < text.size() && text[pos] != ')') {
                std::size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (start == pos) throw std::invalid_argument("Permutation: expected point in '" + text + "'");
                int point = std::stoi(text.substr(start, pos - start));
                if (point < 1 || point > degree)
                    throw std::invalid_argument("Permutation: point out of range in '" + text + "'");
                cycle.push_back(point - 1);
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    skip_ws();
                }
            }
            if (pos == text.size()) throw std::invalid_argument("Permutation: unterminated cycle in '" + text + "'");
            ++pos;  // ')'
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                int from = cycle[i];
                int to = cycle[(i + 1) % cycle.size()];
                if (img[static_cast<std::size_t>(from)] != from)
                    throw std::invalid_argument("Permutation: cycles are not disjoint in '" + text + "'");
                img[static_cast<std::size_t>(from)] = to;
            }
            skip_ws();
        }
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int point) const { return img_[static_cast<std::size_t>(point)]; }

    /// Composition acting left-to-right on points: (a*b)(x) = b(a(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.degree() != b.degree()) throw std::invalid_argument("Permutation: degree mismatch");
        std::vector<int> img(a.img_.size());
        for (std::size_t i = 0; i < img.size(); ++i)
            img[i] = b.img_[static_cast<std::size_t>(a.img_[i])];
        Permutation p;
        p.img_ = std::move(img);
        return p;
    }

    Permutation inverse() const {
        std::vector<int> img(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) img[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
        Permutation p;
        p.img_ = std::move(img);
        return p;
    }

    bool operator==(const Permutation& rhs) const { return img_ == rhs.img_; }

    std::string to_cycles() const {
        std::ostringstream os;
        std::vector<bool> seen(img_.size(), false);
        bool any = false;
        for (std::size_t start = 0; start < img_.size(); ++start) {
            if (seen[start] || img_[start] == static_cast<int>(start)) continue;
            any = true;
            os << '(';
            std::size_t cur = start;
            bool first = true;
            do {
                if (!first) os << ',';
                first = false;
                os << cur + 1;
                seen[cur] = true;
                cur = static_cast<std::size_t>(img_[cur]);
            } while (cur != start);
            os << ')';
        }
        return any ? os.str() : "()";
    }

    /// Stable byte key for hashing during group enumeration.
    std::string key() const {
        std::string k;
        k.reserve(img_.size() * sizeof(int));
        k.append(reinterpret_cast<const char*>(img_.data()), img_.size() * sizeof(int));
        return k;
    }

private:
    std::vector<int> img_;
};

}  // namespace schurpow
