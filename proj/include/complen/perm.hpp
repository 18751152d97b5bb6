#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "complen/bigint.hpp"

namespace complen {

using Point = std::uint32_t;

constexpr unsigned kMaxDegree = 1u << 20;

// Permutation of {0, ..., n-1} stored as an image table.
// Composition is left-to-right: (p * q)(x) = q(p(x)), i.e. apply p first.
class Perm {
  public:
    Perm() = default;
    explicit Perm(unsigned n) : img_(n) {
        check_degree(n);
        std::iota(img_.begin(), img_.end(), Point{0});
    }

    static Perm from_images(std::vector<Point> images) {
        check_degree(static_cast<unsigned>(images.size()));
        std::vector<bool> seen(images.size(), false);
        for (Point v : images) {
            if (v >= images.size() || seen[v])
                throw std::invalid_argument("Perm: image table is not a bijection");
            seen[v] = true;
        }
        Perm p;
        p.img_ = std::move(images);
        return p;
    }

    // Disjointness of the cycles is validated implicitly (a repeated point
    // would break the bijection check).
    static Perm from_cycles(unsigned n, const std::vector<std::vector<Point>>& cycles) {
        check_degree(n);
        std::vector<Point> img(n);
        std::iota(img.begin(), img.end(), Point{0});
        std::vector<bool> touched(n, false);
        for (const auto& cyc : cycles) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                Point a = cyc[i], b = cyc[(i + 1) % cyc.size()];
                if (a >= n || touched[a])
                    throw std::invalid_argument("Perm: bad or non-disjoint cycles");
                touched[a] = true;
                img[a] = b;
            }
        }
        return from_images(std::move(img));
    }

    unsigned degree() const { return static_cast<unsigned>(img_.size()); }
    Point operator[](Point x) const { return img_[x]; }
    const std::vector<Point>& images() const { return img_; }

    bool is_identity() const {
        for (Point i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }

    Perm operator*(const Perm& q) const {
        if (degree() != q.degree()) throw std::invalid_argument("Perm: degree mismatch");
        Perm r;
        r.img_.resize(img_.size());
        for (Point i = 0; i < img_.size(); ++i) r.img_[i] = q.img_[img_[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(img_.size());
        for (Point i = 0; i < img_.size(); ++i) r.img_[img_[i]] = i;
        return r;
    }

    Perm conjugate_by(const Perm& g) const {  // g^-1 * this * g
        return g.inverse() * (*this) * g;
    }

    std::vector<std::vector<Point>> cycles(bool include_fixed = false) const {
        std::vector<std::vector<Point>> out;
        std::vector<bool> seen(img_.size(), false);
        for (Point s = 0; s < img_.size(); ++s) {
            if (seen[s]) continue;
            std::vector<Point> cyc;
            Point x = s;
            do {
                seen[x] = true;
                cyc.push_back(x);
                x = img_[x];
            } while (x != s);
            if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
        }
        return out;
    }

    // Element order as a factored map {prime -> exponent}; cycle lcm can be
    // astronomically large at degree 2^20, so it is never held as one word.
    std::map<std::uint64_t, unsigned> order_factored() const {
        std::map<std::uint64_t, unsigned> lcm;
        for (const auto& c : cycles())
            for (auto& [p, e] : factorize_u64(c.size()))
                lcm[p] = std::max(lcm[p], e);
        return lcm;
    }

    BigInt order() const {
        BigInt o = 1;
        for (auto& [p, e] : order_factored()) o *= big_pow(BigInt(p), e);
        return o;
    }

    // this^e for arbitrary (nonnegative) e, done per cycle in O(n).
    Perm power(const BigInt& e) const {
        std::vector<Point> img(img_.size());
        for (const auto& c : cycles(true)) {
            auto shift = static_cast<std::size_t>(e % c.size());
            for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + shift) % c.size()];
        }
        Perm r;
        r.img_ = std::move(img);
        return r;
    }

    std::vector<Point> moved_points() const {
        std::vector<Point> m;
        for (Point i = 0; i < img_.size(); ++i)
            if (img_[i] != i) m.push_back(i);
        return m;
    }

    std::string to_cycle_string() const {  // 0-based, "()" for identity
        auto cs = cycles();
        if (cs.empty()) return "()";
        std::ostringstream os;
        for (const auto& c : cs) {
            os << '(';
            for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
            os << ')';
        }
        return os.str();
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (Point v : img_) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }

  private:
    static void check_degree(unsigned n) {
        if (n > kMaxDegree) throw std::invalid_argument("Perm: degree above cap 2^20");
    }
    std::vector<Point> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace complen
