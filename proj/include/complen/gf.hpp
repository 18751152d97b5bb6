#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace complen {

// Finite field GF(q) for prime powers q <= 256.  Elements are encoded as
// integers 0..q-1: write the element as a polynomial over GF(p) in the class
// of x, then read the coefficient vector as a base-p numeral (little-endian,
// so the constant term is the low digit).  Extension fields reduce modulo the
// Conway polynomial of that degree, which also makes x itself a generator of
// the multiplicative group; prime fields use the smallest primitive root as
// the stored generator.  All arithmetic is table-driven.
class Field {
  public:
    unsigned q() const { return q_; }
    unsigned p() const { return p_; }
    unsigned f() const { return f_; }
    std::uint8_t gen() const { return gen_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t inv(std::uint8_t a) const {
        if (a == 0) throw std::domain_error("Field: inverse of zero");
        return inv_[a];
    }
    std::uint8_t pow(std::uint8_t a, std::uint64_t e) const {
        std::uint8_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // Multiplicative order of a nonzero element.
    unsigned mult_order(std::uint8_t a) const {
        if (a == 0) throw std::domain_error("Field: order of zero");
        unsigned o = 1;
        std::uint8_t x = a;
        while (x != 1) {
            x = mul(x, a);
            ++o;
        }
        return o;
    }

    // Shared per-q instance; building tables once is enough.
    static const Field& get(unsigned q) {
        static std::mutex m;
        static std::map<unsigned, std::unique_ptr<Field>> cache;
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(q);
        if (it == cache.end()) it = cache.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
        return *it->second;
    }

  private:
    explicit Field(unsigned q) : q_(q) {
        if (q < 2 || q > 256) throw std::invalid_argument("Field: order out of range");
        p_ = smallest_prime_factor(q);
        f_ = 0;
        unsigned t = q;
        while (t > 1) {
            if (t % p_ != 0) throw std::invalid_argument("Field: order is not a prime power");
            t /= p_;
            ++f_;
        }
        build_tables();
    }

    static unsigned smallest_prime_factor(unsigned n) {
        for (unsigned d = 2; d * d <= n; ++d)
            if (n % d == 0) return d;
        return n;
    }

    // Reduction polynomials for the extension fields (little-endian
    // coefficients including the leading 1).  Each one is the Conway
    // polynomial of its degree, so x generates the multiplicative group;
    // the constructor checks that property rather than trusting the table.
    static std::vector<std::uint8_t> modulus(unsigned p, unsigned f) {
        struct Entry {
            unsigned p, f;
            std::vector<std::uint8_t> c;
        };
        static const std::vector<Entry> table = {
            {2, 2, {1, 1, 1}},
            {2, 3, {1, 1, 0, 1}},
            {2, 4, {1, 1, 0, 0, 1}},
            {2, 5, {1, 0, 1, 0, 0, 1}},
            {2, 6, {1, 1, 0, 1, 1, 0, 1}},
            {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
            {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
            {3, 2, {2, 2, 1}},
            {3, 3, {1, 2, 0, 1}},
            {3, 4, {2, 0, 0, 2, 1}},
            {3, 5, {1, 2, 0, 0, 0, 1}},
            {5, 2, {2, 4, 1}},
            {5, 3, {3, 3, 0, 1}},
            {7, 2, {3, 6, 1}},
            {11, 2, {2, 7, 1}},
            {13, 2, {2, 12, 1}},
        };
        for (const auto& e : table)
            if (e.p == p && e.f == f) return e.c;
        throw std::invalid_argument("Field: no reduction polynomial for this order");
    }

    void build_tables() {
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);

        auto digits = [&](unsigned v) {
            std::vector<unsigned> d(f_, 0);
            for (unsigned i = 0; i < f_; ++i) {
                d[i] = v % p_;
                v /= p_;
            }
            return d;
        };
        auto value = [&](const std::vector<unsigned>& d) {
            unsigned v = 0;
            for (unsigned i = f_; i-- > 0;) v = v * p_ + d[i];
            return v;
        };

        std::vector<std::uint8_t> mod;
        if (f_ > 1) mod = modulus(p_, f_);

        for (unsigned a = 0; a < q_; ++a) {
            auto da = digits(a);
            for (unsigned b = 0; b < q_; ++b) {
                auto db = digits(b);
                std::vector<unsigned> s(f_);
                for (unsigned i = 0; i < f_; ++i) s[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = static_cast<std::uint8_t>(value(s));

                // polynomial product, then reduce by the modulus
                std::vector<unsigned> prod(2 * f_ - 1, 0);
                for (unsigned i = 0; i < f_; ++i)
                    for (unsigned j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                if (f_ > 1) {
                    for (unsigned deg = 2 * f_ - 2; deg >= f_; --deg) {
                        unsigned c = prod[deg];
                        if (c == 0) continue;
                        prod[deg] = 0;
                        // x^deg = -(lower part of modulus) * x^(deg-f)
                        for (unsigned i = 0; i < f_; ++i) {
                            unsigned sub = (c * mod[i]) % p_;
                            unsigned& slot = prod[deg - f_ + i];
                            slot = (slot + p_ - sub) % p_;
                        }
                    }
                }
                std::vector<unsigned> r(prod.begin(), prod.begin() + f_);
                mul_[a * q_ + b] = static_cast<std::uint8_t>(value(r));
            }
        }
        for (unsigned a = 0; a < q_; ++a) {
            auto da = digits(a);
            std::vector<unsigned> n(f_);
            for (unsigned i = 0; i < f_; ++i) n[i] = (p_ - da[i]) % p_;
            neg_[a] = static_cast<std::uint8_t>(value(n));
            for (unsigned b = 0; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
        }

        if (f_ > 1) {
            gen_ = static_cast<std::uint8_t>(p_);  // the class of x
        } else {
            gen_ = 0;
            for (unsigned g = 2; g < q_; ++g)
                if (mult_order(static_cast<std::uint8_t>(g)) == q_ - 1) {
                    gen_ = static_cast<std::uint8_t>(g);
                    break;
                }
        }
        if (q_ > 2 && (gen_ == 0 || mult_order(gen_) != q_ - 1))
            throw std::logic_error("Field: stored generator is not primitive");
        if (q_ == 2) gen_ = 1;
    }

    unsigned q_, p_, f_;
    std::uint8_t gen_ = 0;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace complen
