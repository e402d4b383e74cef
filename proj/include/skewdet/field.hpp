#ifndef SKEWDET_FIELD_HPP
#define SKEWDET_FIELD_HPP

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewdet {

// Element of GF(p^k), encoded as an index in [0, q). The polynomial
// c_0 + c_1 x + ... + c_{k-1} x^{k-1} is packed base p: index = sum c_i p^i.
// Index 0 is the additive identity, index 1 the multiplicative identity,
// and scalars of the prime subfield keep their natural index.
using Elem = std::uint16_t;

namespace detail {

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline unsigned mod_pow(unsigned base, unsigned exp, unsigned mod) {
    std::uint64_t r = 1, b = base % mod;
    while (exp) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<unsigned>(r);
}

// Polynomials over GF(p): coefficient vectors, lowest degree first.
using Poly = std::vector<unsigned>;

inline Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<unsigned>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

// Remainder of a modulo the monic polynomial d.
inline Poly poly_rem(Poly a, const Poly& d, unsigned p) {
    const std::size_t dd = d.size() - 1;
    while (a.size() > dd) {
        unsigned lead = a.back();
        std::size_t shift = a.size() - 1 - dd;
        if (lead != 0) {
            for (std::size_t i = 0; i < dd; ++i) {
                unsigned t = static_cast<unsigned>(std::uint64_t(lead) * d[i] % p);
                a[shift + i] = (a[shift + i] + p - t) % p;
            }
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
inline bool poly_is_irreducible(const Poly& f, unsigned p) {
    const std::size_t k = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= k; ++d) {
        Poly div(d + 1, 0);
        div[d] = 1;
        while (true) {
            if (poly_rem(f, div, p).empty()) return false;
            std::size_t i = 0;
            while (i < d && ++div[i] == p) div[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

}  // namespace detail

// GF(p^k) for an odd prime p and q = p^k <= 2^16. The modulus is the
// lexicographically smallest monic irreducible polynomial of degree k
// (coefficients compared low degree first), so element indices are
// reproducible across runs. Extension fields multiply through log/antilog
// tables; prime fields use plain modular arithmetic. A constructed field is
// immutable and safe to share across threads.
class Field {
public:
    explicit Field(unsigned p, unsigned k = 1) : p_(p), k_(k) {
        if (!detail::is_prime(p_))
            throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p_));
        if (p_ == 2)
            throw std::invalid_argument("characteristic 2 is not supported; the field order must be odd");
        if (k_ < 1) throw std::invalid_argument("extension degree must be at least 1");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < k_; ++i) {
            q *= p_;
            if (q > 65536) throw std::invalid_argument("field order exceeds 2^16");
        }
        q_ = static_cast<unsigned>(q);
        if (k_ == 1) {
            modulus_ = {0, 1};  // placeholder x; arithmetic is plain mod p
        } else {
            find_modulus();
            build_tables();
        }
    }

    unsigned p() const { return p_; }
    unsigned extension_degree() const { return k_; }
    unsigned q() const { return q_; }

    // Monic modulus, k+1 coefficients, lowest degree first.
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const {
        assert(a < q_ && b < q_);
        if (k_ == 1) {
            unsigned s = unsigned(a) + b;
            return Elem(s >= p_ ? s - p_ : s);
        }
        unsigned res = 0, mult = 1, x = a, y = b;
        for (unsigned i = 0; i < k_; ++i) {
            unsigned d = x % p_ + y % p_;
            if (d >= p_) d -= p_;
            res += d * mult;
            mult *= p_;
            x /= p_;
            y /= p_;
        }
        return Elem(res);
    }

    Elem neg(Elem a) const {
        assert(a < q_);
        if (k_ == 1) return Elem(a ? p_ - a : 0);
        return neg_[a];
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        assert(a < q_ && b < q_);
        if (k_ == 1) return Elem(unsigned(a) * b % p_);
        if (a == 0 || b == 0) return 0;
        unsigned s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero in " + name());
        if (k_ == 1) return Elem(detail::mod_pow(a, p_ - 2, p_));
        unsigned l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }

    // The scalar 2, never zero here since p is odd.
    Elem two() const { return 2; }

    std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

    std::string modulus_string() const {
        if (k_ == 1) return "x";
        std::string s;
        for (int d = int(k_); d >= 0; --d) {
            unsigned c = modulus_[d];
            if (c == 0) continue;
            if (!s.empty()) s += " + ";
            if (c > 1 || d == 0) s += std::to_string(c);
            if (d >= 1) {
                if (c > 1) s += "*";
                s += "x";
                if (d > 1) s += "^" + std::to_string(d);
            }
        }
        return s;
    }

private:
    void find_modulus() {
        std::vector<unsigned> c(k_, 0);
        while (true) {
            detail::Poly f(c.begin(), c.end());
            f.push_back(1);
            if (detail::poly_is_irreducible(f, p_)) {
                modulus_.assign(f.begin(), f.end());
                mpoly_ = f;
                return;
            }
            // advance (c_0, ..., c_{k-1}) lexicographically, c_0 most significant
            std::size_t i = k_;
            while (i > 0 && ++c[i - 1] == p_) c[--i] = 0;
            if (i == 0) throw std::logic_error("no irreducible modulus of degree " + std::to_string(k_));
        }
    }

    Elem encode(const detail::Poly& f) const {
        unsigned idx = 0, mult = 1;
        for (unsigned i = 0; i < k_; ++i) {
            idx += (i < f.size() ? f[i] : 0) * mult;
            mult *= p_;
        }
        return Elem(idx);
    }

    detail::Poly decode(Elem a) const {
        detail::Poly f(k_);
        unsigned x = a;
        for (unsigned i = 0; i < k_; ++i) {
            f[i] = x % p_;
            x /= p_;
        }
        while (!f.empty() && f.back() == 0) f.pop_back();
        return f;
    }

    Elem mul_poly(Elem a, Elem b) const {
        return encode(detail::poly_rem(detail::poly_mul(decode(a), decode(b), p_), mpoly_, p_));
    }

    Elem pow_poly(Elem a, unsigned e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul_poly(r, a);
            a = mul_poly(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        std::vector<unsigned> factors;
        unsigned n = q_ - 1;
        for (unsigned d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                factors.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) factors.push_back(n);

        Elem gen = 0;
        for (unsigned cand = 2; cand < q_; ++cand) {
            bool primitive = true;
            for (unsigned f : factors)
                if (pow_poly(Elem(cand), (q_ - 1) / f) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                gen = Elem(cand);
                break;
            }
        }
        if (gen == 0) throw std::logic_error("no multiplicative generator found");

        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        Elem x = 1;
        for (unsigned i = 0; i + 1 < q_; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = mul_poly(x, gen);
        }

        neg_.resize(q_);
        for (unsigned a = 0; a < q_; ++a) {
            unsigned idx = 0, mult = 1, v = a;
            for (unsigned i = 0; i < k_; ++i) {
                unsigned d = v % p_;
                idx += (d ? p_ - d : 0) * mult;
                mult *= p_;
                v /= p_;
            }
            neg_[a] = Elem(idx);
        }
    }

    unsigned p_ = 0, k_ = 0, q_ = 0;
    std::vector<Elem> modulus_;
    detail::Poly mpoly_;
    std::vector<Elem> exp_, log_, neg_;
};

}  // namespace skewdet

#endif
