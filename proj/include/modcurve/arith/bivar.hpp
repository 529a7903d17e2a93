#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modcurve/arith/rational.hpp"
#include "modcurve/arith/ring.hpp"

namespace modcurve {

// Bivariate polynomial with exact integer coefficients, indexed by exponent
// pairs (i, j) for X^i * Y^j.  Terms are stored under the lexicographic
// order, which is a genuine monomial order and therefore drives exact
// division; the canonical *display* order (used by text()) grades terms by
// max(i, j) descending and is cosmetic only.
class BivarPoly {
  public:
    using Key = std::pair<long, long>;

    BivarPoly() = default;
    BivarPoly(const Int& c) {
        if (sgn(c) != 0) t_[{0, 0}] = c;
    }
    BivarPoly(long c) : BivarPoly(Int(c)) {}

    static BivarPoly monomial(long i, long j, const Int& c) {
        if (i < 0 || j < 0) throw std::domain_error("negative exponent");
        BivarPoly p;
        if (sgn(c) != 0) p.t_[{i, j}] = c;
        return p;
    }
    static BivarPoly X() { return monomial(1, 0, 1); }
    static BivarPoly Y() { return monomial(0, 1, 1); }

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }

    Int coeff(long i, long j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? Int(0) : it->second;
    }

    long degree_x() const {
        long d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, k.first);
        return d;
    }
    long degree_y() const {
        long d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, k.second);
        return d;
    }

    friend bool operator==(const BivarPoly& p, const BivarPoly& q) { return p.t_ == q.t_; }
    friend bool operator!=(const BivarPoly& p, const BivarPoly& q) { return !(p == q); }

    BivarPoly operator-() const {
        BivarPoly r;
        for (const auto& [k, c] : t_) r.t_[k] = -c;
        return r;
    }
    friend BivarPoly operator+(const BivarPoly& p, const BivarPoly& q) {
        BivarPoly r = p;
        for (const auto& [k, c] : q.t_) r.add_term(k, c);
        return r;
    }
    friend BivarPoly operator-(const BivarPoly& p, const BivarPoly& q) {
        BivarPoly r = p;
        for (const auto& [k, c] : q.t_) r.add_term(k, -c);
        return r;
    }
    friend BivarPoly operator*(const BivarPoly& p, const BivarPoly& q) {
        BivarPoly r;
        for (const auto& [k1, c1] : p.t_)
            for (const auto& [k2, c2] : q.t_)
                r.add_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
        return r;
    }
    BivarPoly& operator+=(const BivarPoly& q) { return *this = *this + q; }
    BivarPoly& operator-=(const BivarPoly& q) { return *this = *this - q; }
    BivarPoly& operator*=(const BivarPoly& q) { return *this = *this * q; }

    // Leading term under lex (X before Y).
    std::pair<Key, Int> leading_term() const {
        if (t_.empty()) throw std::domain_error("leading term of zero polynomial");
        auto it = std::prev(t_.end());
        return {it->first, it->second};
    }

    Int content() const {
        Int g(0);
        for (const auto& [k, c] : t_) g = gcd(g, c);
        return g;
    }

    BivarPoly divexact_scalar(const Int& s) const {
        BivarPoly r;
        for (const auto& [k, c] : t_) r.t_[k] = ring_traits<Int>::divexact(c, s);
        return r;
    }

    BivarPoly swap_xy() const {
        BivarPoly r;
        for (const auto& [k, c] : t_) r.t_[{k.second, k.first}] = c;
        return r;
    }
    bool symmetric() const { return *this == swap_xy(); }

    Rat eval(const Rat& x, const Rat& y) const {
        Rat acc(0);
        for (const auto& [k, c] : t_)
            acc += Rat(c) * rat_pow(x, k.first) * rat_pow(y, k.second);
        return acc;
    }

    // Substitute arbitrary values for X and Y in any commutative ring V
    // that supports +, *, construction from Int, and ring_pow.
    template <class V>
    V eval_generic(const V& x, const V& y) const {
        V acc = ring_traits<V>::zero();
        for (const auto& [k, c] : t_)
            acc = acc + V(c) * ring_pow(x, k.first) * ring_pow(y, k.second);
        return acc;
    }

    // Terms in canonical display order: grade g = max(i, j) descending,
    // then i descending, then j descending.
    std::vector<std::pair<Key, Int>> canonical_terms() const {
        std::vector<std::pair<Key, Int>> v(t_.begin(), t_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            long ga = std::max(a.first.first, a.first.second);
            long gb = std::max(b.first.first, b.first.second);
            if (ga != gb) return ga > gb;
            if (a.first.first != b.first.first) return a.first.first > b.first.first;
            return a.first.second > b.first.second;
        });
        return v;
    }

    std::string text() const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : canonical_terms()) {
            bool neg = sgn(c) < 0;
            Int a = abs(c);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? "-" : "+";
            }
            std::string mono;
            if (k.first > 0) {
                mono += "X";
                if (k.first > 1) mono += "^" + std::to_string(k.first);
            }
            if (k.second > 0) {
                if (!mono.empty()) mono += "*";
                mono += "Y";
                if (k.second > 1) mono += "^" + std::to_string(k.second);
            }
            if (mono.empty()) {
                out += a.get_str();
            } else {
                if (a != 1) out += a.get_str() + "*";
                out += mono;
            }
        }
        return out;
    }

    // Exact division (throws std::logic_error if inexact), by leading-term
    // elimination under lex.
    static BivarPoly divexact(const BivarPoly& a, const BivarPoly& b) {
        if (b.is_zero()) throw std::domain_error("exact division by zero polynomial");
        BivarPoly rem = a, quo;
        auto [kb, cb] = b.leading_term();
        while (!rem.is_zero()) {
            auto [ka, ca] = rem.leading_term();
            long di = ka.first - kb.first, dj = ka.second - kb.second;
            if (di < 0 || dj < 0) throw std::logic_error("inexact bivariate division");
            BivarPoly t = monomial(di, dj, ring_traits<Int>::divexact(ca, cb));
            quo += t;
            rem -= t * b;
        }
        return quo;
    }

  private:
    void add_term(const Key& k, const Int& c) {
        auto it = t_.find(k);
        if (it == t_.end()) {
            if (sgn(c) != 0) t_[k] = c;
        } else {
            it->second += c;
            if (sgn(it->second) == 0) t_.erase(it);
        }
    }

    std::map<Key, Int> t_;
};

template <>
struct ring_traits<BivarPoly> {
    static constexpr bool is_field = false;
    static BivarPoly zero() { return BivarPoly(); }
    static BivarPoly one() { return BivarPoly(1); }
    static bool is_zero(const BivarPoly& p) { return p.is_zero(); }
    static BivarPoly divexact(const BivarPoly& a, const BivarPoly& b) {
        return BivarPoly::divexact(a, b);
    }
};

inline std::string to_string(const BivarPoly& p) { return p.text(); }

}  // namespace modcurve
