#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace modcurve {

// Permutation of {0, .., n-1} (printed 1-based in cycle notation).
// Composition convention: (p * q)(x) = p(q(x)), i.e. q acts first.
class Perm {
  public:
    Perm() = default;
    explicit Perm(long n) : img_(static_cast<size_t>(n)) {
        std::iota(img_.begin(), img_.end(), 0);
    }
    explicit Perm(std::vector<long> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (long v : img_) {
            if (v < 0 || v >= static_cast<long>(img_.size()) || seen[static_cast<size_t>(v)])
                throw std::domain_error("not a permutation");
            seen[static_cast<size_t>(v)] = true;
        }
    }

    long size() const { return static_cast<long>(img_.size()); }
    long apply(long x) const { return img_.at(static_cast<size_t>(x)); }
    const std::vector<long>& images() const { return img_; }

    friend bool operator==(const Perm& p, const Perm& q) { return p.img_ == q.img_; }
    friend bool operator!=(const Perm& p, const Perm& q) { return !(p == q); }
    bool operator<(const Perm& q) const { return img_ < q.img_; }

    bool is_identity() const {
        for (long i = 0; i < size(); ++i)
            if (img_[static_cast<size_t>(i)] != i) return false;
        return true;
    }

    friend Perm operator*(const Perm& p, const Perm& q) {
        if (p.size() != q.size()) throw std::domain_error("permutation size mismatch");
        std::vector<long> v(p.img_.size());
        for (long i = 0; i < q.size(); ++i) v[static_cast<size_t>(i)] = p.apply(q.apply(i));
        Perm r;
        r.img_ = std::move(v);
        return r;
    }

    Perm inverse() const {
        std::vector<long> v(img_.size());
        for (long i = 0; i < size(); ++i) v[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
        Perm r;
        r.img_ = std::move(v);
        return r;
    }

    Perm power(long e) const {
        Perm acc(size());
        Perm base = e < 0 ? inverse() : *this;
        long k = e < 0 ? -e : e;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return acc;
    }

    // Cycles ordered by minimal element; fixed points omitted unless
    // keep_fixed is set.
    std::vector<std::vector<long>> cycles(bool keep_fixed = false) const {
        std::vector<std::vector<long>> out;
        std::vector<bool> seen(img_.size(), false);
        for (long i = 0; i < size(); ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            std::vector<long> cyc;
            long j = i;
            while (!seen[static_cast<size_t>(j)]) {
                seen[static_cast<size_t>(j)] = true;
                cyc.push_back(j);
                j = apply(j);
            }
            if (cyc.size() > 1 || keep_fixed) out.push_back(std::move(cyc));
        }
        return out;
    }

    // Multiset of cycle lengths, descending (a partition of n).
    std::vector<long> cycle_type() const {
        std::vector<long> parts;
        for (const auto& c : cycles(true)) parts.push_back(static_cast<long>(c.size()));
        std::sort(parts.rbegin(), parts.rend());
        return parts;
    }

    long fixed_points() const {
        long k = 0;
        for (long i = 0; i < size(); ++i)
            if (apply(i) == i) ++k;
        return k;
    }

    long order() const {
        long o = 1;
        for (long len : cycle_type()) o = std::lcm(o, len);
        return o;
    }

    // 1-based disjoint-cycle text, e.g. "(1 2 3)(4 5)"; identity prints "()".
    std::string text() const {
        auto cs = cycles(false);
        if (cs.empty()) return "()";
        std::string out;
        for (const auto& c : cs) {
            out += "(";
            for (size_t t = 0; t < c.size(); ++t) {
                if (t) out += " ";
                out += std::to_string(c[t] + 1);
            }
            out += ")";
        }
        return out;
    }

    // Parse 1-based cycle notation "(1 2 3)(4 5)" over {1..n}; n defaults to
    // the largest point mentioned.  "()" is the identity.
    static Perm parse_cycles(const std::string& s, long n = 0) {
        std::vector<std::vector<long>> cycles;
        size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        };
        skip_ws();
        long maxpt = 0;
        while (pos < s.size()) {
            if (s[pos] != '(') throw std::domain_error("cycle notation: expected '('");
            ++pos;
            std::vector<long> cyc;
            skip_ws();
            while (pos < s.size() && s[pos] != ')') {
                if (!std::isdigit(static_cast<unsigned char>(s[pos])))
                    throw std::domain_error("cycle notation: expected point number");
                long v = 0;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    v = v * 10 + (s[pos] - '0');
                    ++pos;
                }
                if (v < 1) throw std::domain_error("cycle notation: points are 1-based");
                cyc.push_back(v - 1);
                maxpt = std::max(maxpt, v);
                skip_ws();
                if (pos < s.size() && s[pos] == ',') {
                    ++pos;
                    skip_ws();
                }
            }
            if (pos >= s.size()) throw std::domain_error("cycle notation: missing ')'");
            ++pos;
            if (!cyc.empty()) cycles.push_back(std::move(cyc));
            skip_ws();
        }
        long size = std::max(n, maxpt);
        std::vector<long> img(static_cast<size_t>(size));
        std::iota(img.begin(), img.end(), 0);
        std::vector<bool> used(static_cast<size_t>(size), false);
        for (const auto& cyc : cycles) {
            for (size_t t = 0; t < cyc.size(); ++t) {
                long from = cyc[t], to = cyc[(t + 1) % cyc.size()];
                if (used[static_cast<size_t>(from)])
                    throw std::domain_error("cycle notation: repeated point");
                used[static_cast<size_t>(from)] = true;
                img[static_cast<size_t>(from)] = to;
            }
        }
        return Perm(std::move(img));
    }

    // Extend to act on {0..n-1} with new points fixed.
    Perm extended(long n) const {
        if (n < size()) throw std::domain_error("cannot shrink a permutation");
        std::vector<long> v(img_);
        for (long i = size(); i < n; ++i) v.push_back(i);
        return Perm(std::move(v));
    }

  private:
    std::vector<long> img_;
};

// The group generated by the given permutations acts transitively on all
// points.
inline bool permutations_transitive(const std::vector<Perm>& gens, long n) {
    if (n <= 0) return true;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<long> stack{0};
    seen[0] = true;
    long count = 1;
    while (!stack.empty()) {
        long x = stack.back();
        stack.pop_back();
        for (const Perm& g : gens) {
            for (long y : {g.apply(x), g.inverse().apply(x)}) {
                if (!seen[static_cast<size_t>(y)]) {
                    seen[static_cast<size_t>(y)] = true;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
    }
    return count == n;
}

}  // namespace modcurve
