#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "osres/rational.hpp"

namespace osres {

// Subset of [n] (1-based elements) packed into bits 0..n-1.
using SetMask = std::uint64_t;

inline SetMask mask_of(std::initializer_list<int> elems) {
    SetMask m = 0;
    for (int e : elems) m |= SetMask(1) << (e - 1);
    return m;
}

inline SetMask mask_of(const std::vector<int>& elems) {
    SetMask m = 0;
    for (int e : elems) m |= SetMask(1) << (e - 1);
    return m;
}

inline std::vector<int> elements_of(SetMask m) {
    std::vector<int> out;
    while (m) {
        const int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

inline int set_size(SetMask m) { return std::popcount(m); }

// Sign of merging the increasing tuple `s` in front of the increasing tuple
// `t` (disjoint): parity of #{(a,b) : a in s, b in t, a > b}.
inline int merge_sign(SetMask s, SetMask t) {
    int inversions = 0;
    SetMask rest = t;
    while (rest) {
        const int b = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(s >> (b + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

// Element of the graded exterior algebra E on generators e_1..e_n: a sparse
// formal sum of strictly increasing index tuples (stored as bitmasks) with
// nonzero exact coefficients. Possibly inhomogeneous.
template <class F>
class ExteriorElement {
public:
    explicit ExteriorElement(int n = 0) : n_(n) {
        if (n < 0 || n > 64) throw std::invalid_argument("generator count out of range");
    }

    static ExteriorElement unit(int n) { return monomial(n, 0, F(1)); }
    static ExteriorElement generator(int n, int i) {
        if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
        return monomial(n, SetMask(1) << (i - 1), F(1));
    }
    static ExteriorElement monomial(int n, SetMask support, F coeff) {
        ExteriorElement x(n);
        x.add_term(support, std::move(coeff));
        return x;
    }

    int generators() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<SetMask, F>& terms() const { return terms_; }

    void add_term(SetMask support, const F& coeff) {
        using osres::is_zero;
        if (is_zero(coeff)) return;
        if (n_ < 64 && (support >> n_) != 0)
            throw std::invalid_argument("support outside generator set");
        auto it = terms_.find(support);
        if (it == terms_.end()) {
            terms_.emplace(support, coeff);
        } else {
            it->second += coeff;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    // Restriction to the degree-p graded component.
    ExteriorElement component(int p) const {
        ExteriorElement out(n_);
        for (const auto& [s, c] : terms_)
            if (set_size(s) == p) out.terms_.emplace(s, c);
        return out;
    }

    bool is_homogeneous(int* degree = nullptr) const {
        int d = -1;
        for (const auto& [s, c] : terms_) {
            if (d == -1)
                d = set_size(s);
            else if (d != set_size(s))
                return false;
        }
        if (degree) *degree = d;
        return true;
    }

    ExteriorElement operator-() const {
        ExteriorElement out(n_);
        for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
        return out;
    }

    ExteriorElement& operator+=(const ExteriorElement& o) {
        check_same_algebra(o);
        for (const auto& [s, c] : o.terms_) add_term(s, c);
        return *this;
    }
    ExteriorElement& operator-=(const ExteriorElement& o) {
        check_same_algebra(o);
        for (const auto& [s, c] : o.terms_) add_term(s, -c);
        return *this;
    }
    friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
    friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }

    friend ExteriorElement operator*(const F& c, const ExteriorElement& x) {
        ExteriorElement out(x.n_);
        for (const auto& [s, v] : x.terms_) out.add_term(s, c * v);
        return out;
    }

    friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [s, c] : terms_) {
            if (!first) os << " + ";
            os << "(" << c << ")";
            for (int e : elements_of(s)) os << "e" << e;
            first = false;
        }
        return os.str();
    }

private:
    int n_;
    std::map<SetMask, F> terms_;

    void check_same_algebra(const ExteriorElement& o) const {
        if (n_ != o.n_) throw std::invalid_argument("mismatched generator sets");
    }

    template <class G>
    friend ExteriorElement<G> wedge(const ExteriorElement<G>&, const ExteriorElement<G>&);
    template <class G>
    friend ExteriorElement<G> boundary(const ExteriorElement<G>&);
};

// Bilinear wedge product; on basis tuples, zero when supports intersect,
// otherwise the merged increasing tuple with the permutation sign.
template <class F>
ExteriorElement<F> wedge(const ExteriorElement<F>& x, const ExteriorElement<F>& y) {
    x.check_same_algebra(y);
    ExteriorElement<F> out(x.n_);
    for (const auto& [s, cs] : x.terms_)
        for (const auto& [t, ct] : y.terms_) {
            if (s & t) continue;
            const int sg = merge_sign(s, t);
            out.add_term(s | t, sg > 0 ? cs * ct : -(cs * ct));
        }
    return out;
}

// The boundary map: linear extension of d(1) = 0, d(e_i) = 1, and the
// alternating sum over deleted factors in higher degrees.
template <class F>
ExteriorElement<F> boundary(const ExteriorElement<F>& x) {
    ExteriorElement<F> out(x.n_);
    for (const auto& [s, c] : x.terms_) {
        SetMask rest = s;
        int k = 0;
        while (rest) {
            const int b = std::countr_zero(rest);
            rest &= rest - 1;
            out.add_term(s & ~(SetMask(1) << b), (k & 1) ? -c : c);
            ++k;
        }
    }
    return out;
}

using ExteriorQ = ExteriorElement<Rational>;

}  // namespace osres
