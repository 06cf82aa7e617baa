#include "osres/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace osres {

namespace {

using Poly = std::vector<Rational>;  // constant term first, no trailing zeros enforced by trim()

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

// Euclidean division a = q*b + r over Q[x]; returns {q, r}.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    if (b.empty()) throw std::invalid_argument("division by zero");
    if (a.size() < b.size()) return {{}, a};
    Poly q(a.size() - b.size() + 1, Rational(0));
    const Rational lead_inv = b.back().inverse();
    for (std::size_t shift = q.size(); shift-- > 0;) {
        const std::size_t i = shift + b.size() - 1;  // degree being cancelled
        if (a[i].is_zero()) continue;
        const Rational f = a[i] * lead_inv;
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    }
    trim(a);
    return {q, a};
}

Poly x_pow_minus_one(int n) {
    Poly p(n + 1, Rational(0));
    p[0] = Rational(-1);
    p[n] = Rational(1);
    return p;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(int n) {
    static std::map<int, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw std::invalid_argument("conductor must be positive");

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // without re-entering the lock.
    std::vector<int> pending{n};
    while (!pending.empty()) {
        int k = pending.back();
        if (cache.count(k)) {
            pending.pop_back();
            continue;
        }
        bool ready = true;
        for (int d = 1; d < k; ++d)
            if (k % d == 0 && !cache.count(d)) {
                pending.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        Poly p = x_pow_minus_one(k);
        for (int d = 1; d < k; ++d)
            if (k % d == 0) {
                auto [q, r] = divmod(p, cache.at(d));
                if (!r.empty()) throw std::logic_error("cyclotomic polynomial division not exact");
                p = q;
            }
        cache.emplace(k, std::move(p));
        pending.pop_back();
    }
    return cache.at(n);
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
    const std::size_t deg = cyclotomic_polynomial(conductor_).size() - 1;
    if (coeffs_.size() != deg)
        throw std::invalid_argument("coefficient vector length must equal deg Phi_n");
}

Cyclotomic Cyclotomic::zeta(int conductor) {
    const std::size_t deg = cyclotomic_polynomial(conductor).size() - 1;
    std::vector<Rational> c(deg, Rational(0));
    if (deg >= 2) {
        c[1] = Rational(1);
        return Cyclotomic(conductor, std::move(c));
    }
    // deg 1 (n = 1 or 2): zeta = root of the linear Phi_n, i.e. 1 or -1.
    c[0] = conductor == 1 ? Rational(1) : Rational(-1);
    return Cyclotomic(conductor, std::move(c));
}

Cyclotomic Cyclotomic::from_rational(const Rational& r, int conductor) {
    const std::size_t deg = cyclotomic_polynomial(conductor).size() - 1;
    std::vector<Rational> c(deg, Rational(0));
    c[0] = r;
    return Cyclotomic(conductor, std::move(c));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::logic_error("not a rational value");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

void Cyclotomic::promote(Cyclotomic& a, Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) return;
    // Rational values embed into any cyclotomic field; genuinely mixed
    // conductors do not.
    if (a.is_rational())
        a = from_rational(a.rational_value(), b.conductor_);
    else if (b.is_rational())
        b = from_rational(b.rational_value(), a.conductor_);
    else
        throw std::invalid_argument("incompatible fields");
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic operator+(const Cyclotomic& a0, const Cyclotomic& b0) {
    Cyclotomic a = a0, b = b0;
    Cyclotomic::promote(a, b);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] += b.coeffs_[k];
    return a;
}

Cyclotomic operator-(const Cyclotomic& a0, const Cyclotomic& b0) {
    Cyclotomic a = a0, b = b0;
    Cyclotomic::promote(a, b);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] -= b.coeffs_[k];
    return a;
}

Cyclotomic operator*(const Cyclotomic& a0, const Cyclotomic& b0) {
    Cyclotomic a = a0, b = b0;
    Cyclotomic::promote(a, b);
    Poly prod = mul(a.coeffs_, b.coeffs_);
    auto [q, r] = divmod(prod, cyclotomic_polynomial(a.conductor_));
    (void)q;
    r.resize(a.coeffs_.size(), Rational(0));
    return Cyclotomic(a.conductor_, std::move(r));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::invalid_argument("division by zero");
    // Extended Euclid in Q[x]: u*a + v*Phi_n = gcd = constant (Phi_n irreducible).
    Poly r0 = cyclotomic_polynomial(conductor_);
    Poly r1 = coeffs_;
    trim(r1);
    Poly u0{}, u1{Rational(1)};  // coefficients of `a` along the remainder sequence
    while (true) {
        auto [q, r] = divmod(r0, r1);
        if (r.empty()) break;
        // u2 = u0 - q*u1
        Poly qu = mul(q, u1);
        Poly u2 = u0;
        if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
        for (std::size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        trim(u2);
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.size() != 1) throw std::logic_error("Phi_n not coprime to nonzero element");
    const Rational scale = r1[0].inverse();
    Poly inv = u1;
    for (auto& c : inv) c *= scale;
    auto [q, rem] = divmod(inv, cyclotomic_polynomial(conductor_));
    (void)q;
    rem.resize(coeffs_.size(), Rational(0));
    return Cyclotomic(conductor_, std::move(rem));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a0, const Cyclotomic& b0) {
    Cyclotomic a = a0, b = b0;
    try {
        Cyclotomic::promote(a, b);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return a.coeffs_ == b.coeffs_;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << coeffs_[k].str();
        if (k >= 1) os << "*z" << conductor_ << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

std::size_t pivot_weight(const Cyclotomic& c) {
    std::size_t w = 0;
    for (const auto& x : c.coeffs())
        if (!x.is_zero()) w += x.bit_size();
    return w;
}

}  // namespace osres
