#include "osres/rational.hpp"

#include <ostream>

namespace osres {

Rational Rational::from_string(const std::string& s) {
    const auto slash = s.find('/');
    mpz_class num, den(1);
    try {
        num = mpz_class(slash == std::string::npos ? s : s.substr(0, slash), 10);
        if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
    if (den == 0) throw std::invalid_argument("division by zero");
    mpq_class v(num, den);
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace osres
