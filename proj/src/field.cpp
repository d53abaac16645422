#include "ohk/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ohk {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int mod_reduce(const Int& x, std::uint64_t p) {
    Int m = x % Int(p);
    if (m < 0) m += p;
    return m;
}

// Modular inverse by extended Euclid; a must be nonzero mod p.
Int mod_inv(const Int& a, std::uint64_t p) {
    Int t = 0, newt = 1, r = Int(p), newr = mod_reduce(a, p);
    while (newr != 0) {
        Int q = r / newr;
        Int tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::domain_error("element not invertible mod p");
    return mod_reduce(t, p);
}

} // namespace

Field Field::Fp(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    Field f;
    f.p_ = p;
    return f;
}

Rat Field::canon(const Rat& x) const {
    if (is_q()) return x;
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    Int n = mod_reduce(num, p_);
    if (den != 1) n = mod_reduce(n * mod_inv(den, p_), p_);
    return Rat(n);
}

Rat Field::inv(const Rat& a) const {
    Rat c = canon(a);
    if (c == 0) throw std::domain_error("division by zero");
    if (is_q()) return 1 / c;
    return Rat(mod_inv(boost::multiprecision::numerator(c), p_));
}

Field Field::parse(const std::string& s) {
    if (s == "Q") return Field::Q();
    if (s.size() >= 2 && s[0] == 'F') {
        std::uint64_t p = std::stoull(s.substr(1));
        return Field::Fp(p);
    }
    throw std::invalid_argument("unknown field: " + s);
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

std::string rational_to_string(const Rat& x) {
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace ohk
