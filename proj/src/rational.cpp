#include "pslopes/rational.hpp"

#include <cctype>

namespace pslopes {

Rational parse_rational(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw SpecError("empty rational");
    if (s.find_first_of(".eE") != std::string::npos)
        throw SpecError("rational '" + raw + "' is not exact (use 1/2)");
    auto check_int = [&](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
        if (i == part.size()) throw SpecError("malformed rational '" + raw + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw SpecError("malformed rational '" + raw + "'");
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    check_int(num, true);
    check_int(den, false);
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw SpecError("zero denominator in '" + raw + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

Rational frac(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("zero denominator");
    Rational q(a, b);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Integer floor_q(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_q(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

long vp_int(const Integer& n, long p) {
    if (n == 0) throw std::domain_error("valuation of zero integer");
    Integer m = abs(n);
    long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        m /= p;
        ++v;
    }
    return v;
}

long vp_factorial(long n, long p) {
    long v = 0;
    for (long q = p; q <= n; q *= p) {
        v += n / q;
        if (q > n / p) break;
    }
    return v;
}

}  // namespace pslopes
