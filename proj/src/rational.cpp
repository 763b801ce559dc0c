#include "bell/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "bell/errors.hpp"

namespace bell {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw DocumentError("bad rational literal: '" + text + "'");
    if (slash == std::string::npos) {
        Rational r(num);
        r.canonicalize();
        return r;
    }
    const std::string den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw DocumentError("bad rational literal: '" + text + "' (denominator must be positive digits)");
    Rational d(den);
    if (d == 0) throw DocumentError("bad rational literal: '" + text + "' (zero denominator)");
    Rational r(Rational(num) / d);
    r.canonicalize();
    return r;
}

std::string rational_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string rational_decimal(const Rational& value) {
    constexpr int kDigits = 12;
    if (value == 0) return "0.00000000000";
    const bool negative = value < 0;
    mpq_class v = negative ? Rational(-value) : value;

    // Decimal exponent e with 10^e <= v < 10^{e+1}.
    int e = 0;
    mpq_class ten(10);
    {
        mpq_class t = v;
        while (t >= ten) { t /= ten; ++e; }
        while (t < 1) { t *= ten; --e; }
    }
    // Scale so that kDigits significant digits sit left of the point.
    mpq_class scaled = v;
    int shift = kDigits - 1 - e;
    for (int i = 0; i < shift; ++i) scaled *= ten;
    for (int i = 0; i < -shift; ++i) scaled /= ten;
    // Round half away from zero.
    mpz_class digits;
    mpz_class num = scaled.get_num(), den = scaled.get_den();
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r * 2 >= den) q += 1;
    digits = q;
    std::string ds = digits.get_str();
    if (static_cast<int>(ds.size()) > kDigits) {  // rounding carried over
        ++e;
        ds.pop_back();
    }

    std::string out;
    if (e >= kDigits + 3 || e < -4) {  // scientific
        out = ds.substr(0, 1) + "." + ds.substr(1);
        out += "e" + std::to_string(e);
    } else if (e >= 0) {
        if (e + 1 >= static_cast<int>(ds.size()))
            out = ds + std::string(e + 1 - ds.size(), '0');
        else
            out = ds.substr(0, e + 1) + "." + ds.substr(e + 1);
    } else {
        out = "0." + std::string(-e - 1, '0') + ds;
    }
    return negative ? "-" + out : out;
}

bool abs_leq(const Rational& value, const Rational& threshold) {
    return (value >= 0 ? value : Rational(-value)) <= threshold;
}

}  // namespace bell
