#include <wrapser/value.hpp>

#include <cctype>
#include <cstdlib>

namespace wrapser {

FiltValue parse_decimal(const std::string& text) {
    // accepted shape: [+-] digits [. digits] [ (e|E) [+-] digits ]
    const char* s = text.c_str();
    std::size_t i = 0, n = text.size();
    while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    bool neg = false;
    if (i < n && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');

    mpz_class mantissa = 0;
    long frac_digits = 0, digits = 0;
    for (; i < n && std::isdigit(static_cast<unsigned char>(s[i])); ++i, ++digits)
        mantissa = mantissa * 10 + (s[i] - '0');
    if (i < n && s[i] == '.') {
        ++i;
        for (; i < n && std::isdigit(static_cast<unsigned char>(s[i])); ++i, ++digits, ++frac_digits)
            mantissa = mantissa * 10 + (s[i] - '0');
    }
    long exponent = 0;
    if (i < n && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < n && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
        if (i >= n || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw DataError("bad numeric literal: '" + text + "'");
        for (; i < n && std::isdigit(static_cast<unsigned char>(s[i])); ++i)
            exponent = exponent * 10 + (s[i] - '0');
        if (eneg) exponent = -exponent;
    }
    while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i != n || digits == 0 || start == n)
        throw DataError("bad numeric literal: '" + text + "'");

    if (neg) mantissa = -mantissa;
    long ten_power = exponent - frac_digits;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(ten_power)));
    FiltValue v;
    if (ten_power >= 0)
        v = FiltValue(mantissa * pow10);
    else
        v = FiltValue(mantissa, pow10);
    v.canonicalize();
    return v;
}

double to_double(const FiltValue& v) { return v.get_d(); }

}  // namespace wrapser
