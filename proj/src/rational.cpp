#include "crosscycle/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace crosscycle {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rat rat_from_string(const std::string& input) {
    std::string s;
    s.reserve(input.size());
    for (char ch : input)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    // "p/q" and plain integers go straight to GMP.
    if (s.find_first_of(".eE") == std::string::npos) {
        try {
            Rat r(s, 10);
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad rational literal: " + input);
        }
    }

    // Decimal, possibly with exponent: sign? digits [. digits] ([eE] sign? digits)?
    std::string body = s;
    long exp10 = 0;
    if (auto epos = body.find_first_of("eE"); epos != std::string::npos) {
        std::string etail = body.substr(epos + 1);
        body = body.substr(0, epos);
        if (etail.empty()) throw std::invalid_argument("bad rational literal: " + input);
        char* end = nullptr;
        exp10 = std::strtol(etail.c_str(), &end, 10);
        if (end == nullptr || *end != '\0')
            throw std::invalid_argument("bad rational literal: " + input);
    }

    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = (body[0] == '-');
        body = body.substr(1);
    }

    std::string int_part = body, frac_part;
    if (auto dot = body.find('.'); dot != std::string::npos) {
        int_part = body.substr(0, dot);
        frac_part = body.substr(dot + 1);
    }
    if (int_part.empty()) int_part = "0";
    if (!all_digits(int_part) || (!frac_part.empty() && !all_digits(frac_part)))
        throw std::invalid_argument("bad rational literal: " + input);

    mpz_class mantissa(int_part + frac_part, 10);
    if (negative) mantissa = -mantissa;
    long shift = exp10 - static_cast<long>(frac_part.size());

    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
    Rat r = (shift >= 0) ? Rat(mantissa * pow10) : Rat(mantissa, pow10);
    r.canonicalize();
    return r;
}

Rat rat_from_double(double d) {
    if (!std::isfinite(d)) throw std::invalid_argument("non-finite double");
    Rat r(d);  // mpq_set_d is exact for finite doubles
    r.canonicalize();
    return r;
}

double to_double(const Rat& r) { return r.get_d(); }

std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace crosscycle
