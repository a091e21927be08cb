#include "spda/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace spda {

Int binomial(long n, long k) {
    if (n < 0) {
        throw std::domain_error("binomial: n must be non-negative");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

int64_t binomial64(int n, int k) {
    return to_int64(binomial(n, k));
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::domain_error("make_rat: zero denominator");
    }
    Rat r(num);
    r /= Rat(den);
    return r;
}

std::string decimal_string(const Rat& value, int places) {
    if (places < 0) {
        throw std::invalid_argument("decimal_string: places must be >= 0");
    }
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    Int num = value.get_num() * scale;
    Int den = value.get_den();
    bool negative = num < 0;
    if (negative) {
        num = -num;
    }
    // round half away from zero: floor((2*num + den) / (2*den))
    Int scaled = (2 * num + den) / (2 * den);
    Int whole = scaled / scale;
    Int frac = scaled % scale;
    std::string out = negative && scaled != 0 ? "-" : "";
    out += whole.get_str();
    if (places > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(places - f.size(), '0') + f;
    }
    return out;
}

Int ceil_rat(const Rat& value) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(),
               value.get_den().get_mpz_t());
    return q;
}

int64_t to_int64(const Int& value) {
    if (!value.fits_slong_p()) {
        throw std::overflow_error("to_int64: value out of range");
    }
    return static_cast<int64_t>(value.get_si());
}

double log10_int(const Int& value) {
    if (value <= 0) {
        throw std::domain_error("log10_int: value must be positive");
    }
    signed long exp2 = 0;
    double mantissa = mpz_get_d_2exp(&exp2, value.get_mpz_t());
    return std::log10(mantissa) + static_cast<double>(exp2) * std::log10(2.0);
}

} // namespace spda
