#include "affdim/bigreal.hpp"

#include <cstring>
#include <stdexcept>

namespace affdim {

BigReal BigReal::from_string(const std::string& s, long prec) {
    BigReal r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
        throw std::invalid_argument("not a decimal number: '" + s + "'");
    }
    return r;
}

std::string BigReal::str(int sig_digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";
    if (sig_digits < 2) sig_digits = 2;

    mpfr_exp_t e = 0;
    char* digits = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig_digits), v_, MPFR_RNDN);
    std::string d(digits);
    mpfr_free_str(digits);

    std::string sign;
    if (!d.empty() && d[0] == '-') {
        sign = "-";
        d.erase(0, 1);
    }
    // mpfr convention: value = 0.d * 10^e
    std::string out;
    if (e < -6 || e > sig_digits + 6) {
        out = d.substr(0, 1) + "." + d.substr(1) + "e" + std::to_string(e - 1);
    } else if (e <= 0) {
        out = "0." + std::string(static_cast<size_t>(-e), '0') + d;
    } else if (static_cast<size_t>(e) >= d.size()) {
        out = d + std::string(static_cast<size_t>(e) - d.size(), '0');
    } else {
        out = d.substr(0, static_cast<size_t>(e)) + "." + d.substr(static_cast<size_t>(e));
    }
    return sign + out;
}

}  // namespace affdim
