#include "affdim/rational.hpp"

#include <cctype>

#include "affdim/errors.hpp"

namespace affdim {

Rational rational_from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    }
    if (t.empty()) throw ConfigError("empty rational literal");
    auto valid = [](const std::string& x) {
        if (x.empty()) return false;
        size_t i = (x[0] == '-' || x[0] == '+') ? 1 : 0;
        if (i == x.size()) return false;
        for (; i < x.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
        }
        return true;
    };
    size_t slash = t.find('/');
    std::string num = slash == std::string::npos ? t : t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid(num) || !valid(den)) {
        throw ConfigError("malformed rational literal: '" + s + "'");
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) {
        throw ConfigError("malformed rational literal: '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
        throw ConfigError("zero denominator in rational literal: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long rational_bits(const Rational& q) {
    size_t nb = mpz_sizeinbase(mpq_numref(q.get_mpq_t()), 2);
    size_t db = mpz_sizeinbase(mpq_denref(q.get_mpq_t()), 2);
    return static_cast<long>(nb > db ? nb : db);
}

Rational dyadic_round(const Rational& q, long bits) {
    if (q == 0) return q;
    mpfr_t t;
    mpfr_init2(t, bits);
    mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
    mpq_t out;
    mpq_init(out);
    mpfr_get_q(out, t);
    Rational r(out);
    mpq_clear(out);
    mpfr_clear(t);
    return r;
}

}  // namespace affdim
