#include "affdim/polynomial.hpp"

#include <stdexcept>

#include "affdim/errors.hpp"

namespace affdim {

Rational RationalPolynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
    if (is_zero()) return {};
    std::vector<Rational> d(c_);
    Rational lead = d.back();
    for (auto& x : d) x /= lead;
    return RationalPolynomial(std::move(d));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return RationalPolynomial(std::move(r));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return RationalPolynomial(std::move(r));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return RationalPolynomial(std::move(r));
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& a, const RationalPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> rem(a.c_);
    int db = b.degree();
    if (a.degree() < db) return {RationalPolynomial{}, a};
    std::vector<Rational> quot(a.c_.size() - b.c_.size() + 1, Rational(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        if (rem[static_cast<size_t>(i)] == 0) continue;
        Rational f = rem[static_cast<size_t>(i)] / b.leading();
        quot[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<size_t>(i - db + j)] -= f * b.c_[static_cast<size_t>(j)];
        }
    }
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial RationalPolynomial::divexact(const RationalPolynomial& a,
                                                const RationalPolynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

RationalPolynomial RationalPolynomial::gcd(const RationalPolynomial& a,
                                           const RationalPolynomial& b) {
    RationalPolynomial x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::vector<RationalPolynomial> RationalPolynomial::squarefree_decomposition() const {
    std::vector<RationalPolynomial> out;
    if (degree() <= 0) return out;
    RationalPolynomial f = monic();
    RationalPolynomial fp = f.derivative();
    RationalPolynomial a0 = gcd(f, fp);
    if (a0.degree() == 0) {
        out.push_back(f);
        return out;
    }
    RationalPolynomial b = divexact(f, a0);
    RationalPolynomial c = divexact(fp, a0);
    RationalPolynomial d = c - b.derivative();
    while (b.degree() > 0) {
        RationalPolynomial ai = gcd(b, d);
        out.push_back(ai.monic());
        b = divexact(b, ai);
        c = divexact(d, ai);
        d = c - b.derivative();
    }
    return out;
}

int RationalPolynomial::zero_root_multiplicity() const {
    if (is_zero()) return 0;
    int m = 0;
    while (m < static_cast<int>(c_.size()) && c_[static_cast<size_t>(m)] == 0) ++m;
    return m;
}

RationalPolynomial RationalPolynomial::strip_zero_roots() const {
    int m = zero_root_multiplicity();
    if (m == 0) return *this;
    return RationalPolynomial(std::vector<Rational>(c_.begin() + m, c_.end()));
}

std::vector<BigReal> RationalPolynomial::coeffs_bigreal(long prec) const {
    std::vector<BigReal> out;
    out.reserve(c_.size());
    for (const auto& q : c_) out.push_back(to_bigreal(q, prec));
    return out;
}

BigReal horner(const std::vector<BigReal>& c, const BigReal& x) {
    long prec = x.precision_bits();
    BigReal acc = BigReal::from_long(0, prec);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

BigComplex horner(const std::vector<BigReal>& c, const BigComplex& x) {
    long prec = x.re.precision_bits();
    BigComplex acc(prec);
    acc.re = BigReal::from_long(0, prec);
    acc.im = BigReal::from_long(0, prec);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x;
        acc.re += *it;
    }
    return acc;
}

BigReal horner_abs(const std::vector<BigReal>& c, const BigReal& abs_x) {
    long prec = abs_x.precision_bits();
    BigReal acc = BigReal::from_long(0, prec);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= abs_x;
        acc += abs(*it);
    }
    return acc;
}

}  // namespace affdim
