#pragma once

#include <vector>

#include "affdim/bigreal.hpp"
#include "affdim/rational.hpp"

namespace affdim {

/// Univariate polynomial with exact rational coefficients, constant term
/// first.  The zero polynomial has an empty coefficient list.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& leading() const { return c_.back(); }
    const Rational& operator[](size_t i) const { return c_[i]; }

    Rational eval(const Rational& x) const;
    RationalPolynomial derivative() const;
    RationalPolynomial monic() const;

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.c_ == b.c_;
    }

    /// Exact Euclidean division; returns {quotient, remainder}.
    static std::pair<RationalPolynomial, RationalPolynomial> divmod(
        const RationalPolynomial& a, const RationalPolynomial& b);

    /// Exact quotient; throws if the division has a remainder.
    static RationalPolynomial divexact(const RationalPolynomial& a, const RationalPolynomial& b);

    /// Monic gcd via the Euclidean algorithm.
    static RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

    /// Yun's squarefree decomposition: result[i] is the monic squarefree
    /// factor whose roots have multiplicity i+1 in *this (may be 1).
    std::vector<RationalPolynomial> squarefree_decomposition() const;

    /// Number of trailing zero coefficients, i.e. the multiplicity of the
    /// root at zero.
    int zero_root_multiplicity() const;
    RationalPolynomial strip_zero_roots() const;

    /// Coefficients rounded to BigReal at the given precision.
    std::vector<BigReal> coeffs_bigreal(long prec) const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Horner evaluation of a BigReal-coefficient polynomial.
BigReal horner(const std::vector<BigReal>& c, const BigReal& x);
BigComplex horner(const std::vector<BigReal>& c, const BigComplex& x);

/// Horner evaluation of sum |c_i| |x|^i, used for rounding-error bounds.
BigReal horner_abs(const std::vector<BigReal>& c, const BigReal& abs_x);

}  // namespace affdim
