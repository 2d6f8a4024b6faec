#pragma once

#include <vector>

#include "affdim/polynomial.hpp"
#include "affdim/rational.hpp"

namespace affdim {

/// Square matrix with exact rational entries.  Immutable in spirit: all
/// operations return new values, multiplication is exact.
class RationalMatrix {
public:
    explicit RationalMatrix(int dim) : d_(dim), e_(static_cast<size_t>(dim) * dim, Rational(0)) {}

    static RationalMatrix identity(int dim) {
        RationalMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }

    int dim() const { return d_; }
    Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * d_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * d_ + j]; }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-() const;
    RationalMatrix scaled(const Rational& c) const;
    bool operator==(const RationalMatrix& o) const { return d_ == o.d_ && e_ == o.e_; }

    Rational trace() const;
    bool is_zero() const;

    /// Entrywise sign survey: +1 if all entries > 0, -1 if all < 0,
    /// 0 otherwise.
    int uniform_strict_sign() const;
    /// True if every entry is >= 0.
    bool is_nonnegative() const;

    /// Largest bit size over all entries (max of numerator/denominator).
    long max_entry_bits() const;
    /// Entrywise dyadic rounding to the given significand size.
    RationalMatrix dyadic_rounded(long bits) const;

    double frobenius_norm_double() const;

private:
    int d_;
    std::vector<Rational> e_;
};

/// Exact determinant by fraction Gaussian elimination.
Rational exact_det(const RationalMatrix& m);

/// k-th compound (exterior power) matrix: entries are the k x k minors of
/// `a`, with row and column index subsets in lexicographic order.  k = 0
/// gives the 1 x 1 matrix [1]; k = dim gives [det a].
RationalMatrix wedge_power(const RationalMatrix& a, int k);

/// Exact monic characteristic polynomial det(xI - B), by the
/// Faddeev-LeVerrier recursion over the rationals.
RationalPolynomial char_poly(const RationalMatrix& b);

/// Lexicographically ordered k-subsets of {0,...,d-1}.
std::vector<std::vector<int>> index_subsets(int d, int k);

}  // namespace affdim
