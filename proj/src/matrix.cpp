#include "affdim/matrix.hpp"

#include <cmath>

#include "affdim/errors.hpp"

namespace affdim {

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(d_);
    for (int i = 0; i < d_; ++i) {
        for (int j = 0; j < d_; ++j) r.at(j, i) = at(i, j);
    }
    return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (d_ != o.d_) throw DimensionMismatch("matrix product dimension mismatch");
    RationalMatrix r(d_);
    Rational acc;
    for (int i = 0; i < d_; ++i) {
        for (int j = 0; j < d_; ++j) {
            acc = 0;
            for (int l = 0; l < d_; ++l) acc += at(i, l) * o.at(l, j);
            r.at(i, j) = acc;
        }
    }
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (d_ != o.d_) throw DimensionMismatch("matrix sum dimension mismatch");
    RationalMatrix r(d_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix r(d_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix r(d_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (int i = 0; i < d_; ++i) t += at(i, i);
    return t;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : e_) {
        if (x != 0) return false;
    }
    return true;
}

int RationalMatrix::uniform_strict_sign() const {
    int s = sgn(e_[0]);
    if (s == 0) return 0;
    for (const auto& x : e_) {
        if (sgn(x) != s) return 0;
    }
    return s;
}

bool RationalMatrix::is_nonnegative() const {
    for (const auto& x : e_) {
        if (x < 0) return false;
    }
    return true;
}

long RationalMatrix::max_entry_bits() const {
    long m = 1;
    for (const auto& x : e_) m = std::max(m, rational_bits(x));
    return m;
}

RationalMatrix RationalMatrix::dyadic_rounded(long bits) const {
    RationalMatrix r(d_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = dyadic_round(e_[i], bits);
    return r;
}

double RationalMatrix::frobenius_norm_double() const {
    double s = 0;
    for (const auto& x : e_) {
        double v = x.get_d();
        s += v * v;
    }
    return std::sqrt(s);
}

Rational exact_det(const RationalMatrix& m) {
    int d = m.dim();
    if (d == 1) return m.at(0, 0);
    if (d == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    // Gaussian elimination with exact rational pivoting.
    std::vector<std::vector<Rational>> a(static_cast<size_t>(d), std::vector<Rational>(d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
    }
    Rational det = 1;
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = col; r < d; ++r) {
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(col)]);
            det = -det;
        }
        const Rational& p = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= p;
        for (int r = col + 1; r < d; ++r) {
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
            Rational f = a[static_cast<size_t>(r)][static_cast<size_t>(col)] / p;
            for (int cc = col; cc < d; ++cc) {
                a[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
                    f * a[static_cast<size_t>(col)][static_cast<size_t>(cc)];
            }
        }
    }
    return det;
}

std::vector<std::vector<int>> index_subsets(int d, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(k));
    // iterative lexicographic enumeration
    if (k == 0) {
        out.push_back({});
        return out;
    }
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == d - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

RationalMatrix wedge_power(const RationalMatrix& a, int k) {
    int d = a.dim();
    if (k < 0 || k > d) throw DimensionMismatch("wedge power order out of [0, dim]");
    if (k == 0) {
        RationalMatrix r(1);
        r.at(0, 0) = 1;
        return r;
    }
    if (k == 1) return a;
    auto subsets = index_subsets(d, k);
    int n = static_cast<int>(subsets.size());
    RationalMatrix r(n);
    RationalMatrix minor(k);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int r1 = 0; r1 < k; ++r1) {
                for (int c1 = 0; c1 < k; ++c1) {
                    minor.at(r1, c1) = a.at(subsets[static_cast<size_t>(i)][static_cast<size_t>(r1)],
                                            subsets[static_cast<size_t>(j)][static_cast<size_t>(c1)]);
                }
            }
            r.at(i, j) = exact_det(minor);
        }
    }
    return r;
}

RationalPolynomial char_poly(const RationalMatrix& b) {
    int d = b.dim();
    // Faddeev-LeVerrier: M_1 = B, c_{d-1} = -tr M_1,
    // M_j = B (M_{j-1} + c_{d-j+1} I), c_{d-j} = -tr(M_j) / j.
    std::vector<Rational> c(static_cast<size_t>(d) + 1, Rational(0));
    c[static_cast<size_t>(d)] = 1;
    RationalMatrix m = b;
    c[static_cast<size_t>(d - 1)] = -m.trace();
    for (int j = 2; j <= d; ++j) {
        RationalMatrix t = m;
        for (int i = 0; i < d; ++i) t.at(i, i) += c[static_cast<size_t>(d - j + 1)];
        m = b * t;
        c[static_cast<size_t>(d - j)] = -m.trace() / j;
    }
    return RationalPolynomial(std::move(c));
}

}  // namespace affdim
