#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace affdim {

/// Arbitrary-precision real number.  A thin RAII wrapper over an mpfr_t
/// with an explicit precision in bits; every operation rounds to nearest
/// at the precision of its widest operand.
class BigReal {
public:
    BigReal() { mpfr_init2(v_, 64); }
    explicit BigReal(long prec_bits) { mpfr_init2(v_, clamp(prec_bits)); }

    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal from_long(long x, long prec) {
        BigReal r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigReal from_double(double x, long prec) {
        BigReal r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigReal from_rational(const mpq_class& q, long prec) {
        BigReal r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    // Accepts the usual decimal forms, e.g. "1e-40" or "1.5".
    static BigReal from_string(const std::string& s, long prec);

    long precision_bits() const { return mpfr_get_prec(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    int cmp(const BigReal& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp_si(long x) const { return mpfr_cmp_si(v_, x); }

    /// Decimal rendering with the given number of significant digits,
    /// deterministic across runs (round to nearest).
    std::string str(int sig_digits = 40) const;

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a) {
        BigReal r(mpfr_get_prec(a.v_));
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    BigReal& operator+=(const BigReal& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator-=(const BigReal& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator*=(const BigReal& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator/=(const BigReal& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend bool operator<(const BigReal& a, const BigReal& b) { return a.cmp(b) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return a.cmp(b) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return a.cmp(b) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return a.cmp(b) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }

    friend BigReal abs(const BigReal& a) {
        BigReal r(mpfr_get_prec(a.v_));
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal sqrt(const BigReal& a) {
        BigReal r(mpfr_get_prec(a.v_));
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal exp(const BigReal& a) {
        BigReal r(mpfr_get_prec(a.v_));
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal log(const BigReal& a) {
        BigReal r(mpfr_get_prec(a.v_));
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal pow(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal pow_si(const BigReal& a, long e) {
        BigReal r(mpfr_get_prec(a.v_));
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend BigReal hypot(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal max(const BigReal& a, const BigReal& b) { return a.cmp(b) >= 0 ? a : b; }
    friend BigReal min(const BigReal& a, const BigReal& b) { return a.cmp(b) <= 0 ? a : b; }

    /// 2^e at this value's precision.
    static BigReal pow2(long e, long prec) {
        BigReal r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

private:
    static long clamp(long p) { return p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p; }
    static long join(const BigReal& a, const BigReal& b) {
        long pa = mpfr_get_prec(a.v_), pb = mpfr_get_prec(b.v_);
        return pa > pb ? pa : pb;
    }
    mpfr_t v_;
};

/// Complex number with BigReal components, used by the root isolator.
struct BigComplex {
    BigReal re, im;

    BigComplex() = default;
    explicit BigComplex(long prec) : re(prec), im(prec) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigReal abs(const BigComplex& a) { return hypot(a.re, a.im); }
    BigComplex conj() const { return {re, -im}; }
};

}  // namespace affdim
