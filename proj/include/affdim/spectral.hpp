#pragma once

#include <vector>

#include "affdim/bigreal.hpp"
#include "affdim/matrix.hpp"
#include "affdim/polynomial.hpp"

namespace affdim {

/// Certified enclosure of one distinct polynomial root: the true root lies
/// within `radius` of `center`, the disk contains no other root, and the
/// root has the stated multiplicity in the original polynomial.
struct RootEnclosure {
    BigComplex center;
    BigReal radius;
    int multiplicity = 1;
};

/// Isolates every distinct complex root of an exact rational polynomial
/// into pairwise disjoint certified disks with relative radius at most
/// 2^-prec.  Internally: exact squarefree decomposition, then simultaneous
/// (Aberth) iteration per factor with a posteriori disk certificates,
/// escalating the working precision up to three doublings.
/// Throws PrecisionInsufficient if isolation fails at the final precision.
std::vector<RootEnclosure> isolate_roots(const RationalPolynomial& p, long prec);

/// Certified leading-eigenvalue data of Theorem-style trace formulas:
/// the unique dominant eigenvalue, verified real and simple, together
/// with a positive lower bound on the modulus gap to the rest of the
/// spectrum and the derivative of the characteristic polynomial there.
struct LeadingEigen {
    BigReal lambda1;            // signed dominant eigenvalue
    BigReal rho;                // |lambda1|
    BigReal dominance_gap;      // |lambda1| - max_{j>=2} |lambda_j|, lower bound
    BigReal p_prime_at_lambda1; // p'_B(lambda1)
};

LeadingEigen leading_eigen(const RationalMatrix& b, long prec);
LeadingEigen leading_eigen(const RationalPolynomial& p, long prec);

/// Certified spectral radius (max root modulus of the characteristic
/// polynomial) to relative accuracy 2^-prec.
BigReal spectral_radius(const RationalMatrix& b, long prec);

/// All singular values in decreasing order, with multiplicity, each
/// accurate to roughly 2^-prec relative (square roots of the certified
/// eigenvalues of A^T A).
std::vector<BigReal> singular_values(const RationalMatrix& a, long prec);

/// Falconer's singular value function: sigma_1...sigma_floor(s) *
/// sigma_ceil(s)^(s - floor(s)) for 0 <= s <= dim, |det A|^(s/dim) above.
BigReal phi_s(const RationalMatrix& a, const BigReal& s);

}  // namespace affdim
