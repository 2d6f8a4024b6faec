#pragma once

#include <vector>

#include "affdim/traces.hpp"

namespace affdim {

/// Truncated Fredholm-determinant coefficients a_0(s), ..., a_n(s).
struct CoefficientSeries {
    BigReal s;
    std::vector<BigReal> coeffs;  // coeffs[n] = a_n(s); coeffs[0] = 1 exactly
    long precision_bits = 0;
    int k = 0;
    ReductionMode reduction_mode = ReductionMode::Necklace;
    // Cancellation monitor: coefficient flagged when the largest partial
    // sum exceeded |a_n| by more than 2^(prec/4).
    std::vector<bool> precision_limited;
};

/// Newton-identity recursion n a_n = -sum_{m=1..n} t_m a_{n-m}.
CoefficientSeries coefficients(const TraceTable& traces);

/// Literal n x n determinant form of a_n, kept as an independent oracle
/// for the recursion (cost guard n <= 8).
BigReal coefficients_by_determinant(const TraceTable& traces, int n);

}  // namespace affdim
