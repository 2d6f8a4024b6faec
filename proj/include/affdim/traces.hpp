#pragma once

#include <memory>
#include <vector>

#include "affdim/bigreal.hpp"
#include "affdim/matrix.hpp"
#include "affdim/words.hpp"

namespace affdim {

enum class ReductionMode { Full, Necklace };

/// Trace values t_1(s), ..., t_{n_max}(s) of the transfer operator at a
/// fixed s, with the parameters used to produce them.
struct TraceTable {
    BigReal s;
    int k = 0;
    int n_max = 0;
    std::vector<BigReal> values;  // values[i] = t_{i+1}(s)
    long precision_bits = 0;
    ReductionMode reduction_mode = ReductionMode::Necklace;

    const BigReal& t(int n) const { return values[static_cast<size_t>(n - 1)]; }
};

/// The spec's working-precision policy for a trace computation.
long default_trace_precision(const std::vector<RationalMatrix>& matrices, int n_max);

/// Single-word trace summand (the s-dependent part is the two real-power
/// factors; everything else is leading-eigenvalue data of the word
/// product's wedge powers).
BigReal trace_term(const Word& word, const std::vector<RationalMatrix>& matrices, int k,
                   const BigReal& s, long prec);
/// Same summand for an already-formed word product.
BigReal trace_term_for_product(const RationalMatrix& product, int k, const BigReal& s, long prec);

/// Computes and caches the s-independent eigen-data of every rotation
/// class, per word length; trace evaluation at any s is then two
/// exponentials per class.  Deterministic regardless of thread count:
/// class data lives in rank order and sums run chunk by chunk.
class TraceEngine {
public:
    TraceEngine(std::vector<RationalMatrix> matrices, int k, long prec, ReductionMode mode,
                int threads = 1, long entry_bit_budget = 4096);
    ~TraceEngine();
    TraceEngine(const TraceEngine&) = delete;
    TraceEngine& operator=(const TraceEngine&) = delete;

    /// Builds class data for all lengths up to n_max, verifying the top
    /// two lengths against a double-precision recomputation and doubling
    /// the working precision on disagreement (cap 16384 bits).
    void ensure(int n_max);

    BigReal trace(int n, const BigReal& s) const;
    TraceTable table(const BigReal& s, int n_max);

    long precision() const;
    int k() const;
    int alphabet_size() const;
    const std::vector<RationalMatrix>& matrices() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace affdim
