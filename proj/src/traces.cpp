#include "affdim/traces.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "affdim/errors.hpp"
#include "affdim/spectral.hpp"

namespace affdim {

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::string word_str(const Word& w) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < w.length(); ++i) {
        if (i) os << " ";
        os << static_cast<int>(w.letters[static_cast<size_t>(i)]) + 1;
    }
    os << ")";
    return os.str();
}

// s-independent eigen-data of one rotation class
struct ClassTerm {
    long size = 1;
    BigReal prefactor;
    BigReal log_rho_k;
    BigReal log_rho_k1;
};

BigReal term_value(const ClassTerm& c, const BigReal& k_lo, const BigReal& k_hi,
                   const BigReal& s) {
    // prefactor * exp((k+1-s) log rho_k + (s-k) log rho_{k+1})
    BigReal e = (k_hi - s) * c.log_rho_k + (s - k_lo) * c.log_rho_k1;
    return c.prefactor * exp(e);
}

void run_parallel(int threads, size_t count, const std::function<void(size_t)>& body) {
    if (threads <= 1 || count < 2) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int nt = std::min<int>(threads, static_cast<int>(count));
    pool.reserve(static_cast<size_t>(nt));
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace

long default_trace_precision(const std::vector<RationalMatrix>& matrices, int n_max) {
    double maxnorm = 0;
    for (const auto& m : matrices) maxnorm = std::max(maxnorm, m.frobenius_norm_double());
    double bits = 64.0 + std::ceil(8.0 * n_max * std::log2(1.0 + maxnorm));
    return std::max(256L, static_cast<long>(bits));
}

BigReal trace_term_for_product(const RationalMatrix& product, int k, const BigReal& s,
                               long prec) {
    int d = product.dim();
    LeadingEigen lo = leading_eigen(wedge_power(product, k), prec);
    LeadingEigen hi = leading_eigen(wedge_power(product, k + 1), prec);
    long a = binom(d, k) - 1;
    long b = binom(d, k + 1) - 1;
    BigReal num = pow_si(lo.lambda1, a) * pow_si(hi.lambda1, b);
    BigReal kk = BigReal::from_long(k, prec);
    BigReal k1 = BigReal::from_long(k + 1, prec);
    num *= pow(lo.rho, k1 - s);
    num *= pow(hi.rho, s - kk);
    return num / (lo.p_prime_at_lambda1 * hi.p_prime_at_lambda1);
}

namespace {

RationalMatrix word_product(const Word& w, const std::vector<RationalMatrix>& mats,
                            long budget) {
    // A_i := A_{i_n} ... A_{i_1}
    int n = w.length();
    RationalMatrix prod = mats[w.letters[static_cast<size_t>(n - 1)]];
    for (int t = n - 2; t >= 0; --t) {
        prod = prod * mats[w.letters[static_cast<size_t>(t)]];
        if (prod.max_entry_bits() > budget) prod = prod.dyadic_rounded(budget);
    }
    return prod;
}

}  // namespace

BigReal trace_term(const Word& word, const std::vector<RationalMatrix>& matrices, int k,
                   const BigReal& s, long prec) {
    try {
        return trace_term_for_product(word_product(word, matrices, 1L << 20), k, s, prec);
    } catch (const DominanceUnverified& e) {
        throw DominanceUnverified(std::string(e.what()) + " at word " + word_str(word));
    } catch (const DegenerateProduct& e) {
        throw DegenerateProduct(std::string(e.what()) + " at word " + word_str(word));
    }
}

struct TraceEngine::Impl {
    std::vector<RationalMatrix> mats;
    int k = 0;
    int d = 0;
    long prec = 256;
    ReductionMode mode = ReductionMode::Necklace;
    int threads = 1;
    long budget = 4096;
    long a_exp = 0, b_exp = 0;

    std::vector<std::vector<ClassTerm>> per_n;  // per_n[n-1]
    int verified_up_to = 0;

    ClassTerm compute_class(const NecklaceClass& nc, long p) const {
        try {
            RationalMatrix prod = word_product(nc.representative, mats, budget);
            LeadingEigen lo = leading_eigen(wedge_power(prod, k), p);
            LeadingEigen hi = leading_eigen(wedge_power(prod, k + 1), p);
            ClassTerm c;
            c.size = nc.class_size;
            c.prefactor = pow_si(lo.lambda1, a_exp) * pow_si(hi.lambda1, b_exp) /
                          (lo.p_prime_at_lambda1 * hi.p_prime_at_lambda1);
            c.log_rho_k = log(lo.rho);
            c.log_rho_k1 = log(hi.rho);
            return c;
        } catch (const DominanceUnverified& e) {
            throw DominanceUnverified(std::string(e.what()) + " at word " +
                                      word_str(nc.representative));
        } catch (const DegenerateProduct& e) {
            throw DegenerateProduct(std::string(e.what()) + " at word " +
                                    word_str(nc.representative));
        }
    }

    std::vector<ClassTerm> build_length(int n, long p) const {
        auto classes = mode == ReductionMode::Necklace
                           ? enumerate_necklaces(static_cast<int>(mats.size()), n)
                           : enumerate_all_words(static_cast<int>(mats.size()), n);
        std::vector<ClassTerm> out(classes.size());
        run_parallel(threads, classes.size(),
                     [&](size_t i) { out[i] = compute_class(classes[i], p); });
        return out;
    }

    BigReal trace_at(const std::vector<ClassTerm>& classes, const BigReal& s, long p) const {
        BigReal k_lo = BigReal::from_long(k, p);
        BigReal k_hi = BigReal::from_long(k + 1, p);
        constexpr size_t kChunk = 256;
        size_t nchunks = (classes.size() + kChunk - 1) / kChunk;
        std::vector<BigReal> partial(nchunks, BigReal(p));
        run_parallel(threads, nchunks, [&](size_t ci) {
            BigReal acc = BigReal::from_long(0, p);
            size_t lo = ci * kChunk, hi = std::min(classes.size(), lo + kChunk);
            for (size_t i = lo; i < hi; ++i) {
                BigReal v = term_value(classes[i], k_lo, k_hi, s);
                if (classes[i].size != 1) v *= BigReal::from_long(classes[i].size, p);
                acc += v;
            }
            partial[ci] = std::move(acc);
        });
        BigReal total = BigReal::from_long(0, p);
        for (const auto& x : partial) total += x;  // fixed order, thread-count independent
        return total;
    }
};

TraceEngine::TraceEngine(std::vector<RationalMatrix> matrices, int k, long prec,
                         ReductionMode mode, int threads, long entry_bit_budget)
    : impl_(std::make_unique<Impl>()) {
    if (matrices.empty()) throw DimensionMismatch("empty matrix tuple");
    impl_->d = matrices[0].dim();
    for (const auto& m : matrices) {
        if (m.dim() != impl_->d) throw DimensionMismatch("mixed matrix dimensions");
    }
    if (k < 0 || k + 1 > impl_->d) throw DimensionMismatch("wedge order out of [0, dim-1]");
    impl_->mats = std::move(matrices);
    impl_->k = k;
    impl_->prec = std::max(prec, 64L);
    impl_->mode = mode;
    impl_->threads = std::max(threads, 1);
    impl_->budget = std::max(entry_bit_budget, 64L);
    impl_->a_exp = binom(impl_->d, k) - 1;
    impl_->b_exp = binom(impl_->d, k + 1) - 1;
}

TraceEngine::~TraceEngine() = default;

void TraceEngine::ensure(int n_max) {
    auto& im = *impl_;
    while (static_cast<int>(im.per_n.size()) < n_max) {
        int n = static_cast<int>(im.per_n.size()) + 1;
        im.per_n.push_back(im.build_length(n, im.prec));
    }
    if (n_max < 2 || im.verified_up_to >= n_max) return;

    // Cancellation-driven escalation: recompute the two highest traces at
    // doubled precision and require relative agreement to 2^-(prec/4).
    while (true) {
        BigReal s_ref = BigReal::from_long(im.k, im.prec) +
                        BigReal::from_double(0.5, im.prec);
        bool ok = true;
        for (int n = n_max - 1; n <= n_max; ++n) {
            auto shadow = im.build_length(n, 2 * im.prec);
            BigReal s_hi = BigReal::from_long(im.k, 2 * im.prec) +
                           BigReal::from_double(0.5, 2 * im.prec);
            BigReal base = im.trace_at(im.per_n[static_cast<size_t>(n - 1)], s_ref, im.prec);
            BigReal fine = im.trace_at(shadow, s_hi, 2 * im.prec);
            BigReal denom = max(abs(fine), BigReal::pow2(-im.prec, im.prec));
            if (!(abs(base - fine) / denom <= BigReal::pow2(-(im.prec / 4), im.prec))) {
                ok = false;
                break;
            }
        }
        if (ok) break;
        if (im.prec * 2 > 16384) {
            throw PrecisionInsufficient("trace verification still unstable at 16384 bits");
        }
        im.prec *= 2;
        im.per_n.clear();
        for (int n = 1; n <= n_max; ++n) im.per_n.push_back(im.build_length(n, im.prec));
    }
    im.verified_up_to = n_max;
}

BigReal TraceEngine::trace(int n, const BigReal& s) const {
    const auto& im = *impl_;
    if (n < 1 || n > static_cast<int>(im.per_n.size())) {
        throw Error("trace length not built; call ensure() first");
    }
    BigReal sw(im.prec);
    mpfr_set(sw.raw(), s.raw(), MPFR_RNDN);
    return im.trace_at(im.per_n[static_cast<size_t>(n - 1)], sw, im.prec);
}

TraceTable TraceEngine::table(const BigReal& s, int n_max) {
    ensure(n_max);
    TraceTable t;
    t.s = s;
    t.k = impl_->k;
    t.n_max = n_max;
    t.precision_bits = impl_->prec;
    t.reduction_mode = impl_->mode;
    t.values.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) t.values.push_back(trace(n, s));
    return t;
}

long TraceEngine::precision() const { return impl_->prec; }
int TraceEngine::k() const { return impl_->k; }
int TraceEngine::alphabet_size() const { return static_cast<int>(impl_->mats.size()); }
const std::vector<RationalMatrix>& TraceEngine::matrices() const { return impl_->mats; }

}  // namespace affdim
