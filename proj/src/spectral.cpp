#include "affdim/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "affdim/errors.hpp"

namespace affdim {

namespace {

// Simultaneous root iteration (Aberth-Ehrlich) on a monic squarefree
// factor with coefficients already rounded to the working precision.
std::vector<BigComplex> aberth(const std::vector<BigReal>& c, long wprec) {
    int n = static_cast<int>(c.size()) - 1;
    BigReal rb = BigReal::from_long(0, wprec);
    for (int i = 0; i < n; ++i) rb = max(rb, abs(c[static_cast<size_t>(i)]));
    rb = rb + BigReal::from_long(1, wprec);  // Cauchy bound for monic input

    std::vector<BigComplex> z;
    z.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        double th = 2.0 * 3.14159265358979323846 * j / n + 0.4361;
        double rj = 0.4 + 0.5 * (j + 1.0) / n;
        BigReal m = BigReal::from_double(rj, wprec) * rb;
        z.push_back({m * BigReal::from_double(std::cos(th), wprec),
                     m * BigReal::from_double(std::sin(th), wprec)});
    }

    std::vector<BigReal> dc(c.size() > 1 ? c.size() - 1 : 0, BigReal(wprec));
    for (size_t i = 1; i < c.size(); ++i) {
        dc[i - 1] = c[i] * BigReal::from_long(static_cast<long>(i), wprec);
    }

    const BigReal stop = BigReal::pow2(-(wprec - 12), wprec);
    const BigReal tiny = BigReal::pow2(-wprec * 2, wprec);
    int max_iters = 80 + 40 * n;
    BigReal best_maxrel = BigReal::from_long(1, wprec);
    int stagnant = 0;
    for (int iter = 0; iter < max_iters; ++iter) {
        BigReal maxrel = BigReal::from_long(0, wprec);
        for (int j = 0; j < n; ++j) {
            BigComplex pj = horner(c, z[static_cast<size_t>(j)]);
            BigComplex dj = horner(dc, z[static_cast<size_t>(j)]);
            if (abs(dj).is_zero()) {
                // nudge off a critical point
                z[static_cast<size_t>(j)].re += stop;
                continue;
            }
            BigComplex nr = pj / dj;
            BigComplex s(wprec);
            s.re = BigReal::from_long(0, wprec);
            s.im = BigReal::from_long(0, wprec);
            for (int l = 0; l < n; ++l) {
                if (l == j) continue;
                BigComplex diff = z[static_cast<size_t>(j)] - z[static_cast<size_t>(l)];
                if (abs(diff).is_zero()) {
                    diff.re += stop;
                }
                BigComplex one{BigReal::from_long(1, wprec), BigReal::from_long(0, wprec)};
                s = s + one / diff;
            }
            BigComplex one{BigReal::from_long(1, wprec), BigReal::from_long(0, wprec)};
            BigComplex denom = one - nr * s;
            BigComplex w = abs(denom).is_zero() ? nr : nr / denom;
            z[static_cast<size_t>(j)] = z[static_cast<size_t>(j)] - w;
            BigReal rel = abs(w) / max(abs(z[static_cast<size_t>(j)]), tiny);
            maxrel = max(maxrel, rel);
        }
        if (maxrel < stop) break;
        if (maxrel * BigReal::from_long(2, wprec) < best_maxrel) {
            best_maxrel = maxrel;
            stagnant = 0;
        } else if (++stagnant > 24) {
            break;
        }
    }
    return z;
}

struct EvalBound {
    BigReal value_abs;  // |p(z)| upper bound
    BigReal deriv_abs;  // |p'(z)| lower bound (may be <= 0 if unusable)
};

EvalBound eval_with_bounds(const std::vector<BigReal>& c, const std::vector<BigReal>& dc,
                           const BigComplex& z, long wprec) {
    BigReal az = abs(z);
    BigReal gamma = BigReal::pow2(-wprec + 5, wprec) * BigReal::from_long(static_cast<long>(c.size()), wprec);
    BigComplex pv = horner(c, z);
    BigComplex dv = horner(dc, z);
    BigReal perr = gamma * horner_abs(c, az);
    BigReal derr = gamma * horner_abs(dc, az);
    return {abs(pv) + perr, abs(dv) - derr};
}

// Newton-polishes z toward the nearby simple root of the monic squarefree
// factor until the certified disk radius n|p/p'| is below target_rel * |z|.
// Returns the final certified radius (or a sentinel > target on failure).
BigReal polish(const std::vector<BigReal>& c, const std::vector<BigReal>& dc, BigComplex& z,
               long wprec, long target_rel_bits) {
    int n = static_cast<int>(c.size()) - 1;
    BigReal nn = BigReal::from_long(n, wprec);
    BigReal radius = BigReal::from_long(1, wprec);
    for (int it = 0; it < 64; ++it) {
        EvalBound eb = eval_with_bounds(c, dc, z, wprec);
        if (!(eb.deriv_abs > BigReal::from_long(0, wprec))) return radius;
        radius = nn * eb.value_abs / eb.deriv_abs;
        BigReal target = BigReal::pow2(-target_rel_bits, wprec) * abs(z);
        if (radius <= target) return radius;
        BigComplex pv = horner(c, z);
        BigComplex dv = horner(dc, z);
        z = z - pv / dv;
    }
    return radius;
}

struct IsolationResult {
    std::vector<RootEnclosure> disks;
    bool ok = false;
};

IsolationResult try_isolate(const RationalPolynomial& p, long prec, long wprec) {
    IsolationResult res;
    RationalPolynomial q = p.monic();
    int zero_mult = q.zero_root_multiplicity();
    if (zero_mult > 0) {
        RootEnclosure e;
        e.center = {BigReal::from_long(0, wprec), BigReal::from_long(0, wprec)};
        e.radius = BigReal::from_long(0, wprec);
        e.multiplicity = zero_mult;
        res.disks.push_back(std::move(e));
        q = q.strip_zero_roots();
    }
    if (q.degree() >= 1) {
        auto factors = q.squarefree_decomposition();
        for (size_t fi = 0; fi < factors.size(); ++fi) {
            const auto& f = factors[fi];
            int mult = static_cast<int>(fi) + 1;
            if (f.degree() <= 0) continue;
            if (f.degree() == 1) {
                Rational root = -f[0] / f[1];
                RootEnclosure e;
                e.center = {to_bigreal(root, wprec), BigReal::from_long(0, wprec)};
                // only the conversion rounding separates center from root
                e.radius = BigReal::pow2(-wprec + 2, wprec) * abs(e.center.re);
                e.multiplicity = mult;
                res.disks.push_back(std::move(e));
                continue;
            }
            auto c = f.coeffs_bigreal(wprec);
            std::vector<BigReal> dc(c.size() - 1, BigReal(wprec));
            for (size_t i = 1; i < c.size(); ++i) {
                dc[i - 1] = c[i] * BigReal::from_long(static_cast<long>(i), wprec);
            }
            auto zs = aberth(c, wprec);
            for (auto& z : zs) {
                BigReal r = polish(c, dc, z, wprec, prec + 8);
                BigReal target = BigReal::pow2(-(prec + 6), wprec) * abs(z);
                if (!(r <= target)) return res;  // not tight enough; escalate
                RootEnclosure e;
                e.center = z;
                e.radius = r;
                e.multiplicity = mult;
                res.disks.push_back(std::move(e));
            }
        }
    }
    // pairwise disjointness certifies one distinct root per disk
    for (size_t i = 0; i < res.disks.size(); ++i) {
        for (size_t j = i + 1; j < res.disks.size(); ++j) {
            BigReal sep = abs(res.disks[i].center - res.disks[j].center);
            if (!(sep > res.disks[i].radius + res.disks[j].radius)) return res;
        }
    }
    res.ok = true;
    return res;
}

}  // namespace

std::vector<RootEnclosure> isolate_roots(const RationalPolynomial& p, long prec) {
    if (p.is_zero()) throw Error("cannot isolate roots of the zero polynomial");
    if (p.degree() == 0) return {};
    long wprec = prec + 48 + 8L * p.degree();
    for (int attempt = 0; attempt < 3; ++attempt) {
        IsolationResult r = try_isolate(p, prec, wprec);
        if (r.ok) return std::move(r.disks);
        wprec *= 2;
    }
    throw PrecisionInsufficient("root isolation failed at escalated precision (degree " +
                                std::to_string(p.degree()) + ")");
}

LeadingEigen leading_eigen(const RationalPolynomial& p, long prec) {
    auto disks = isolate_roots(p, prec + 16);
    long wp = prec + 32;

    // modulus bounds per distinct root
    size_t best = 0;
    BigReal best_mid(wp);
    best_mid = BigReal::from_long(-1, wp);
    for (size_t i = 0; i < disks.size(); ++i) {
        BigReal mid = abs(disks[i].center);
        if (mid > best_mid) {
            best_mid = mid;
            best = i;
        }
    }
    BigReal lower = abs(disks[best].center) - disks[best].radius;
    if (!(lower > BigReal::from_long(0, wp))) {
        throw DegenerateProduct("dominant eigenvalue enclosure contains zero");
    }
    BigReal max_other(wp);
    max_other = BigReal::from_long(0, wp);
    for (size_t i = 0; i < disks.size(); ++i) {
        if (i == best) continue;
        max_other = max(max_other, abs(disks[i].center) + disks[i].radius);
    }
    BigReal gap = lower - max_other;
    if (disks.size() > 1 && !(gap > BigReal::from_long(0, wp))) {
        throw DominanceUnverified("no certified modulus gap between leading eigenvalues");
    }
    if (disks[best].multiplicity != 1) {
        throw DominanceUnverified("dominant eigenvalue is a multiple root");
    }
    // A unique dominant disk holds exactly one root; the conjugate of that
    // root shares its modulus, hence lands in the same disk: the root is real.
    LeadingEigen out;
    out.lambda1 = disks[best].center.re;
    // real Newton refinement against the full polynomial
    auto c = p.monic().coeffs_bigreal(wp);
    std::vector<BigReal> dc(c.size() - 1, BigReal(wp));
    for (size_t i = 1; i < c.size(); ++i) {
        dc[i - 1] = c[i] * BigReal::from_long(static_cast<long>(i), wp);
    }
    for (int it = 0; it < 8; ++it) {
        BigReal pv = horner(c, out.lambda1);
        BigReal dv = horner(dc, out.lambda1);
        if (dv.is_zero()) break;
        BigReal step = pv / dv;
        out.lambda1 -= step;
        if (abs(step) <= BigReal::pow2(-(prec + 8), wp) * abs(out.lambda1)) break;
    }
    out.rho = abs(out.lambda1);
    out.dominance_gap = disks.size() > 1 ? gap : out.rho;
    std::vector<BigReal> dfull(static_cast<size_t>(p.degree()), BigReal(wp));
    {
        auto pc = p.coeffs_bigreal(wp);
        for (size_t i = 1; i < pc.size(); ++i) {
            dfull[i - 1] = pc[i] * BigReal::from_long(static_cast<long>(i), wp);
        }
    }
    out.p_prime_at_lambda1 = horner(dfull, out.lambda1);
    return out;
}

LeadingEigen leading_eigen(const RationalMatrix& b, long prec) {
    if (b.is_zero()) throw DegenerateProduct("zero matrix has no leading eigenvalue");
    return leading_eigen(char_poly(b), prec);
}

BigReal spectral_radius(const RationalMatrix& b, long prec) {
    auto disks = isolate_roots(char_poly(b), prec + 8);
    long wp = prec + 16;
    BigReal rho = BigReal::from_long(0, wp);
    for (const auto& d : disks) rho = max(rho, abs(d.center));
    return rho;
}

std::vector<BigReal> singular_values(const RationalMatrix& a, long prec) {
    RationalMatrix g = a.transpose() * a;
    auto disks = isolate_roots(char_poly(g), prec * 2 + 16);
    long wp = prec * 2 + 32;
    // realness: the conjugate of each enclosed root must land back in its
    // own disk, which holds when the conjugated disk meets no other disk
    for (size_t j = 0; j < disks.size(); ++j) {
        for (size_t l = 0; l < disks.size(); ++l) {
            if (l == j) continue;
            BigComplex cj = disks[j].center.conj();
            BigReal sep = abs(cj - disks[l].center);
            if (!(sep > disks[j].radius + disks[l].radius)) {
                throw PrecisionInsufficient("could not certify realness of a Gram eigenvalue");
            }
        }
    }
    std::vector<BigReal> out;
    for (const auto& d : disks) {
        BigReal lam = max(d.center.re, BigReal::from_long(0, wp));
        BigReal sv = sqrt(lam);
        for (int m = 0; m < d.multiplicity; ++m) out.push_back(sv);
    }
    std::sort(out.begin(), out.end(), [](const BigReal& x, const BigReal& y) { return x > y; });
    return out;
}

BigReal phi_s(const RationalMatrix& a, const BigReal& s) {
    long prec = std::max(s.precision_bits(), 128L);
    if (s.sign() < 0) throw Error("phi_s requires s >= 0");
    int d = a.dim();
    BigReal dd = BigReal::from_long(d, prec);
    if (s >= dd) {
        BigReal det = to_bigreal(exact_det(a), prec);
        return pow(abs(det), s / dd);
    }
    if (s.is_zero()) return BigReal::from_long(1, prec);
    auto sv = singular_values(a, prec);
    BigReal fl(prec);
    mpfr_floor(fl.raw(), s.raw());
    long m = fl.to_long();
    BigReal frac = s - fl;
    BigReal out = BigReal::from_long(1, prec);
    for (long i = 0; i < m; ++i) out *= sv[static_cast<size_t>(i)];
    if (!frac.is_zero()) out *= pow(sv[static_cast<size_t>(m)], frac);
    return out;
}

}  // namespace affdim
