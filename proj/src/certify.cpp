#include "affdim/certify.hpp"

#include <algorithm>

#include "affdim/errors.hpp"
#include "affdim/spectral.hpp"

namespace affdim {

namespace {

Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RationalVector apply(const RationalMatrix& m, const RationalVector& v) {
    RationalVector out(static_cast<size_t>(m.dim()), Rational(0));
    for (int i = 0; i < m.dim(); ++i) {
        Rational s = 0;
        for (int j = 0; j < m.dim(); ++j) s += m.at(i, j) * v[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = s;
    }
    return out;
}

Rational cross2(const RationalVector& a, const RationalVector& b) {
    return a[0] * b[1] - a[1] * b[0];
}

// For 2D cones: the two extreme rays under the angular order of the open
// half-plane containing all generators.
std::pair<RationalVector, RationalVector> extreme_rays_2d(const PolyhedralCone& c) {
    RationalVector lo = c.generators[0], hi = c.generators[0];
    for (const auto& g : c.generators) {
        if (cross2(g, lo) > 0) lo = g;
        if (cross2(hi, g) > 0) hi = g;
    }
    return {lo, hi};
}

// Facet normals of the 2D sector spanned by (lo, hi): inward normals are
// the rotations of the extreme rays toward the sector.
std::vector<RationalVector> derived_normals_2d(const RationalVector& lo, const RationalVector& hi) {
    // rotate lo by +90deg: (-y, x); rotate hi by -90deg: (y, -x)
    return {{-lo[1], lo[0]}, {hi[1], -hi[0]}};
}

struct PreparedCone {
    std::vector<RationalVector> gens;
    std::vector<RationalVector> normals;
};

}  // namespace

Certificate check_multicone(const std::vector<RationalMatrix>& matrices, int k,
                            const Multicone& mc) {
    if (matrices.empty()) throw DimensionMismatch("empty matrix tuple");
    int d = matrices[0].dim();
    if (k < 0 || k > d) throw DimensionMismatch("wedge order out of range");
    std::vector<RationalMatrix> wedges;
    wedges.reserve(matrices.size());
    for (const auto& m : matrices) {
        if (m.dim() != d) throw DimensionMismatch("mixed matrix dimensions");
        wedges.push_back(wedge_power(m, k));
    }
    int cd = wedges[0].dim();  // cone-space dimension C(d, k)

    if (mc.cones.empty()) return Certificate::failed(k, "no cones supplied");
    if (static_cast<int>(mc.transverse.size()) != cd) {
        throw DimensionMismatch("transverse vector has wrong dimension");
    }

    std::vector<PreparedCone> cones;
    for (size_t j = 0; j < mc.cones.size(); ++j) {
        const auto& c = mc.cones[j];
        if (c.generators.empty()) {
            return Certificate::failed(k, "cone " + std::to_string(j + 1) + " has no generators");
        }
        for (const auto& g : c.generators) {
            if (static_cast<int>(g.size()) != cd)
                throw DimensionMismatch("generator has wrong dimension");
        }
        PreparedCone pc;
        pc.gens = c.generators;
        if (cd == 2) {
            auto [lo, hi] = extreme_rays_2d(c);
            pc.normals = derived_normals_2d(lo, hi);
            // a user-supplied half-space description must agree on the generators
            for (const auto& f : c.facet_normals) {
                for (const auto& g : pc.gens) {
                    if (dot(g, f) < 0) {
                        return Certificate::failed(
                            k, "cone " + std::to_string(j + 1) +
                                   ": supplied facet normal cuts off a generator");
                    }
                }
            }
        } else {
            if (c.facet_normals.empty()) {
                return Certificate::failed(k, "cone " + std::to_string(j + 1) +
                                                  ": facet normals required in dimension " +
                                                  std::to_string(cd));
            }
            pc.normals = c.facet_normals;
        }
        // construction invariants: <g, f> >= 0, nonempty interior witness
        for (const auto& f : pc.normals) {
            if (static_cast<int>(f.size()) != cd)
                throw DimensionMismatch("facet normal has wrong dimension");
            Rational s = 0;
            for (const auto& g : pc.gens) {
                Rational v = dot(g, f);
                if (v < 0) {
                    return Certificate::failed(
                        k, "cone " + std::to_string(j + 1) + " generators violate a facet");
                }
                s += v;
            }
            if (s == 0) {
                return Certificate::failed(
                    k, "cone " + std::to_string(j + 1) + " has empty interior against a facet");
            }
        }
        cones.push_back(std::move(pc));
    }

    // Definition (ii): the transverse functional is strictly positive on all
    // generators; this also witnesses salience of each cone.
    for (size_t j = 0; j < cones.size(); ++j) {
        for (const auto& g : cones[j].gens) {
            if (!(dot(g, mc.transverse) > 0)) {
                return Certificate::failed(
                    k, "transverse vector not strictly positive on cone " + std::to_string(j + 1));
            }
        }
    }

    // Definition (iv): pairwise trivial intersection.
    for (size_t j1 = 0; j1 < cones.size(); ++j1) {
        for (size_t j2 = j1 + 1; j2 < cones.size(); ++j2) {
            bool ok = false;
            if (cd == 2) {
                auto [lo1, hi1] = extreme_rays_2d(mc.cones[j1]);
                auto [lo2, hi2] = extreme_rays_2d(mc.cones[j2]);
                // disjoint sectors in the half-plane: one ends strictly
                // before the other begins
                ok = cross2(hi1, lo2) > 0 || cross2(hi2, lo1) > 0;
            } else {
                auto it = mc.separators.find({static_cast<int>(j1), static_cast<int>(j2)});
                if (it == mc.separators.end()) {
                    it = mc.separators.find({static_cast<int>(j2), static_cast<int>(j1)});
                }
                if (it == mc.separators.end()) {
                    return Certificate::failed(
                        k, "no separating functional supplied for cones " + std::to_string(j1 + 1) +
                               "," + std::to_string(j2 + 1));
                }
                const auto& h = it->second;
                bool flip = it->first.first == static_cast<int>(j2);
                ok = true;
                for (const auto& g : cones[j1].gens) {
                    Rational v = dot(g, h);
                    if (!((flip ? -v : v) > 0)) ok = false;
                }
                for (const auto& g : cones[j2].gens) {
                    Rational v = dot(g, h);
                    if (!((flip ? v : -v) > 0)) ok = false;
                }
            }
            if (!ok) {
                return Certificate::failed(k, "cones " + std::to_string(j1 + 1) + "," +
                                                  std::to_string(j2 + 1) +
                                                  " not certified disjoint");
            }
        }
    }

    // Definition (iii): every wedge image of every cone lands strictly
    // inside +-interior of a single target cone.  Strict facet positivity
    // on generators suffices: positive combinations stay interior.
    for (size_t a = 0; a < wedges.size(); ++a) {
        for (size_t j = 0; j < cones.size(); ++j) {
            bool placed = false;
            for (size_t l = 0; l < cones.size() && !placed; ++l) {
                for (int sign = +1; sign >= -1 && !placed; sign -= 2) {
                    bool all = true;
                    for (const auto& g : cones[j].gens) {
                        RationalVector img = apply(wedges[a], g);
                        for (const auto& f : cones[l].normals) {
                            Rational v = dot(img, f);
                            if (!((sign > 0 ? v : -v) > 0)) {
                                all = false;
                                break;
                            }
                        }
                        if (!all) break;
                    }
                    placed = all;
                }
            }
            if (!placed) {
                return Certificate::failed(
                    k, "matrix " + std::to_string(a + 1) + " does not map cone " +
                           std::to_string(j + 1) + " strictly inside any +-cone interior");
            }
        }
    }

    Certificate c;
    c.kind = Certificate::Kind::UserMulticoneVerified;
    c.k = k;
    c.details = "multicone with " + std::to_string(cones.size()) + " cone(s) verified for wedge order " +
                std::to_string(k);
    return c;
}

Certificate check_eventual_positivity(const std::vector<RationalMatrix>& matrices, int k,
                                      int max_depth) {
    if (matrices.empty()) throw DimensionMismatch("empty matrix tuple");
    if (max_depth < 1) throw DimensionMismatch("max_depth must be >= 1");
    std::vector<RationalMatrix> wedges;
    for (const auto& m : matrices) wedges.push_back(wedge_power(m, k));
    size_t n = wedges.size();
    for (int depth = 1; depth <= max_depth; ++depth) {
        bool all_signed = true;
        // lexicographic enumeration of all length-`depth` products
        std::vector<size_t> idx(static_cast<size_t>(depth), 0);
        while (true) {
            RationalMatrix prod = wedges[idx[0]];
            for (int t = 1; t < depth; ++t) prod = prod * wedges[idx[static_cast<size_t>(t)]];
            if (prod.uniform_strict_sign() == 0) {
                all_signed = false;
                break;
            }
            int pos = depth - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - 1) {
                idx[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
        }
        if (all_signed) {
            Certificate c;
            c.kind = Certificate::Kind::EventualPositivity;
            c.depth = depth;
            c.k = k;
            c.details = "all length-" + std::to_string(depth) +
                        " products sign-definite at wedge order " + std::to_string(k);
            return c;
        }
    }
    return Certificate::failed(k, "no sign-definite product depth up to " +
                                      std::to_string(max_depth));
}

namespace {

BigReal rho_of_signed_sum(const std::vector<RationalMatrix>& wedges, unsigned pattern, long prec) {
    RationalMatrix sum(wedges[0].dim());
    for (size_t i = 0; i < wedges.size(); ++i) {
        sum = sum + ((pattern >> i) & 1u ? -wedges[i] : wedges[i]);
    }
    if (sum.is_zero()) return BigReal::from_long(0, prec);
    return spectral_radius(sum, prec);
}

}  // namespace

BracketResult bracket_dimension(const std::vector<RationalMatrix>& matrices, int k, long prec,
                                const std::optional<std::vector<int>>& user_pattern) {
    if (matrices.empty()) throw DimensionMismatch("empty matrix tuple");
    int d = matrices[0].dim();
    if (d < 2) throw DimensionMismatch("bracket requires dimension >= 2");
    if (k < 0 || k + 1 > d) throw DimensionMismatch("bracket order out of range");
    size_t n = matrices.size();
    if (!user_pattern && n > 12) {
        throw NoPositiveSignPattern(
            "sign-pattern search capped at 12 matrices; supply a pattern");
    }
    if (user_pattern && user_pattern->size() != n) {
        throw DimensionMismatch("sign pattern length mismatch");
    }

    std::vector<RationalMatrix> wk, wk1;
    for (const auto& m : matrices) {
        wk.push_back(wedge_power(m, k));
        wk1.push_back(wedge_power(m, k + 1));
    }

    BracketResult out;

    // Lower value: rho(sum eps_i A_i^wedge-k) is a lower bound for e^{P(k)}
    // for every sign pattern; take the best one (coarse scan, certified
    // recomputation of the winner).
    unsigned best_pattern = 0;
    if (user_pattern) {
        for (size_t i = 0; i < n; ++i) {
            if ((*user_pattern)[i] < 0) best_pattern |= 1u << i;
        }
    } else {
        double best = -1;
        for (unsigned pat = 0; pat < (1u << (n - 1)); ++pat) {
            // first sign fixed: global flips do not change the modulus
            double r = rho_of_signed_sum(wk, pat << 1, 64).to_double();
            if (r > best) {
                best = r;
                best_pattern = pat << 1;
            }
        }
    }
    out.rho_k = rho_of_signed_sum(wk, best_pattern, prec);
    out.sign_pattern_lower.resize(n, 1);
    for (size_t i = 0; i < n; ++i) {
        if ((best_pattern >> i) & 1u) out.sign_pattern_lower[i] = -1;
    }
    {
        bool nonneg = true;
        for (size_t i = 0; i < n; ++i) {
            RationalMatrix m = out.sign_pattern_lower[i] < 0 ? -wk[i] : wk[i];
            if (!m.is_nonnegative()) nonneg = false;
        }
        out.lower_protasov_equality = nonneg;
    }

    // Upper value: exact determinant identity when k+1 = d, otherwise a
    // sign pattern making every wedge nonnegative is required for the
    // Protasov equality.
    if (k + 1 == d) {
        Rational s = 0;
        for (const auto& m : matrices) s += abs(exact_det(m));
        out.rho_k_plus_1 = to_bigreal(s, prec);
        out.upper_is_det_sum = true;
    } else {
        out.sign_pattern_upper.assign(n, 1);
        unsigned pat = 0;
        for (size_t i = 0; i < n; ++i) {
            if (wk1[i].is_nonnegative()) continue;
            if ((-wk1[i]).is_nonnegative()) {
                out.sign_pattern_upper[i] = -1;
                pat |= 1u << i;
                continue;
            }
            throw NoPositiveSignPattern(
                "no sign pattern makes matrix " + std::to_string(i + 1) +
                " entrywise nonnegative at wedge order " + std::to_string(k + 1));
        }
        out.rho_k_plus_1 = rho_of_signed_sum(wk1, pat, prec);
    }

    BigReal one = BigReal::from_long(1, prec);
    out.bracket_holds = out.rho_k_plus_1 < one && one < out.rho_k;
    return out;
}

bool check_contraction(const std::vector<RationalMatrix>& matrices,
                       const std::optional<RationalMatrix>& form) {
    if (matrices.empty()) return true;
    int d = matrices[0].dim();
    RationalMatrix g = form ? *form : RationalMatrix::identity(d);
    if (g.dim() != d) throw DimensionMismatch("quadratic form dimension mismatch");
    for (const auto& a : matrices) {
        if (a.dim() != d) throw DimensionMismatch("mixed matrix dimensions");
        // ||A||_G < 1  <=>  G - A^T G A positive definite (Sylvester, exact)
        RationalMatrix m = g + (-(a.transpose() * g * a));
        for (int lead = 1; lead <= d; ++lead) {
            RationalMatrix sub(lead);
            for (int i = 0; i < lead; ++i) {
                for (int j = 0; j < lead; ++j) sub.at(i, j) = m.at(i, j);
            }
            if (!(exact_det(sub) > 0)) return false;
        }
    }
    return true;
}

}  // namespace affdim
