#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affdim/bigreal.hpp"
#include "affdim/matrix.hpp"
#include "affdim/rational.hpp"

namespace affdim {

using RationalVector = std::vector<Rational>;

/// Closed convex cone given by extreme-ray generators and a half-space
/// (facet-normal) description.  For two-dimensional cone spaces the facet
/// normals may be omitted; they are then derived from the two extreme
/// generators so both descriptions provably agree.  In higher dimension
/// the pair of descriptions is a user-supplied witness (generators must
/// satisfy every facet inequality, which is checked).
struct PolyhedralCone {
    std::vector<RationalVector> generators;
    std::vector<RationalVector> facet_normals;
};

struct Multicone {
    std::vector<PolyhedralCone> cones;
    RationalVector transverse;  // the transverse-defining vector w
    // Optional strict separating functionals for pairwise disjointness in
    // cone spaces of dimension >= 3: separators[{j1,j2}] = h with
    // <g,h> > 0 on generators of cone j1 and < 0 on generators of cone j2.
    std::map<std::pair<int, int>, RationalVector> separators;
};

struct Certificate {
    enum class Kind { UserMulticoneVerified, EventualPositivity, Failed };
    Kind kind = Kind::Failed;
    int depth = 0;  // EventualPositivity: smallest depth with sign-definite products
    int k = -1;
    std::string details;

    bool verified() const { return kind != Kind::Failed; }
    static Certificate failed(int k, std::string why) {
        return {Kind::Failed, 0, k, std::move(why)};
    }
};

struct BracketResult {
    BigReal rho_k;
    BigReal rho_k_plus_1;
    bool bracket_holds = false;
    std::vector<int> sign_pattern_lower;  // +-1 per matrix, applied to the A_i^wedge-k
    std::vector<int> sign_pattern_upper;  // +-1 per matrix (empty when k+1 = dim)
    bool upper_is_det_sum = false;        // k+1 = dim: upper value is sum |det A_i|
    bool lower_protasov_equality = false; // lower pattern also yields nonnegative matrices
};

/// Verifies that the user-supplied multicone certifies k-multipositivity of
/// the tuple: each wedge-power image of every cone lands strictly inside
/// (plus or minus) the interior of a single target cone, the transverse
/// vector is strictly positive on all generators, and the cones are
/// pairwise disjoint.
Certificate check_multicone(const std::vector<RationalMatrix>& matrices, int k,
                            const Multicone& mc);

/// Finds the smallest depth m <= max_depth such that every length-m product
/// of the wedge-k images has entries of one strict sign (per product).
Certificate check_eventual_positivity(const std::vector<RationalMatrix>& matrices, int k,
                                      int max_depth);

/// Protasov bracket: lower bound rho(sum eps_i A_i^wedge-k) maximised over
/// sign patterns (unconditionally valid), upper value for k+1 from a
/// nonnegative sign pattern (Protasov equality) or the exact determinant
/// sum when k+1 = dim.  bracket_holds certifies dim_aff in (k, k+1).
BracketResult bracket_dimension(const std::vector<RationalMatrix>& matrices, int k, long prec,
                                const std::optional<std::vector<int>>& user_pattern = std::nullopt);

/// Sufficient contraction check: G - A^T G A positive definite for every
/// matrix (G defaults to the identity, i.e. sigma_1(A_i) < 1), decided
/// exactly by Sylvester's criterion on rational minors.
bool check_contraction(const std::vector<RationalMatrix>& matrices,
                       const std::optional<RationalMatrix>& form = std::nullopt);

}  // namespace affdim
