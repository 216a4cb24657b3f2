#pragma once

#include <array>
#include <map>
#include <optional>

#include "grl/code.hpp"

namespace grl {

/// Complete recipe for one generalized Roth-Lempel code: evaluation set,
/// column multipliers, the s x s tail block and the dimension.
struct GrlSpec {
    Field f;
    std::vector<Elt> alpha;  // n pairwise distinct elements
    std::vector<Elt> v;      // n nonzero column multipliers
    Matrix A;                // s x s nonsingular, s in {1,2,3}
    int k = 0;               // s <= k <= n <= q

    int n() const { return static_cast<int>(alpha.size()); }
    int s() const { return A.rows(); }
};

/// Throws invalid_argument naming the violated invariant.
void validate_grl_spec(const GrlSpec& spec);

/// The k x n matrix with rows v_i * alpha_i^r, r = 0..k-1.
Matrix build_grs_generator(const Field& f, std::span<const Elt> alpha, std::span<const Elt> v, int k);

/// Generator [G_k | (O over A_s)]: dimension k, length n+s.
LinearCode build_grl_generator(const GrlSpec& spec);

/// Parity check of an s=3 GRL code: (n-k+3) x (n+3) matrix
/// [rows u_i alpha_i^r, r=0..n-k+2 | (O over -T3 (A3^-1)^T)] with
/// u_i = w_i / v_i. Satisfies G H^T = 0 and has rank n-k+3.
Matrix grl_parity_check_s3(const GrlSpec& spec);

/// Interpolation weights w_i = prod_{j != i} 1/(alpha_i - alpha_j).
std::vector<Elt> lagrange_weights(const Field& f, std::span<const Elt> alpha);

/// sum_i w_i alpha_i^(n-1+t); t >= 1-n.
Elt power_sum(const Field& f, std::span<const Elt> alpha, std::span<const Elt> weights, long long t);

/// Exact subset-sum reachability: is delta a sum of a t-subset of S?
/// Dynamic program over (prefix, chosen count, partial sum).
bool subset_sum_reachable(const Field& f, std::span<const Elt> S, int t, Elt delta);
/// A t-subset of S (as indices into S) summing to delta, if one exists.
std::optional<std::vector<int>> subset_sum_witness(const Field& f, std::span<const Elt> S, int t, Elt delta);
/// N(t, delta, S) by exhaustive enumeration; throws budget_exceeded when
/// C(|S|, t) > cap.
std::uint64_t subset_sum_count(const Field& f, std::span<const Elt> S, int t, Elt delta,
                               std::uint64_t cap = 10'000'000);

/// Is target a (k-1)-subset sum of the evaluation set?
bool delta_membership(const Field& f, std::span<const Elt> alpha, int k, Elt target);

using Vec3 = std::array<Elt, 3>;

struct TaggedVec3 {
    Vec3 vec;
    std::vector<int> subset;  // indices into alpha of the first subset producing vec
};

/// Omega_t: vectors (1, -sigma1(I), sigma1(I)^2 - sigma2(I)) over t-subsets I,
/// deduplicated, each tagged with a witness subset.
std::vector<TaggedVec3> omega_set(const Field& f, std::span<const Elt> alpha, int t,
                                  std::uint64_t cap = 10'000'000);
/// Gamma_t: vectors (sigma2(I), sigma1(I), 1), deduplicated with witnesses.
std::vector<TaggedVec3> gamma_set(const Field& f, std::span<const Elt> alpha, int t,
                                  std::uint64_t cap = 10'000'000);

struct S2CriterionReport {
    bool holds = false;
    int fired_disjunct = 0;      // 1: c = a*sigma, 2: d = b*sigma, 0: none
    Elt sigma = 0;               // the witnessing (k-1)-subset sum
    std::vector<int> subset;     // indices into alpha
};

/// Theorem-style NMDS test for s=2: some (k-1)-subset sum sigma of alpha has
/// c = a sigma or d = b sigma, with A2 = [[a,b],[c,d]].
S2CriterionReport nmds_criterion_s2(const GrlSpec& spec);

struct S3CriterionReport {
    bool holds = false;
    bool cond1 = false;  // some tail-column relation fires
    bool cond2 = false;  // every Gamma vector kills at most one tail column
    bool cond3 = false;  // no tail column is proportional to an Omega vector
    // witness of condition 1: either the determinant relation (columns i,j
    // and an Omega subset) or the orthogonality relation (column i and a
    // Gamma subset)
    std::optional<std::tuple<int, int, std::vector<int>>> det_witness;
    std::optional<std::pair<int, std::vector<int>>> orth_witness;
    // first violation found, when a condition fails
    std::optional<std::vector<int>> cond2_violation;
    std::optional<std::pair<int, std::vector<int>>> cond3_violation;
};

/// Theorem-style NMDS test for s=3 over Omega_(k-2) and Gamma_(k-1).
S3CriterionReport nmds_criterion_s3(const GrlSpec& spec, std::uint64_t cap = 10'000'000);

/// The weighted power sums S_t = sum_i N(v_i) alpha_i^t (values live in the
/// extension field; they land in the base field when t = 0 mod q+1).
struct HermitianSums {
    std::map<long long, Elt> by_exponent;
    Elt at(long long t) const { return by_exponent.at(t); }
};

HermitianSums hermitian_sums(const Field& f, std::span<const Elt> alpha, std::span<const Elt> v,
                             std::span<const long long> exponents);

struct SOCriterionReport {
    bool holds = false;
    bool vanishing_ok = false;  // S_(r+qs) = 0 over the required index range
    bool matrix_ok = false;     // A conj(A)^T meets the S-matrix target
    Matrix target;              // the required value of A conj(A)^T
};

/// Hermitian self-orthogonality criterion for s=2 via the S_t sums;
/// provably equivalent to a vanishing Hermitian gram.
SOCriterionReport so_criterion_s2(const GrlSpec& spec);
/// Same for s=3.
SOCriterionReport so_criterion_s3(const GrlSpec& spec);

/// mu_1, mu_2, mu_3 = sum w_i alpha_i^e for e = (k-2)(1+q), k-2+q(k-1),
/// (k-1)(1+q); the scaled Hermitian-orthogonality targets.
std::array<Elt, 3> corollary_mu_values(const QuadExt& ext, std::span<const Elt> alpha, int k);
/// mu_(j,l) = sum w_i alpha_i^((k-3+j)+q(k-3+l)) as a 3x3 matrix.
Matrix corollary_mu_matrix(const QuadExt& ext, std::span<const Elt> alpha, int k);

}  // namespace grl
