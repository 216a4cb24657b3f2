#pragma once

#include "grl/grl.hpp"

namespace grl {

/// Identifies one member of the four Hermitian self-orthogonal families.
struct FamilyParams {
    int family = 0;  // 1..4
    int q = 0;       // base field order; the code lives over GF(q^2)
    int m = 0;       // coset count
    int k = 0;       // dimension
};

/// Throws invalid_argument when (family, q, m, k) is outside the family's
/// admissible range. Family 4 additionally requires q >= 7 for a nonempty
/// k-range.
void validate_family_params(const FamilyParams& p);

/// All admissible (m, k) pairs of one family at one q, ascending.
std::vector<FamilyParams> family_grid(int family, int q);

/// The quadratic extension GF(q^2)/GF(q) for a prime power q.
QuadExt extension_for_order(int q);

/// m distinct nonzero elements of GF(q) with nonzero sum: the m least
/// indices, with the last one swapped up when the sum vanishes.
std::vector<Elt> find_nonzero_sum_subset(const Field& base, int m);

/// m distinct nonzero elements with both elementary symmetric functions
/// sigma1 and sigma2 nonzero; seeded with {zeta, zeta^2} for the least
/// primitive zeta and extended by least admissible elements.
std::vector<Elt> find_sigma12_subset(const Field& base, int m);

/// Every intermediate scalar of a construction, for auditability. c, D,
/// sigma-like values live in GF(q); beta/theta/A entries live in GF(q^2).
struct Family1Trace {
    std::vector<Elt> c, D, beta, theta;
    Elt sigma = 0, xi = 0, rho = 0, a = 0, d = 0;
    int j0 = -1;
};

struct Family2Trace {
    std::vector<Elt> omega, u;
    Elt mu = 0, theta = 0, tau = 0, rho = 0, a = 0, d = 0;
    int E = 0, j0 = -1;
};

struct Family3Trace {
    std::vector<Elt> c, D;
    Elt Sigma = 0, Lambda = 0, a = 0, b = 0, cc = 0;
};

struct Family4Trace {
    std::vector<Elt> omega, u;
    Elt mu = 0, varpi = 0;
    Matrix A3;
    Family4Trace(const Field& f) : A3(f, 3, 3) {}
};

/// [m(q+1)+2, k, m(q+1)+2-k] Hermitian self-orthogonal NMDS codes over
/// GF(q^2); evaluation set is a union of m norm-fiber cosets of the unity
/// subgroup.
std::pair<GrlSpec, Family1Trace> construct_family1(const QuadExt& ext, int m, int k);

/// [m(q-1)+2, k, m(q-1)+2-k] Hermitian self-orthogonal NMDS codes;
/// evaluation set is a union of m multiplicative cosets of GF(q)*.
std::pair<GrlSpec, Family2Trace> construct_family2(const QuadExt& ext, int m, int k);

/// [m(q+1)+3, k, >= m(q+1)-k+2] Hermitian self-orthogonal codes (s = 3).
std::pair<GrlSpec, Family3Trace> construct_family3(const QuadExt& ext, int m, int k);

/// [m(q-1)+3, k, >= m(q-1)-k+2] Hermitian self-orthogonal codes (s = 3).
std::pair<GrlSpec, Family4Trace> construct_family4(const QuadExt& ext, int m, int k);

/// Dispatch on params.family; returns the spec only.
GrlSpec construct_family(const FamilyParams& p);

}  // namespace grl
