#pragma once

#include <cstdint>
#include <string>

#include "grl/linalg.hpp"

namespace grl {

/// How a distance value is known.
enum class Evidence { exact, certified, lower_bound, unknown };

std::string to_string(Evidence e);

struct DistanceValue {
    int value = 0;
    Evidence evidence = Evidence::unknown;
};

enum class CodeLabel { MDS, AMDS, NMDS, OTHER };

std::string to_string(CodeLabel l);

struct Classification {
    DistanceValue d;
    DistanceValue d_dual;
    int s = 0;       // Singleton defect n-k+1-d
    int s_dual = 0;  // k+1-d_dual
    CodeLabel label = CodeLabel::OTHER;
};

/// A k-dimensional linear code given by a full-row-rank generator matrix.
/// k = 0 (the zero code) is representable as the dual of the full space;
/// operations that need codewords reject it.
class LinearCode {
public:
    explicit LinearCode(Matrix gen);

    const Matrix& gen() const { return gen_; }
    const Field& field() const { return gen_.field(); }
    int n() const { return gen_.cols(); }
    int k() const { return gen_.rows(); }

private:
    Matrix gen_;
};

LinearCode dual(const LinearCode& c);
/// Hermitian dual: entrywise q-th power of the Euclidean dual. Requires a
/// field of even degree.
LinearCode hermitian_dual(const LinearCode& c);

/// True iff the two codes have the same row space.
bool same_code(const LinearCode& a, const LinearCode& b);

struct MinDistOptions {
    std::uint64_t budget = 100'000'000;  // max number of enumerated messages
    /// Enumerate one message per scalar class instead of all q^k - 1.
    /// The result is identical; only the walk order changes.
    bool skip_scalar_multiples = false;
};

/// Exact minimum Hamming weight over all nonzero codewords, by message-space
/// enumeration in lexicographic order with incremental codeword updates.
/// Throws budget_exceeded when q^k - 1 > budget.
int min_distance_exact(const LinearCode& c, const MinDistOptions& opt = {});

/// Exact classification of the code and its dual; both enumerations must fit
/// the budget.
Classification classify(const LinearCode& c, const MinDistOptions& opt = {});

/// Classification derived from d and d_dual values obtained elsewhere
/// (criterion certificates, bounds). No enumeration happens here.
Classification classification_from(int n, int k, DistanceValue d, DistanceValue d_dual);

Matrix hermitian_gram(const LinearCode& c);
bool is_hermitian_self_orthogonal(const LinearCode& c);

/// Minimum weight over words of `big` that are not in `sub` (sub must be a
/// subcode of big). Enumeration-bound like min_distance_exact.
int min_weight_outside_subcode(const LinearCode& big, const LinearCode& sub, const MinDistOptions& opt = {});

}  // namespace grl
