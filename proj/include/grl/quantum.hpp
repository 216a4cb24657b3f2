#pragma once

#include <iosfwd>
#include <optional>

#include "grl/code.hpp"

namespace grl {

/// Exact rational with a tiny footprint; quantum Singleton defects are
/// half-integers, competitor defects can be fractional.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long n, long long d);
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    /// Decimal rendering, e.g. "1", "1.5", "2.25".
    std::string str() const;
};

/// Parameters of an [[n, k, d]]_q quantum code; d carries its evidence tag
/// (exact vs. lower bound) so bounds are never silently upgraded.
struct QuantumParams {
    int n = 0;
    int kq = 0;  // logical dimension exponent: dimension is q^kq
    DistanceValue d;
    int q = 0;
};

struct DefectReport {
    Rational defect;  // (n - kq)/2 + 1 - d
    bool qnmds = false;
};

/// CSS-style derivation from a Hermitian self-orthogonal [n, k] code over
/// GF(q^2): [[n, n-2k, d(Q)]]_q with d(Q) = d_dual in the strict-containment
/// case d_dual < d(C). d_code only needs to be a valid lower bound on d(C).
QuantumParams css_from_hermitian_so(const LinearCode& c, DistanceValue d_dual, DistanceValue d_code);

/// Closed-form quantum parameters of the four families:
///   1: [[m(q+1)+2, m(q+1)+2-2k, k]]    2: [[m(q-1)+2, m(q-1)+2-2k, k]]
///   3: [[m(q+1)+3, m(q+1)+3-2k, >=k-1]]  4: [[m(q-1)+3, m(q-1)+3-2k, >=k-1]]
QuantumParams qgrl_parameters(int family, int q, int m, int k);

DefectReport singleton_defect_q(const QuantumParams& p);

/// True iff n - kq >= 2(d - 1); meaningful for exact d.
bool quantum_singleton_bound_holds(const QuantumParams& p);

struct KnownCode {
    int n = 0, k = 0, d = 0;
    bool d_is_bound = false;
    int q = 0;
    std::string source;
};

/// CSV schema: n,k,d,d_is_bound,q,source. Lines starting with '#' and the
/// header line are skipped; malformed rows are skipped with a warning.
std::vector<KnownCode> load_known_codes_csv(std::istream& is, std::ostream& warnings);

struct Table2Row {
    int family = 0, q = 0, m = 0, k = 0;
};

/// One curated comparison cell: our parameters plus the best matching known
/// code, when one exists.
struct Table2Cell {
    Table2Row row;
    QuantumParams ours;
    Rational our_defect;
    std::optional<KnownCode> competitor;
    std::optional<Rational> competitor_defect;
};

/// Builds the comparison table. A known code matches a row when it has the
/// same q and agrees with our code on at least two of (n, k, d); among
/// matches the smallest-defect one wins (ties: larger k, then larger d,
/// then smaller n).
std::vector<Table2Cell> table2_report(const std::vector<Table2Row>& rows, const std::vector<KnownCode>& known);

/// Rows fixture CSV schema: family,q,m,k. Comment/header handling as above.
std::vector<Table2Row> load_table2_rows_csv(std::istream& is, std::ostream& warnings);

void print_table2(std::ostream& os, const std::vector<Table2Cell>& cells, const std::string& format);

}  // namespace grl
