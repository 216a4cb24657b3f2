#include "grl/quantum.hpp"

#include "grl/families.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace grl {

Rational Rational::of(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return {n / g, d / g};
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    std::ostringstream os;
    os << static_cast<double>(num) / static_cast<double>(den);
    return os.str();
}

QuantumParams css_from_hermitian_so(const LinearCode& c, DistanceValue d_dual, DistanceValue d_code) {
    if (!is_hermitian_self_orthogonal(c)) throw std::invalid_argument("code is not Hermitian self-orthogonal");
    if (d_dual.evidence == Evidence::unknown) throw std::invalid_argument("missing dual-distance evidence");
    const int qsq = static_cast<int>(c.field().q());
    int q = 1;
    while (q * q < qsq) ++q;
    if (q * q != qsq) throw std::invalid_argument("code field is not a square order");

    QuantumParams p;
    p.n = c.n();
    p.kq = c.n() - 2 * c.k();
    p.q = q;
    // strict containment: the dual minimum is attained outside the code, so
    // the quantum distance equals the dual distance
    if (d_dual.value >= d_code.value)
        throw std::invalid_argument("need d_dual < d(C) to resolve the quantum distance");
    p.d = d_dual;
    if (d_dual.evidence == Evidence::certified) p.d.evidence = Evidence::certified;
    return p;
}

QuantumParams qgrl_parameters(int family, int q, int m, int k) {
    validate_family_params({family, q, m, k});
    QuantumParams p;
    p.q = q;
    switch (family) {
        case 1: p.n = m * (q + 1) + 2; p.d = {k, Evidence::certified}; break;
        case 2: p.n = m * (q - 1) + 2; p.d = {k, Evidence::certified}; break;
        case 3: p.n = m * (q + 1) + 3; p.d = {k - 1, Evidence::lower_bound}; break;
        case 4: p.n = m * (q - 1) + 3; p.d = {k - 1, Evidence::lower_bound}; break;
        default: throw std::invalid_argument("family must be 1..4");
    }
    p.kq = p.n - 2 * k;
    return p;
}

DefectReport singleton_defect_q(const QuantumParams& p) {
    DefectReport r;
    r.defect = Rational::of(static_cast<long long>(p.n - p.kq) + 2 - 2 * p.d.value, 2);
    r.qnmds = 2 * p.d.value >= p.n - p.kq;
    return r;
}

bool quantum_singleton_bound_holds(const QuantumParams& p) { return p.n - p.kq >= 2 * (p.d.value - 1); }

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

bool parse_int(const std::string& s, int& out) {
    try {
        size_t pos = 0;
        out = std::stoi(s, &pos);
        return pos == s.size() && !s.empty();
    } catch (...) {
        return false;
    }
}

}  // namespace

std::vector<KnownCode> load_known_codes_csv(std::istream& is, std::ostream& warnings) {
    std::vector<KnownCode> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto f = split_csv_line(line);
        if (!f.empty() && f[0] == "n") continue;  // header
        KnownCode kc;
        int bound = 0;
        if (f.size() != 6 || !parse_int(f[0], kc.n) || !parse_int(f[1], kc.k) || !parse_int(f[2], kc.d) ||
            !parse_int(f[3], bound) || !parse_int(f[4], kc.q)) {
            warnings << "warning: skipping malformed known-codes row " << lineno << ": " << line << "\n";
            continue;
        }
        kc.d_is_bound = bound != 0;
        kc.source = f[5];
        out.push_back(kc);
    }
    return out;
}

std::vector<Table2Row> load_table2_rows_csv(std::istream& is, std::ostream& warnings) {
    std::vector<Table2Row> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto f = split_csv_line(line);
        if (!f.empty() && f[0] == "family") continue;
        Table2Row r;
        if (f.size() != 4 || !parse_int(f[0], r.family) || !parse_int(f[1], r.q) || !parse_int(f[2], r.m) ||
            !parse_int(f[3], r.k)) {
            warnings << "warning: skipping malformed table row " << lineno << ": " << line << "\n";
            continue;
        }
        out.push_back(r);
    }
    return out;
}

std::vector<Table2Cell> table2_report(const std::vector<Table2Row>& rows, const std::vector<KnownCode>& known) {
    std::vector<Table2Cell> cells;
    cells.reserve(rows.size());
    for (const auto& row : rows) {
        Table2Cell cell;
        cell.row = row;
        cell.ours = qgrl_parameters(row.family, row.q, row.m, row.k);
        cell.our_defect = singleton_defect_q(cell.ours).defect;

        const KnownCode* best = nullptr;
        Rational best_defect{0, 1};
        for (const auto& kc : known) {
            if (kc.q != row.q) continue;
            int agree = (kc.n == cell.ours.n) + (kc.k == cell.ours.kq) + (kc.d == cell.ours.d.value);
            if (agree < 2) continue;
            Rational defect = singleton_defect_q({kc.n, kc.k, {kc.d, Evidence::exact}, kc.q}).defect;
            bool better = false;
            if (!best) {
                better = true;
            } else if (defect < best_defect) {
                better = true;
            } else if (!(best_defect < defect)) {
                if (kc.k > best->k || (kc.k == best->k && (kc.d > best->d || (kc.d == best->d && kc.n < best->n))))
                    better = true;
            }
            if (better) {
                best = &kc;
                best_defect = defect;
            }
        }
        if (best) {
            cell.competitor = *best;
            cell.competitor_defect = best_defect;
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

namespace {

std::string code_str(int n, int k, int d, bool bound, int q) {
    std::ostringstream os;
    os << "[[" << n << "," << k << "," << (bound ? ">=" : "") << d << "]]_" << q;
    return os.str();
}

}  // namespace

void print_table2(std::ostream& os, const std::vector<Table2Cell>& cells, const std::string& format) {
    if (format == "csv") {
        os << "family,q,m,k,n,kq,d,d_is_bound,defect,known_n,known_k,known_d,known_d_is_bound,known_source,known_defect\n";
        for (const auto& c : cells) {
            os << c.row.family << "," << c.row.q << "," << c.row.m << "," << c.row.k << "," << c.ours.n << ","
               << c.ours.kq << "," << c.ours.d.value << "," << (c.ours.d.evidence == Evidence::lower_bound ? 1 : 0)
               << "," << c.our_defect.str() << ",";
            if (c.competitor) {
                os << c.competitor->n << "," << c.competitor->k << "," << c.competitor->d << ","
                   << (c.competitor->d_is_bound ? 1 : 0) << "," << c.competitor->source << ","
                   << c.competitor_defect->str();
            } else {
                os << ",,,,,";
            }
            os << "\n";
        }
        return;
    }
    os << std::left << std::setw(22) << "ours" << std::setw(8) << "S(Q)" << std::setw(10) << "source"
       << std::setw(24) << "known" << "S(Q)\n";
    for (const auto& c : cells) {
        os << std::left << std::setw(22)
           << code_str(c.ours.n, c.ours.kq, c.ours.d.value, c.ours.d.evidence == Evidence::lower_bound, c.ours.q)
           << std::setw(8) << c.our_defect.str() << std::setw(10) << ("QGRL" + std::to_string(c.row.family));
        if (c.competitor) {
            os << std::setw(24)
               << (code_str(c.competitor->n, c.competitor->k, c.competitor->d, c.competitor->d_is_bound,
                            c.competitor->q) +
                   " [" + c.competitor->source + "]")
               << c.competitor_defect->str();
        } else {
            os << std::setw(24) << "--" << "--";
        }
        os << "\n";
    }
}

}  // namespace grl
