#include "grl/grl.hpp"

#include <algorithm>
#include <set>

namespace grl {

void validate_grl_spec(const GrlSpec& spec) {
    const int n = spec.n();
    const int s = spec.s();
    if (spec.A.field() != spec.f) throw std::invalid_argument("tail block lives in a different field");
    if (spec.A.rows() != spec.A.cols() || s < 1 || s > 3) throw std::invalid_argument("tail block must be s x s with s in {1,2,3}");
    if (static_cast<int>(spec.v.size()) != n) throw std::invalid_argument("alpha and v length mismatch");
    if (!(s <= spec.k && spec.k <= n && static_cast<std::uint32_t>(n) <= spec.f.q()))
        throw std::invalid_argument("dimension constraints s <= k <= n <= q violated");
    std::set<Elt> distinct(spec.alpha.begin(), spec.alpha.end());
    if (static_cast<int>(distinct.size()) != n) throw std::invalid_argument("alpha entries are not pairwise distinct");
    for (Elt x : spec.alpha)
        if (x >= spec.f.q()) throw std::invalid_argument("alpha entry outside the field");
    for (Elt x : spec.v) {
        if (x >= spec.f.q()) throw std::invalid_argument("v entry outside the field");
        if (x == 0) throw std::invalid_argument("column multiplier v_i = 0");
    }
    if (det(spec.A) == 0) throw std::invalid_argument("tail block A is singular");
}

Matrix build_grs_generator(const Field& f, std::span<const Elt> alpha, std::span<const Elt> v, int k) {
    const int n = static_cast<int>(alpha.size());
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("alpha and v length mismatch");
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    std::set<Elt> distinct(alpha.begin(), alpha.end());
    if (static_cast<int>(distinct.size()) != n) throw std::invalid_argument("alpha entries are not pairwise distinct");
    for (Elt x : v)
        if (x == 0) throw std::invalid_argument("column multiplier v_i = 0");
    Matrix g(f, k, n);
    for (int j = 0; j < n; ++j) {
        Elt cur = v[j];
        for (int r = 0; r < k; ++r) {
            g(r, j) = cur;
            cur = f.mul(cur, alpha[j]);
        }
    }
    return g;
}

LinearCode build_grl_generator(const GrlSpec& spec) {
    validate_grl_spec(spec);
    const Field& f = spec.f;
    const int n = spec.n(), k = spec.k, s = spec.s();
    Matrix grs = build_grs_generator(f, spec.alpha, spec.v, k);
    Matrix g(f, k, n + s);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c) g(r, c) = grs(r, c);
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) g(k - s + r, n + c) = spec.A(r, c);
    return LinearCode(std::move(g));
}

std::vector<Elt> lagrange_weights(const Field& f, std::span<const Elt> alpha) {
    const int n = static_cast<int>(alpha.size());
    std::vector<Elt> w(n);
    for (int i = 0; i < n; ++i) {
        Elt prod = 1;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            Elt d = f.sub(alpha[i], alpha[j]);
            if (d == 0) throw std::invalid_argument("alpha entries are not pairwise distinct");
            prod = f.mul(prod, d);
        }
        w[i] = f.inv(prod);
    }
    return w;
}

Elt power_sum(const Field& f, std::span<const Elt> alpha, std::span<const Elt> weights, long long t) {
    const int n = static_cast<int>(alpha.size());
    if (static_cast<int>(weights.size()) != n) throw std::invalid_argument("weights length mismatch");
    long long e = n - 1 + t;
    if (e < 0) throw std::invalid_argument("exponent n-1+t must be nonnegative");
    Elt acc = 0;
    for (int i = 0; i < n; ++i) acc = f.add(acc, f.mul(weights[i], f.pow(alpha[i], e)));
    return acc;
}

namespace {

// dp[i][c][s]: can the first i items produce a c-subset with sum s
std::vector<std::vector<std::vector<char>>> subset_sum_table(const Field& f, std::span<const Elt> S, int t) {
    const int n = static_cast<int>(S.size());
    const std::uint32_t q = f.q();
    std::vector dp(n + 1, std::vector(t + 1, std::vector<char>(q, 0)));
    dp[0][0][0] = 1;
    for (int i = 0; i < n; ++i) {
        dp[i + 1] = dp[i];
        for (int c = 0; c < t; ++c) {
            const auto& prev = dp[i][c];
            auto& nxt = dp[i + 1][c + 1];
            for (std::uint32_t s = 0; s < q; ++s) {
                if (prev[s]) nxt[f.add(static_cast<Elt>(s), S[i])] = 1;
            }
        }
    }
    return dp;
}

std::uint64_t binomial_capped(int n, int t, std::uint64_t cap) {
    if (t < 0 || t > n) return 0;
    std::uint64_t r = 1;
    t = std::min(t, n - t);
    for (int i = 1; i <= t; ++i) {
        r = r * static_cast<std::uint64_t>(n - t + i) / static_cast<std::uint64_t>(i);
        if (r > cap) return cap + 1;
    }
    return r;
}

// lexicographic t-combinations of {0..n-1}
template <typename Visit>
void for_each_combination(int n, int t, Visit&& visit) {
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    if (t > n) return;
    while (true) {
        visit(std::span<const int>(idx));
        int i = t - 1;
        while (i >= 0 && idx[i] == n - t + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool subset_sum_reachable(const Field& f, std::span<const Elt> S, int t, Elt delta) {
    const int n = static_cast<int>(S.size());
    if (t < 1 || t > n) throw std::invalid_argument("subset size out of range");
    auto dp = subset_sum_table(f, S, t);
    return dp[n][t][delta] != 0;
}

std::optional<std::vector<int>> subset_sum_witness(const Field& f, std::span<const Elt> S, int t, Elt delta) {
    const int n = static_cast<int>(S.size());
    if (t < 1 || t > n) throw std::invalid_argument("subset size out of range");
    auto dp = subset_sum_table(f, S, t);
    if (!dp[n][t][delta]) return std::nullopt;
    std::vector<int> picked;
    int c = t;
    Elt s = delta;
    for (int i = n; i > 0; --i) {
        if (dp[i - 1][c][s]) continue;  // item i-1 not needed
        picked.push_back(i - 1);
        s = f.sub(s, S[i - 1]);
        --c;
    }
    std::reverse(picked.begin(), picked.end());
    return picked;
}

std::uint64_t subset_sum_count(const Field& f, std::span<const Elt> S, int t, Elt delta, std::uint64_t cap) {
    const int n = static_cast<int>(S.size());
    if (t < 1 || t > n) throw std::invalid_argument("subset size out of range");
    if (binomial_capped(n, t, cap) > cap) throw budget_exceeded("C(|S|, t) exceeds the counting budget");
    std::uint64_t count = 0;
    for_each_combination(n, t, [&](std::span<const int> idx) {
        Elt s = 0;
        for (int i : idx) s = f.add(s, S[i]);
        if (s == delta) ++count;
    });
    return count;
}

bool delta_membership(const Field& f, std::span<const Elt> alpha, int k, Elt target) {
    return subset_sum_reachable(f, alpha, k - 1, target);
}

namespace {

std::vector<TaggedVec3> sigma_vectors(const Field& f, std::span<const Elt> alpha, int t, std::uint64_t cap,
                                      bool omega) {
    const int n = static_cast<int>(alpha.size());
    if (t < 1 || t > n) throw std::invalid_argument("subset size out of range");
    if (binomial_capped(n, t, cap) > cap) throw budget_exceeded("C(n, t) exceeds the subset budget");
    std::vector<TaggedVec3> out;
    std::set<Vec3> seen;
    for_each_combination(n, t, [&](std::span<const int> idx) {
        // sigma1 = -sum, sigma2 = sum of pairwise products, built incrementally
        Elt run = 0, e2 = 0;
        for (int i : idx) {
            e2 = f.add(e2, f.mul(alpha[i], run));
            run = f.add(run, alpha[i]);
        }
        Elt s1 = f.neg(run), s2 = e2;
        Vec3 v = omega ? Vec3{1, f.neg(s1), f.sub(f.mul(s1, s1), s2)} : Vec3{s2, s1, 1};
        if (seen.insert(v).second) out.push_back({v, std::vector<int>(idx.begin(), idx.end())});
    });
    return out;
}

Elt dot3(const Field& f, const Vec3& a, const Vec3& b) {
    Elt r = 0;
    for (int i = 0; i < 3; ++i) r = f.add(r, f.mul(a[i], b[i]));
    return r;
}

Elt det3(const Field& f, const Vec3& a, const Vec3& b, const Vec3& c) {
    auto m2 = [&](Elt x, Elt y, Elt z, Elt w) { return f.sub(f.mul(x, w), f.mul(y, z)); };
    Elt r = f.mul(a[0], m2(b[1], c[1], b[2], c[2]));
    r = f.sub(r, f.mul(b[0], m2(a[1], c[1], a[2], c[2])));
    return f.add(r, f.mul(c[0], m2(a[1], b[1], a[2], b[2])));
}

}  // namespace

std::vector<TaggedVec3> omega_set(const Field& f, std::span<const Elt> alpha, int t, std::uint64_t cap) {
    return sigma_vectors(f, alpha, t, cap, true);
}

std::vector<TaggedVec3> gamma_set(const Field& f, std::span<const Elt> alpha, int t, std::uint64_t cap) {
    return sigma_vectors(f, alpha, t, cap, false);
}

S2CriterionReport nmds_criterion_s2(const GrlSpec& spec) {
    validate_grl_spec(spec);
    if (spec.s() != 2) throw std::invalid_argument("criterion needs s = 2");
    const Field& f = spec.f;
    const Elt a = spec.A(0, 0), b = spec.A(0, 1), c = spec.A(1, 0), d = spec.A(1, 1);
    S2CriterionReport r;
    // a = 0 forces c != 0 by nonsingularity, so the disjunct cannot fire;
    // same for b = 0 on the second one
    if (a != 0) {
        if (auto w = subset_sum_witness(f, spec.alpha, spec.k - 1, f.div(c, a))) {
            r.holds = true;
            r.fired_disjunct = 1;
            r.sigma = f.div(c, a);
            r.subset = *w;
            return r;
        }
    }
    if (b != 0) {
        if (auto w = subset_sum_witness(f, spec.alpha, spec.k - 1, f.div(d, b))) {
            r.holds = true;
            r.fired_disjunct = 2;
            r.sigma = f.div(d, b);
            r.subset = *w;
            return r;
        }
    }
    return r;
}

S3CriterionReport nmds_criterion_s3(const GrlSpec& spec, std::uint64_t cap) {
    validate_grl_spec(spec);
    if (spec.s() != 3) throw std::invalid_argument("criterion needs s = 3");
    const Field& f = spec.f;
    std::array<Vec3, 3> col;
    for (int j = 0; j < 3; ++j) col[j] = {spec.A(0, j), spec.A(1, j), spec.A(2, j)};

    auto omegas = omega_set(f, spec.alpha, spec.k - 2, cap);
    auto gammas = gamma_set(f, spec.alpha, spec.k - 1, cap);

    S3CriterionReport r;
    r.cond2 = true;
    r.cond3 = true;

    for (const auto& [bv, subset] : omegas) {
        for (int i = 0; i < 3 && !r.det_witness; ++i)
            for (int j = i + 1; j < 3 && !r.det_witness; ++j)
                if (det3(f, col[i], col[j], bv) == 0) r.det_witness = {i, j, subset};
        // a_j in <b_I> iff a_j = a_j[0] * b_I (b_I[0] = 1 and columns of a
        // nonsingular block are nonzero)
        for (int j = 0; j < 3 && r.cond3; ++j) {
            Elt lam = col[j][0];
            if (lam != 0 && col[j][1] == f.mul(lam, bv[1]) && col[j][2] == f.mul(lam, bv[2])) {
                r.cond3 = false;
                r.cond3_violation = {j, subset};
            }
        }
    }
    for (const auto& [bv, subset] : gammas) {
        int zeros = 0, zi = -1;
        for (int i = 0; i < 3; ++i) {
            if (dot3(f, col[i], bv) == 0) {
                ++zeros;
                zi = i;
            }
        }
        if (zeros >= 1 && !r.orth_witness) r.orth_witness = {zi, subset};
        if (zeros > 1 && r.cond2) {
            r.cond2 = false;
            r.cond2_violation = subset;
        }
    }
    r.cond1 = r.det_witness.has_value() || r.orth_witness.has_value();
    r.holds = r.cond1 && r.cond2 && r.cond3;
    return r;
}

HermitianSums hermitian_sums(const Field& f, std::span<const Elt> alpha, std::span<const Elt> v,
                             std::span<const long long> exponents) {
    if (alpha.size() != v.size()) throw std::invalid_argument("alpha and v length mismatch");
    const int n = static_cast<int>(alpha.size());
    std::vector<Elt> nv(n);
    for (int i = 0; i < n; ++i) nv[i] = f.mul(v[i], f.conj(v[i]));
    HermitianSums out;
    for (long long t : exponents) {
        if (out.by_exponent.count(t)) continue;
        Elt acc = 0;
        for (int i = 0; i < n; ++i) acc = f.add(acc, f.mul(nv[i], f.pow(alpha[i], t)));
        out.by_exponent[t] = acc;
    }
    return out;
}

namespace {

// target matrix for the s=2 / s=3 self-orthogonality criteria:
// -S_((k-s+i) + q(k-s+j)) at entry (i, j)
Matrix so_target_matrix(const GrlSpec& spec) {
    const Field& f = spec.f;
    const int s = spec.s(), k = spec.k;
    long long qb = 1;
    for (int i = 0; i < f.m() / 2; ++i) qb *= f.p();
    std::vector<long long> exps;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) exps.push_back((k - s + i) + qb * (k - s + j));
    auto sums = hermitian_sums(f, spec.alpha, spec.v, exps);
    Matrix target(f, s, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) target(i, j) = f.neg(sums.at((k - s + i) + qb * (k - s + j)));
    return target;
}

SOCriterionReport so_criterion(const GrlSpec& spec) {
    const Field& f = spec.f;
    if (!f.has_conj()) throw std::invalid_argument("self-orthogonality criterion needs a quadratic extension field");
    const int s = spec.s(), k = spec.k;
    long long qb = 1;
    for (int i = 0; i < f.m() / 2; ++i) qb *= f.p();

    SOCriterionReport r{false, true, false, so_target_matrix(spec)};
    if (k > s) {
        std::vector<long long> exps;
        for (int rr = 0; rr <= k - s - 1; ++rr)
            for (int ss = 0; ss <= k - 1; ++ss) exps.push_back(rr + qb * ss);
        auto sums = hermitian_sums(f, spec.alpha, spec.v, exps);
        for (auto& [t, val] : sums.by_exponent) {
            if (val != 0) {
                r.vanishing_ok = false;
                break;
            }
        }
    }
    r.matrix_ok = mat_mul(spec.A, spec.A.conj_transpose()) == r.target;
    r.holds = r.vanishing_ok && r.matrix_ok;
    return r;
}

}  // namespace

SOCriterionReport so_criterion_s2(const GrlSpec& spec) {
    validate_grl_spec(spec);
    if (spec.s() != 2) throw std::invalid_argument("criterion needs s = 2");
    return so_criterion(spec);
}

SOCriterionReport so_criterion_s3(const GrlSpec& spec) {
    validate_grl_spec(spec);
    if (spec.s() != 3) throw std::invalid_argument("criterion needs s = 3");
    return so_criterion(spec);
}

Matrix grl_parity_check_s3(const GrlSpec& spec) {
    validate_grl_spec(spec);
    if (spec.s() != 3) throw std::invalid_argument("parity check form needs s = 3");
    const Field& f = spec.f;
    const int n = spec.n(), k = spec.k;

    auto w = lagrange_weights(f, spec.alpha);
    std::vector<Elt> u(n);
    for (int i = 0; i < n; ++i) u[i] = f.div(w[i], spec.v[i]);

    // sigma1, sigma2 of the full evaluation set
    Elt run = 0, e2 = 0;
    for (Elt x : spec.alpha) {
        e2 = f.add(e2, f.mul(x, run));
        run = f.add(run, x);
    }
    Elt s1 = f.neg(run), s2 = e2;

    Matrix t3(f, 3, 3);
    t3(0, 2) = 1;
    t3(1, 1) = 1;
    t3(1, 2) = f.neg(s1);
    t3(2, 0) = 1;
    t3(2, 1) = f.neg(s1);
    t3(2, 2) = f.sub(f.mul(s1, s1), s2);

    Matrix tail = mat_mul(t3, inverse(spec.A).transpose());
    const int rows = n - k + 3;
    Matrix h(f, rows, n + 3);
    for (int j = 0; j < n; ++j) {
        Elt cur = u[j];
        for (int r = 0; r < rows; ++r) {
            h(r, j) = cur;
            cur = f.mul(cur, spec.alpha[j]);
        }
    }
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) h(rows - 3 + r, n + c) = f.neg(tail(r, c));
    return h;
}

std::array<Elt, 3> corollary_mu_values(const QuadExt& ext, std::span<const Elt> alpha, int k) {
    const Field& f = ext.ext();
    auto w = lagrange_weights(f, alpha);
    const long long q = ext.q();
    auto ps = [&](long long e) {
        Elt acc = 0;
        for (size_t i = 0; i < alpha.size(); ++i) acc = f.add(acc, f.mul(w[i], f.pow(alpha[i], e)));
        return acc;
    };
    return {ps((k - 2) * (1 + q)), ps((k - 2) + q * (k - 1)), ps((k - 1) * (1 + q))};
}

Matrix corollary_mu_matrix(const QuadExt& ext, std::span<const Elt> alpha, int k) {
    const Field& f = ext.ext();
    auto w = lagrange_weights(f, alpha);
    const long long q = ext.q();
    Matrix mu(f, 3, 3);
    for (int j = 0; j < 3; ++j) {
        for (int l = 0; l < 3; ++l) {
            long long e = (k - 3 + j) + q * (k - 3 + l);
            Elt acc = 0;
            for (size_t i = 0; i < alpha.size(); ++i) acc = f.add(acc, f.mul(w[i], f.pow(alpha[i], e)));
            mu(j, l) = acc;
        }
    }
    return mu;
}

}  // namespace grl
