#include "grl/families.hpp"

#include <algorithm>

namespace grl {

namespace {

std::pair<int, int> prime_power_split(int q) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    int p = 0;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;
    int e = 0;
    int t = q;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return {p, e};
}

Elt prod_of_differences(const Field& base, const std::vector<Elt>& c, int j) {
    Elt prod = 1;
    for (size_t l = 0; l < c.size(); ++l) {
        if (static_cast<int>(l) == static_cast<int>(j)) continue;
        prod = base.mul(prod, base.sub(c[j], c[l]));
    }
    return prod;
}

// evaluation set as the concatenation of norm-fiber cosets beta_j * U_(q+1)
std::vector<Elt> coset_union_alpha(const QuadExt& ext, const std::vector<Elt>& beta) {
    const auto& unity = ext.unity_subgroup();
    std::vector<Elt> alpha;
    alpha.reserve(beta.size() * unity.size());
    for (Elt b : beta)
        for (Elt u : unity) alpha.push_back(ext.ext().mul(b, u));
    return alpha;
}

}  // namespace

QuadExt extension_for_order(int q) {
    auto [p, e] = prime_power_split(q);
    return QuadExt::make(Field::make(p, e));
}

void validate_family_params(const FamilyParams& p) {
    prime_power_split(p.q);
    auto fail = [&](const char* what) {
        throw std::invalid_argument("family " + std::to_string(p.family) + " parameters (q=" + std::to_string(p.q) +
                                    ", m=" + std::to_string(p.m) + ", k=" + std::to_string(p.k) + "): " + what);
    };
    switch (p.family) {
        case 1:
            if (p.q < 4) fail("needs q >= 4");
            if (p.m < 2 || p.m > p.q - 2) fail("needs 2 <= m <= q-2");
            if (p.k < 3 || p.k > p.m + 1) fail("needs 3 <= k <= m+1");
            break;
        case 2:
            if (p.q < 5) fail("needs q >= 5");
            if (p.m < 2 || p.m > p.q + 1) fail("needs 2 <= m <= q+1");
            if (p.k < 3 || 2 * p.k > p.q + 1) fail("needs 3 <= k <= (q+1)/2");
            break;
        case 3:
            if (p.q < 5) fail("needs q >= 5");
            if (p.m < 2 || p.m > p.q - 3) fail("needs 2 <= m <= q-3");
            if (p.k < 4 || p.k > p.m + 2) fail("needs 4 <= k <= m+2");
            break;
        case 4:
            // the k-range 4 <= k <= (q+1)/2 is empty below q = 7
            if (p.q < 7) fail("needs q >= 7 for a nonempty k-range");
            if (p.m < 2 || p.m > p.q + 1) fail("needs 2 <= m <= q+1");
            if (p.k < 4 || 2 * p.k > p.q + 1) fail("needs 4 <= k <= (q+1)/2");
            break;
        default:
            fail("family must be 1..4");
    }
}

std::vector<FamilyParams> family_grid(int family, int q) {
    std::vector<FamilyParams> out;
    for (int m = 2; m <= q + 1; ++m) {
        for (int k = 3; k <= q + 1; ++k) {
            FamilyParams p{family, q, m, k};
            try {
                validate_family_params(p);
            } catch (const std::invalid_argument&) {
                continue;
            }
            out.push_back(p);
        }
    }
    return out;
}

std::vector<Elt> find_nonzero_sum_subset(const Field& base, int m) {
    const int q = static_cast<int>(base.q());
    if (m < 2 || m > q - 2) throw std::invalid_argument("need 2 <= m <= q-2");
    std::vector<Elt> c(m);
    for (int i = 0; i < m; ++i) c[i] = static_cast<Elt>(i + 1);
    Elt sum = 0;
    for (Elt x : c) sum = base.add(sum, x);
    if (sum == 0) c[m - 1] = static_cast<Elt>(m + 1);  // m+1 <= q-1 since m <= q-2
    return c;
}

std::vector<Elt> find_sigma12_subset(const Field& base, int m) {
    const int q = static_cast<int>(base.q());
    if (q < 5 || m < 2 || m > q - 3) throw std::invalid_argument("need q >= 5 and 2 <= m <= q-3");
    Elt zeta = base.generator();
    std::vector<Elt> c = {zeta, base.mul(zeta, zeta)};
    Elt s1 = base.neg(base.add(c[0], c[1]));
    Elt s2 = base.mul(c[0], c[1]);
    while (static_cast<int>(c.size()) < m) {
        bool extended = false;
        for (Elt x = 1; x < base.q(); ++x) {
            if (std::find(c.begin(), c.end(), x) != c.end()) continue;
            Elt ns1 = base.sub(s1, x);
            Elt ns2 = base.sub(s2, base.mul(x, s1));
            if (ns1 == 0 || ns2 == 0) continue;
            c.push_back(x);
            s1 = ns1;
            s2 = ns2;
            extended = true;
            break;
        }
        if (!extended) throw std::logic_error("sigma12 subset extension failed");
    }
    return c;
}

std::pair<GrlSpec, Family1Trace> construct_family1(const QuadExt& ext, int m, int k) {
    validate_family_params({1, static_cast<int>(ext.q()), m, k});
    const Field& base = ext.base();
    const Field& E = ext.ext();
    const std::uint32_t q = ext.q();

    Family1Trace tr;
    tr.c = find_nonzero_sum_subset(base, m);
    tr.sigma = 0;
    for (Elt x : tr.c) tr.sigma = base.add(tr.sigma, x);

    tr.D.resize(m);
    tr.beta.resize(m);
    for (int j = 0; j < m; ++j) {
        tr.D[j] = prod_of_differences(base, tr.c, j);
        tr.beta[j] = ext.solve_norm_equation(tr.c[j]);
    }

    tr.xi = ext.unity_generator();
    std::vector<Elt> alpha = coset_union_alpha(ext, tr.beta);

    std::vector<Elt> v;
    v.reserve(alpha.size());
    for (int j = 0; j < m; ++j) {
        Elt nval = base.div(base.pow(tr.c[j], m - k + 1), tr.D[j]);
        Elt vj = ext.solve_norm_equation(nval);
        for (std::uint32_t i = 0; i <= q; ++i) v.push_back(vj);
    }

    // theta_j = beta_j (1 - xi^(k-1)) / (1 - xi), a (k-1)-subset sum of C_j
    Elt factor = E.div(E.sub(1, E.pow(tr.xi, k - 1)), E.sub(1, tr.xi));
    tr.theta.resize(m);
    for (int j = 0; j < m; ++j) tr.theta[j] = E.mul(tr.beta[j], factor);

    tr.j0 = -1;
    for (int j = 0; j < m; ++j) {
        if (base.add(tr.sigma, ext.norm(tr.theta[j])) != 0) {
            tr.j0 = j;
            break;
        }
    }
    if (tr.j0 < 0)
        throw std::runtime_error("family 1: no coset index with sigma + N(theta_j) != 0 exists for q=" +
                                 std::to_string(q) + " m=" + std::to_string(m) + " k=" + std::to_string(k));

    Elt theta = tr.theta[tr.j0];
    Elt denom = base.add(tr.sigma, ext.norm(theta));
    tr.rho = base.neg(base.div(tr.sigma, denom));
    tr.a = ext.solve_norm_equation(tr.rho);
    Elt d_norm = base.neg(base.div(base.mul(tr.sigma, tr.sigma), denom));
    tr.d = ext.solve_norm_equation(d_norm);

    Matrix A2(E, 2, 2);
    A2(0, 0) = tr.a;
    A2(0, 1) = E.mul(E.neg(ext.embed(tr.rho)), E.conj(E.div(theta, tr.d)));
    A2(1, 0) = E.mul(theta, tr.a);
    A2(1, 1) = tr.d;

    GrlSpec spec{E, std::move(alpha), std::move(v), std::move(A2), k};
    validate_grl_spec(spec);
    return {std::move(spec), std::move(tr)};
}

std::pair<GrlSpec, Family2Trace> construct_family2(const QuadExt& ext, int m, int k) {
    validate_family_params({2, static_cast<int>(ext.q()), m, k});
    const Field& base = ext.base();
    const Field& E = ext.ext();
    const std::uint32_t q = ext.q();

    Family2Trace tr;
    const auto& reps = ext.coset_representatives();
    tr.omega.assign(reps.begin(), reps.begin() + m);

    const long long e_mu = (k - 2) + static_cast<long long>(q) * (k - 1);
    auto mu_of = [&](const std::vector<Elt>& u) {
        Elt acc = 0;
        for (int j = 0; j < m; ++j) acc = E.add(acc, E.mul(ext.embed(u[j]), E.pow(tr.omega[j], e_mu)));
        return acc;
    };
    tr.u.assign(m, 1);
    tr.mu = mu_of(tr.u);
    for (Elt u1 = 2; tr.mu == 0 && u1 < q; ++u1) {
        tr.u[0] = u1;
        tr.mu = mu_of(tr.u);
    }
    if (tr.mu == 0) throw std::logic_error("family 2: mu != 0 search failed");

    tr.E = static_cast<int>(q) - 2 * k + 2;
    // exponent window of the vanishing sums must stay inside [1, q-2]
    if (tr.E < 1 || (k - 3) + (k - 1) + tr.E > static_cast<int>(q) - 2)
        throw std::logic_error("family 2: exponent window violated");

    std::vector<Elt> alpha, v;
    alpha.reserve(static_cast<size_t>(m) * (q - 1));
    v.reserve(alpha.capacity());
    for (int j = 0; j < m; ++j) {
        for (Elt x = 1; x < q; ++x) {
            alpha.push_back(E.mul(tr.omega[j], ext.embed(x)));
            v.push_back(ext.solve_norm_equation(base.mul(tr.u[j], base.pow(x, tr.E))));
        }
    }

    auto f_map = [&](Elt y) {
        Elt t = E.mul(tr.mu, y);
        return E.add(t, E.conj(t));
    };
    tr.j0 = -1;
    for (int j = 0; j < m; ++j) {
        if (f_map(tr.omega[j]) != 0) {
            tr.j0 = j;
            break;
        }
    }
    if (tr.j0 < 0) throw std::logic_error("family 2: f vanished on two inequivalent representatives");
    tr.theta = tr.omega[tr.j0];
    auto tau_base = ext.project(f_map(tr.theta));
    if (!tau_base) throw std::logic_error("family 2: tau left the base field");
    tr.tau = *tau_base;
    tr.rho = base.div(ext.norm(tr.mu), tr.tau);
    tr.a = ext.solve_norm_equation(tr.rho);
    tr.d = ext.solve_norm_equation(base.neg(base.mul(tr.rho, ext.norm(tr.theta))));

    Matrix A2(E, 2, 2);
    A2(0, 0) = tr.a;
    A2(0, 1) = E.div(E.sub(tr.mu, E.mul(ext.embed(tr.rho), E.conj(tr.theta))), E.conj(tr.d));
    A2(1, 0) = E.mul(tr.theta, tr.a);
    A2(1, 1) = tr.d;

    GrlSpec spec{E, std::move(alpha), std::move(v), std::move(A2), k};
    validate_grl_spec(spec);
    return {std::move(spec), std::move(tr)};
}

std::pair<GrlSpec, Family3Trace> construct_family3(const QuadExt& ext, int m, int k) {
    validate_family_params({3, static_cast<int>(ext.q()), m, k});
    const Field& base = ext.base();
    const Field& E = ext.ext();
    const std::uint32_t q = ext.q();

    // complement trick: sigma1/sigma2 of A_m nonzero forces Sigma and Lambda
    // of the complement C_m nonzero
    auto a_m = find_sigma12_subset(base, static_cast<int>(q) - 1 - m);
    Family3Trace tr;
    for (Elt x = 1; x < q; ++x)
        if (std::find(a_m.begin(), a_m.end(), x) == a_m.end()) tr.c.push_back(x);

    tr.Sigma = 0;
    Elt run = 0, e2 = 0;
    for (Elt x : tr.c) {
        e2 = base.add(e2, base.mul(x, run));
        run = base.add(run, x);
    }
    tr.Sigma = run;
    tr.Lambda = base.sub(base.mul(run, run), e2);  // sigma1^2 - sigma2
    if (tr.Sigma == 0 || tr.Lambda == 0) throw std::logic_error("family 3: complement search failed");

    tr.D.resize(m);
    std::vector<Elt> beta(m);
    for (int j = 0; j < m; ++j) {
        tr.D[j] = prod_of_differences(base, tr.c, j);
        beta[j] = ext.solve_norm_equation(tr.c[j]);
    }
    std::vector<Elt> alpha = coset_union_alpha(ext, beta);

    std::vector<Elt> v;
    v.reserve(alpha.size());
    for (int j = 0; j < m; ++j) {
        Elt nval = base.div(base.pow(tr.c[j], m - k + 2), tr.D[j]);
        Elt vj = ext.solve_norm_equation(nval);
        for (std::uint32_t i = 0; i <= q; ++i) v.push_back(vj);
    }

    tr.a = ext.solve_norm_equation(base.neg(1));
    tr.b = ext.solve_norm_equation(base.neg(tr.Sigma));
    tr.cc = ext.solve_norm_equation(base.neg(tr.Lambda));
    Matrix A3(E, 3, 3);
    A3(0, 0) = tr.a;
    A3(1, 1) = tr.b;
    A3(2, 2) = tr.cc;

    GrlSpec spec{E, std::move(alpha), std::move(v), std::move(A3), k};
    validate_grl_spec(spec);
    return {std::move(spec), std::move(tr)};
}

std::pair<GrlSpec, Family4Trace> construct_family4(const QuadExt& ext, int m, int k) {
    validate_family_params({4, static_cast<int>(ext.q()), m, k});
    const Field& base = ext.base();
    const Field& E = ext.ext();
    const std::uint32_t q = ext.q();

    Family4Trace tr(E);
    const auto& reps = ext.coset_representatives();
    tr.omega.assign(reps.begin(), reps.begin() + m);

    const long long e_mu = (k - 3) + static_cast<long long>(q) * (k - 1);
    const long long e_varpi = static_cast<long long>(k - 2) * (q + 1);
    auto sums_of = [&](const std::vector<Elt>& u) {
        Elt mu = 0, varpi = 0;
        for (int j = 0; j < m; ++j) {
            Elt uj = ext.embed(u[j]);
            mu = E.add(mu, E.mul(uj, E.pow(tr.omega[j], e_mu)));
            varpi = E.add(varpi, E.mul(uj, E.pow(tr.omega[j], e_varpi)));
        }
        return std::pair(mu, varpi);
    };
    tr.u.assign(m, 1);
    std::tie(tr.mu, tr.varpi) = sums_of(tr.u);
    // each of the two conditions excludes at most one value of u_1
    for (Elt u1 = 2; (tr.mu == 0 || tr.varpi == 0) && u1 < q; ++u1) {
        tr.u[0] = u1;
        std::tie(tr.mu, tr.varpi) = sums_of(tr.u);
    }
    for (Elt u2 = 2; (tr.mu == 0 || tr.varpi == 0) && u2 < q; ++u2) {
        tr.u[1] = u2;
        for (Elt u1 = 1; (tr.mu == 0 || tr.varpi == 0) && u1 < q; ++u1) {
            tr.u[0] = u1;
            std::tie(tr.mu, tr.varpi) = sums_of(tr.u);
        }
    }
    if (tr.mu == 0 || tr.varpi == 0)
        throw std::runtime_error("family 4: no multiplier vector with mu != 0 and varpi != 0 found for q=" +
                                 std::to_string(q) + " m=" + std::to_string(m) + " k=" + std::to_string(k));

    const int e_v = static_cast<int>(q) - 2 * k + 3;
    if (e_v < 1 || (k - 4) + (k - 1) + e_v > static_cast<int>(q) - 2)
        throw std::logic_error("family 4: exponent window violated");

    std::vector<Elt> alpha, v;
    alpha.reserve(static_cast<size_t>(m) * (q - 1));
    v.reserve(alpha.capacity());
    for (int j = 0; j < m; ++j) {
        for (Elt x = 1; x < q; ++x) {
            alpha.push_back(E.mul(tr.omega[j], ext.embed(x)));
            v.push_back(ext.solve_norm_equation(base.mul(tr.u[j], base.pow(x, e_v))));
        }
    }

    // The tail block must satisfy A3 conj(A3)^T = [[0,0,mu],[0,varpi,0],
    // [conj(mu),0,0]]. Rows (x,0,1) / (0,b,0) / (z,0,w) work with
    // N(x) = -1, N(b) = varpi, t := mu z conj(x) solving t + conj(t) = N(mu),
    // and w = conj(mu) - z conj(x).
    auto varpi_base = ext.project(tr.varpi);
    if (!varpi_base) throw std::logic_error("family 4: varpi left the base field");
    Elt x = ext.solve_norm_equation(base.neg(1));
    Elt b = ext.solve_norm_equation(*varpi_base);
    Elt n_mu = ext.norm_in_ext(tr.mu);
    Elt t = 0;
    bool found = false;
    for (Elt cand = 0; cand < E.q(); ++cand) {
        if (E.add(cand, E.conj(cand)) == n_mu) {
            t = cand;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("family 4: relative trace equation unsolvable");
    Elt z = E.div(t, E.mul(tr.mu, E.conj(x)));
    Elt w = E.sub(E.conj(tr.mu), E.mul(z, E.conj(x)));

    tr.A3(0, 0) = x;
    tr.A3(0, 2) = 1;
    tr.A3(1, 1) = b;
    tr.A3(2, 0) = z;
    tr.A3(2, 2) = w;

    Matrix gram = mat_mul(tr.A3, tr.A3.conj_transpose());
    Matrix target(E, 3, 3);
    target(0, 2) = tr.mu;
    target(1, 1) = tr.varpi;
    target(2, 0) = E.conj(tr.mu);
    if (gram != target) throw std::logic_error("family 4: tail block misses its gram target");

    GrlSpec spec{E, std::move(alpha), std::move(v), tr.A3, k};
    validate_grl_spec(spec);
    return {std::move(spec), std::move(tr)};
}

GrlSpec construct_family(const FamilyParams& p) {
    QuadExt ext = extension_for_order(p.q);
    switch (p.family) {
        case 1: return construct_family1(ext, p.m, p.k).first;
        case 2: return construct_family2(ext, p.m, p.k).first;
        case 3: return construct_family3(ext, p.m, p.k).first;
        case 4: return construct_family4(ext, p.m, p.k).first;
        default: throw std::invalid_argument("family must be 1..4");
    }
}

}  // namespace grl
