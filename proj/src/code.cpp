#include "grl/code.hpp"

#include <algorithm>
#include <functional>

namespace grl {

std::string to_string(Evidence e) {
    switch (e) {
        case Evidence::exact: return "exact";
        case Evidence::certified: return "certified";
        case Evidence::lower_bound: return "lower-bound";
        default: return "unknown";
    }
}

std::string to_string(CodeLabel l) {
    switch (l) {
        case CodeLabel::MDS: return "MDS";
        case CodeLabel::AMDS: return "AMDS";
        case CodeLabel::NMDS: return "NMDS";
        default: return "OTHER";
    }
}

LinearCode::LinearCode(Matrix gen) : gen_(std::move(gen)) {
    if (gen_.rows() > gen_.cols()) throw std::invalid_argument("generator has more rows than columns");
    if (rank(gen_) != gen_.rows()) throw std::invalid_argument("generator matrix is not full row rank");
}

LinearCode dual(const LinearCode& c) { return LinearCode(right_kernel(c.gen())); }

LinearCode hermitian_dual(const LinearCode& c) {
    const Field& f = c.field();
    Matrix d = right_kernel(c.gen());
    std::uint32_t qhalf = 1;
    for (int i = 0; i < f.m() / 2; ++i) qhalf *= static_cast<std::uint32_t>(f.p());
    if (f.m() % 2 != 0) throw std::invalid_argument("Hermitian dual needs a quadratic extension field");
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) d(i, j) = f.pow(d(i, j), qhalf);
    return LinearCode(std::move(d));
}

bool same_code(const LinearCode& a, const LinearCode& b) {
    if (a.field() != b.field() || a.n() != b.n() || a.k() != b.k()) return false;
    return rref(a.gen()) == rref(b.gen());
}

namespace {

std::uint64_t pow_u64_capped(std::uint64_t base, int e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

// Walks all nonzero messages with first nonzero coordinate at position
// `lead` in lexicographic coefficient-index order; the codeword is updated
// incrementally with one precomputed delta row per odometer carry.
// Calls visit(weight) per word.
template <typename Visit>
void enumerate_lead(const Matrix& gen, int lead, bool skip_scalars, Visit&& visit) {
    const Field& f = gen.field();
    const int n = gen.cols();
    const int k = gen.rows();
    const std::uint32_t q = f.q();

    // deltas[j][c] = (elt(c+1 mod q) - elt(c)) * row(lead+1+j): stepping a
    // coefficient from index c to c+1 adds this vector
    const int free = k - lead - 1;
    std::vector<Elt> deltas(static_cast<size_t>(free) * q * n);
    for (int j = 0; j < free; ++j) {
        const int gr = lead + 1 + j;
        for (std::uint32_t c = 0; c < q; ++c) {
            Elt step = f.sub(static_cast<Elt>((c + 1) % q), static_cast<Elt>(c));
            Elt* dst = &deltas[(static_cast<size_t>(j) * q + c) * n];
            for (int col = 0; col < n; ++col) dst[col] = f.mul(step, gen(gr, col));
        }
    }

    std::vector<Elt> cw(gen.row(lead).begin(), gen.row(lead).end());
    std::vector<std::uint32_t> odo(static_cast<size_t>(free), 0);

    // scalar multiples of the leading-1 message are covered by scaling
    const std::uint32_t lead_values = skip_scalars ? 1 : q - 1;
    for (std::uint32_t lv = 0; lv < lead_values; ++lv) {
        if (lv > 0) {
            // lead coefficient moves from elt(lv) to elt(lv+1)
            Elt step = f.sub(static_cast<Elt>(lv + 1), static_cast<Elt>(lv));
            for (int col = 0; col < n; ++col) cw[col] = f.add(cw[col], f.mul(step, gen(lead, col)));
        }
        while (true) {
            int w = 0;
            for (int col = 0; col < n; ++col) w += cw[col] != 0;
            visit(w);
            int pos = free - 1;
            while (pos >= 0) {
                const Elt* d = &deltas[(static_cast<size_t>(pos) * q + odo[pos]) * n];
                for (int col = 0; col < n; ++col) cw[col] = f.add(cw[col], d[col]);
                if (++odo[pos] < q) break;
                odo[pos] = 0;  // wrapped back to coefficient 0; carry on
                --pos;
            }
            if (pos < 0) break;
        }
    }
}

}  // namespace

int min_distance_exact(const LinearCode& c, const MinDistOptions& opt) {
    if (c.k() == 0) throw std::invalid_argument("minimum distance of the zero code");
    const std::uint32_t q = c.field().q();
    std::uint64_t words = pow_u64_capped(q, c.k(), opt.budget + 1);
    if (words == 0 || words - 1 > opt.budget)
        throw budget_exceeded("q^k - 1 = " + std::to_string(words - 1) + " exceeds enumeration budget " +
                              std::to_string(opt.budget));

    int best = c.n() + 1;
    for (int lead = 0; lead < c.k(); ++lead) {
        enumerate_lead(c.gen(), lead, opt.skip_scalar_multiples, [&](int w) {
            if (w < best) best = w;
        });
    }
    return best;
}

Classification classification_from(int n, int k, DistanceValue d, DistanceValue d_dual) {
    Classification r;
    r.d = d;
    r.d_dual = d_dual;
    r.s = n - k + 1 - d.value;
    r.s_dual = k + 1 - d_dual.value;
    if (r.s == 0)
        r.label = CodeLabel::MDS;
    else if (r.s == 1 && r.s_dual == 1)
        r.label = CodeLabel::NMDS;
    else if (r.s == 1)
        r.label = CodeLabel::AMDS;
    else
        r.label = CodeLabel::OTHER;
    return r;
}

Classification classify(const LinearCode& c, const MinDistOptions& opt) {
    if (c.k() == 0 || c.k() == c.n()) throw std::invalid_argument("classification needs 0 < k < n");
    int d = min_distance_exact(c, opt);
    int dd = min_distance_exact(dual(c), opt);
    return classification_from(c.n(), c.k(), {d, Evidence::exact}, {dd, Evidence::exact});
}

Matrix hermitian_gram(const LinearCode& c) { return mat_mul(c.gen(), c.gen().conj_transpose()); }

bool is_hermitian_self_orthogonal(const LinearCode& c) { return hermitian_gram(c).is_zero(); }

int min_weight_outside_subcode(const LinearCode& big, const LinearCode& sub, const MinDistOptions& opt) {
    if (big.field() != sub.field() || big.n() != sub.n())
        throw std::invalid_argument("codes live in different spaces");
    const Field& f = big.field();
    const std::uint32_t q = f.q();
    std::uint64_t words = pow_u64_capped(q, big.k(), opt.budget + 1);
    if (words - 1 > opt.budget) throw budget_exceeded("enumeration budget exceeded");

    // membership in sub tested against its rref: a word is in sub iff
    // appending it does not raise the rank
    Matrix sub_r = rref(sub.gen());
    const int sub_rank = sub.k();
    Matrix probe(f, sub_rank + 1, big.n());
    for (int i = 0; i < sub_rank; ++i)
        for (int j = 0; j < big.n(); ++j) probe(i, j) = sub_r(i, j);

    int best = big.n() + 1;
    const int n = big.n();
    const int k = big.k();
    std::vector<Elt> cw(n);
    std::vector<std::uint32_t> msg(k, 0);
    // plain lexicographic full enumeration; this path only runs at desk scale
    while (true) {
        int pos = k - 1;
        while (pos >= 0 && msg[pos] == q - 1) {
            msg[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++msg[pos];
        std::fill(cw.begin(), cw.end(), 0);
        for (int i = 0; i < k; ++i) {
            if (msg[i] == 0) continue;
            Elt mi = static_cast<Elt>(msg[i]);
            for (int j = 0; j < n; ++j) cw[j] = f.add(cw[j], f.mul(mi, big.gen()(i, j)));
        }
        int w = 0;
        for (int j = 0; j < n; ++j) w += cw[j] != 0;
        if (w >= best) continue;
        for (int j = 0; j < n; ++j) probe(sub_rank, j) = cw[j];
        if (rank(probe) == sub_rank) continue;  // lies in the subcode
        best = w;
    }
    if (best > big.n()) throw std::invalid_argument("big \\ sub is empty");
    return best;
}

}  // namespace grl
