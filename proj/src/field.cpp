#include "grl/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace grl {

namespace {

constexpr std::uint32_t kOrderCap = 1u << 20;
constexpr Elt kNoElt = 0xffffffffu;

using Poly = std::vector<int>;  // coefficients mod p, low-to-high

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
}

// Remainder of a by monic b.
Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        int shift = static_cast<int>(a.size()) - 1 - db;
        int lead = a.back();
        for (int i = 0; i <= db; ++i) {
            a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p * p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    return poly_mod(poly_mul(a, b, p), mod, p);
}

Poly poly_powmod(Poly base, long long e, const Poly& mod, int p) {
    Poly r = {1};
    base = poly_mod(std::move(base), mod, p);
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    auto inv_mod_p = [p](int x) {
        int r = 1, e = p - 2, base = ((x % p) + p) % p;
        while (e > 0) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // normalize b monic before reducing
        Poly bm = b;
        int il = inv_mod_p(bm.back());
        for (auto& c : bm) c = c * il % p;
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> fs;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

namespace polyops {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Rabin test: f monic of degree m is irreducible over GF(p) iff
// x^(p^m) == x (mod f) and gcd(x^(p^(m/r)) - x, f) = const for prime r | m.
bool is_irreducible(std::span<const int> poly, int p) {
    const int m = static_cast<int>(poly.size()) - 1;
    if (m < 1 || poly[m] != 1) return false;
    Poly f(poly.begin(), poly.end());
    if (m == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    const Poly x = {0, 1};
    auto x_pow_p_tower = [&](int height) {
        // x^(p^height) mod f
        Poly acc = x;
        for (int i = 0; i < height; ++i) acc = poly_powmod(acc, p, f, p);
        return acc;
    };
    Poly xq = x_pow_p_tower(m);
    Poly diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (long long r : prime_factors(m)) {
        Poly xr = x_pow_p_tower(static_cast<int>(m / r));
        Poly d = xr;
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        trim(d);
        Poly g = poly_gcd(f, d, p);
        if (static_cast<int>(g.size()) - 1 > 0) return false;
    }
    return true;
}

std::vector<int> least_irreducible(int p, int m) {
    std::uint64_t count = 1;
    for (int i = 0; i < m; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<int> f(m + 1, 0);
        std::uint64_t t = idx;
        for (int i = 0; i < m; ++i) {
            f[i] = static_cast<int>(t % p);
            t /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace polyops

namespace detail {

struct FieldData {
    int p = 0;
    int m = 0;
    std::uint32_t q = 0;
    std::vector<int> modulus;

    // addition via digit split: index = hi * lo_size + lo; small fields also
    // carry a flat q x q table for the enumeration kernels
    std::uint32_t lo_size = 0;
    std::vector<Elt> add_lo;    // lo_size^2
    std::vector<Elt> add_hi;    // hi_size^2
    std::vector<Elt> add_full;  // q^2 when q <= 1024
    std::vector<Elt> neg_tab;   // q

    std::vector<Elt> exp_tab;  // q-1 entries, exp[i] = g^i
    std::vector<std::uint32_t> log_tab;  // q entries, log[0] unused
    Elt gen = 0;

    std::vector<Elt> conj_tab;  // x -> x^(p^(m/2)) when m even

    Elt add(Elt a, Elt b) const {
        if (!add_full.empty()) return add_full[static_cast<size_t>(a) * q + b];
        return add_hi[(a / lo_size) * (q / lo_size) + b / lo_size] * lo_size +
               add_lo[(a % lo_size) * lo_size + b % lo_size];
    }
    Elt mul(Elt a, Elt b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t s = static_cast<std::uint64_t>(log_tab[a]) + log_tab[b];
        if (s >= q - 1) s -= q - 1;
        return exp_tab[s];
    }
};

}  // namespace detail

using detail::FieldData;

namespace {

Elt index_from_poly(const Poly& f, int p, int m) {
    std::uint64_t idx = 0, base = 1;
    for (int i = 0; i < m; ++i) {
        idx += (i < static_cast<int>(f.size()) ? static_cast<std::uint64_t>(f[i]) : 0) * base;
        base *= static_cast<std::uint64_t>(p);
    }
    return static_cast<Elt>(idx);
}

Poly poly_from_index(Elt a, int p, int m) {
    Poly f(m, 0);
    for (int i = 0; i < m; ++i) {
        f[i] = static_cast<int>(a % p);
        a /= static_cast<Elt>(p);
    }
    trim(f);
    return f;
}

std::shared_ptr<const FieldData> build_field(int p, int m, std::vector<int> modulus) {
    if (!polyops::is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    long long q_ll = 1;
    for (int i = 0; i < m; ++i) {
        q_ll *= p;
        if (q_ll > static_cast<long long>(kOrderCap)) throw std::invalid_argument("field order exceeds 2^20 cap");
    }
    const auto q = static_cast<std::uint32_t>(q_ll);

    if (modulus.empty()) {
        modulus = polyops::least_irreducible(p, m);
    } else {
        if (static_cast<int>(modulus.size()) != m + 1 || modulus[m] != 1)
            throw std::invalid_argument("modulus must be monic of degree m");
        for (int c : modulus)
            if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficients must be reduced mod p");
        if (!polyops::is_irreducible(modulus, p)) throw std::invalid_argument("modulus is not irreducible");
    }

    auto d = std::make_shared<FieldData>();
    d->p = p;
    d->m = m;
    d->q = q;
    d->modulus = modulus;

    // digit-split addition tables
    int m_lo = (m + 1) / 2;
    std::uint32_t lo = 1;
    for (int i = 0; i < m_lo; ++i) lo *= static_cast<std::uint32_t>(p);
    std::uint32_t hi = q / lo;
    d->lo_size = lo;
    auto digit_add = [p](Elt a, Elt b, std::uint32_t size) {
        Elt r = 0;
        std::uint32_t base = 1;
        while (base < size) {
            int da = static_cast<int>(a % p), db = static_cast<int>(b % p);
            r += static_cast<Elt>((da + db) % p) * base;
            a /= static_cast<Elt>(p);
            b /= static_cast<Elt>(p);
            base *= static_cast<std::uint32_t>(p);
        }
        return r;
    };
    d->add_lo.resize(static_cast<size_t>(lo) * lo);
    for (Elt a = 0; a < lo; ++a)
        for (Elt b = 0; b < lo; ++b) d->add_lo[static_cast<size_t>(a) * lo + b] = digit_add(a, b, lo);
    d->add_hi.resize(static_cast<size_t>(hi) * hi);
    for (Elt a = 0; a < hi; ++a)
        for (Elt b = 0; b < hi; ++b) d->add_hi[static_cast<size_t>(a) * hi + b] = digit_add(a, b, hi);
    if (q <= 1024) {
        d->add_full.resize(static_cast<size_t>(q) * q);
        for (Elt a = 0; a < q; ++a)
            for (Elt b = 0; b < q; ++b) d->add_full[static_cast<size_t>(a) * q + b] = digit_add(a, b, q);
    }
    d->neg_tab.resize(q);
    for (Elt a = 0; a < q; ++a) {
        Elt r = 0;
        std::uint32_t base = 1;
        Elt t = a;
        for (int i = 0; i < m; ++i) {
            int c = static_cast<int>(t % p);
            r += static_cast<Elt>((p - c) % p) * base;
            t /= static_cast<Elt>(p);
            base *= static_cast<std::uint32_t>(p);
        }
        d->neg_tab[a] = r;
    }

    // slow multiplication for bootstrap
    auto slow_mul = [&](Elt a, Elt b) {
        Poly f = poly_mulmod(poly_from_index(a, p, m), poly_from_index(b, p, m), modulus, p);
        return index_from_poly(f, p, m);
    };
    auto slow_pow = [&](Elt a, long long e) {
        Elt r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = slow_mul(r, base);
            base = slow_mul(base, base);
            e >>= 1;
        }
        return r;
    };

    auto factors = prime_factors(q - 1);
    Elt g = 0;
    for (Elt cand = 1; cand < q; ++cand) {
        bool primitive = true;
        for (long long f : factors) {
            if (slow_pow(cand, (q - 1) / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = cand;
            break;
        }
    }
    d->gen = g;
    d->exp_tab.resize(q - 1);
    d->log_tab.assign(q, 0);
    Elt cur = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        d->exp_tab[i] = cur;
        d->log_tab[cur] = i;
        cur = slow_mul(cur, g);
    }

    if (m % 2 == 0) {
        long long qhalf = 1;
        for (int i = 0; i < m / 2; ++i) qhalf *= p;
        d->conj_tab.resize(q);
        d->conj_tab[0] = 0;
        for (Elt a = 1; a < q; ++a) {
            std::uint64_t e = static_cast<std::uint64_t>(d->log_tab[a]) * static_cast<std::uint64_t>(qhalf) % (q - 1);
            d->conj_tab[a] = d->exp_tab[e];
        }
    }
    return d;
}

std::shared_ptr<const FieldData> cached_field(int p, int m, std::vector<int> modulus) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, std::vector<int>>, std::weak_ptr<const FieldData>> cache;

    // the no-override key must resolve the deterministic modulus first
    if (modulus.empty() && m >= 1 && polyops::is_prime(p)) {
        long long q_ll = 1;
        bool ok = true;
        for (int i = 0; i < m; ++i) {
            q_ll *= p;
            if (q_ll > static_cast<long long>(kOrderCap)) { ok = false; break; }
        }
        if (ok) modulus = polyops::least_irreducible(p, m);
    }
    std::scoped_lock lock(mu);
    auto key = std::make_tuple(p, m, modulus);
    if (auto it = cache.find(key); it != cache.end()) {
        if (auto sp = it->second.lock()) return sp;
    }
    auto sp = build_field(p, m, modulus);
    cache[key] = sp;
    return sp;
}

}  // namespace

Field Field::make(int p, int m) { return Field(cached_field(p, m, {})); }
Field Field::make(int p, int m, const std::vector<int>& modulus) { return Field(cached_field(p, m, modulus)); }

int Field::p() const { return d_->p; }
int Field::m() const { return d_->m; }
std::uint32_t Field::q() const { return d_->q; }
const std::vector<int>& Field::modulus() const { return d_->modulus; }

Elt Field::add(Elt a, Elt b) const { return d_->add(a, b); }
Elt Field::neg(Elt a) const { return d_->neg_tab[a]; }
Elt Field::sub(Elt a, Elt b) const { return d_->add(a, d_->neg_tab[b]); }
Elt Field::mul(Elt a, Elt b) const { return d_->mul(a, b); }

Elt Field::inv(Elt a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    std::uint32_t l = d_->log_tab[a];
    return d_->exp_tab[l == 0 ? 0 : d_->q - 1 - l];
}

Elt Field::div(Elt a, Elt b) const { return mul(a, inv(b)); }

Elt Field::pow(Elt a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::invalid_argument("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    long long ord = d_->q - 1;
    long long r = e % ord;
    if (r < 0) r += ord;
    std::uint64_t l = static_cast<std::uint64_t>(d_->log_tab[a]) * static_cast<std::uint64_t>(r) % static_cast<std::uint64_t>(ord);
    return d_->exp_tab[l];
}

Elt Field::generator() const { return d_->gen; }

std::uint32_t Field::order_of(Elt a) const {
    if (a == 0) throw std::invalid_argument("order of zero");
    std::uint32_t n = d_->q - 1;
    std::uint32_t l = d_->log_tab[a];
    return n / std::gcd(n, l == 0 ? n : l);
}

Elt Field::from_int(long long v) const {
    long long r = v % d_->p;
    if (r < 0) r += d_->p;
    return static_cast<Elt>(r);  // prime-subfield scalars occupy indices 0..p-1
}

Elt Field::from_coeffs(std::span<const int> coeffs) const {
    if (static_cast<int>(coeffs.size()) > d_->m) throw std::invalid_argument("too many coefficients");
    std::uint64_t idx = 0, base = 1;
    for (int i = 0; i < d_->m; ++i) {
        int c = i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0;
        c %= d_->p;
        if (c < 0) c += d_->p;
        idx += static_cast<std::uint64_t>(c) * base;
        base *= static_cast<std::uint64_t>(d_->p);
    }
    return static_cast<Elt>(idx);
}

std::vector<int> Field::to_coeffs(Elt a) const {
    std::vector<int> c(d_->m, 0);
    for (int i = 0; i < d_->m; ++i) {
        c[i] = static_cast<int>(a % d_->p);
        a /= static_cast<Elt>(d_->p);
    }
    return c;
}

Elt Field::conj(Elt a) const {
    if (d_->conj_tab.empty()) throw std::invalid_argument("conjugation requires even extension degree");
    return d_->conj_tab[a];
}

std::string Field::to_string(Elt a) const {
    if (a == 0) return "0";
    auto c = to_coeffs(a);
    std::ostringstream os;
    bool first = true;
    for (int i = d_->m - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c[i];
        } else {
            if (c[i] != 1) os << c[i];
            os << "w";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QuadExt::QuadExt(Field base, Field ext) : base_(std::move(base)), ext_(std::move(ext)) { build(); }

QuadExt QuadExt::make(const Field& base) {
    Field ext = Field::make(base.p(), 2 * base.m());
    return QuadExt(base, ext);
}

QuadExt QuadExt::make(const Field& base, const Field& ext) {
    if (ext.p() != base.p() || ext.m() != 2 * base.m())
        throw std::invalid_argument("extension must be a degree-2 extension of the base");
    return QuadExt(base, ext);
}

void QuadExt::build() {
    const std::uint32_t qb = base_.q();
    const std::uint32_t qe = ext_.q();

    // minimal root of the base modulus inside the extension field
    const auto& mod = base_.modulus();
    Elt root = kNoElt;
    for (Elt x = 0; x < qe; ++x) {
        Elt acc = 0;
        for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i)
            acc = ext_.add(ext_.mul(acc, x), ext_.from_int(mod[i]));
        if (acc == 0) {
            root = x;
            break;
        }
    }
    if (root == kNoElt) throw std::logic_error("base modulus has no root in the extension");

    embed_.resize(qb);
    project_.assign(qe, kNoElt);
    for (Elt a = 0; a < qb; ++a) {
        auto coeffs = base_.to_coeffs(a);
        Elt acc = 0;
        for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
            acc = ext_.add(ext_.mul(acc, root), ext_.from_int(coeffs[i]));
        embed_[a] = acc;
        project_[acc] = a;
    }

    // one ascending pass fixes the minimal norm preimages
    norm_preimage_.assign(qb, kNoElt);
    for (Elt x = 0; x < qe; ++x) {
        Elt n = ext_.pow(x, qb + 1);
        Elt nb = project_[n];
        if (nb == kNoElt) throw std::logic_error("norm left the base field");
        if (norm_preimage_[nb] == kNoElt) norm_preimage_[nb] = x;
    }

    xi_ = kNoElt;
    for (Elt x = 1; x < qe; ++x) {
        if (ext_.order_of(x) == qb + 1) {
            xi_ = x;
            break;
        }
    }
    unity_.resize(qb + 1);
    Elt cur = 1;
    for (std::uint32_t i = 0; i <= qb; ++i) {
        unity_[i] = cur;
        cur = ext_.mul(cur, xi_);
    }

    coset_reps_.clear();
    std::vector<char> seen(qe, 0);
    for (Elt x = 1; x < qe && coset_reps_.size() < qb + 1; ++x) {
        if (seen[x]) continue;
        coset_reps_.push_back(x);
        for (Elt u = 1; u < qb; ++u) seen[ext_.mul(x, embed_[u])] = 1;
    }
}

Elt QuadExt::embed(Elt base_elt) const {
    if (base_elt >= base_.q()) throw std::invalid_argument("element outside base field");
    return embed_[base_elt];
}

std::optional<Elt> QuadExt::project(Elt ext_elt) const {
    if (ext_elt >= ext_.q()) throw std::invalid_argument("element outside extension field");
    Elt b = project_[ext_elt];
    if (b == kNoElt) return std::nullopt;
    return b;
}

Elt QuadExt::norm(Elt x) const {
    Elt n = ext_.pow(x, q() + 1);
    return project_[n];
}

Elt QuadExt::norm_in_ext(Elt x) const { return ext_.pow(x, q() + 1); }

Elt QuadExt::solve_norm_equation(Elt c_base) const {
    if (c_base == 0) throw std::invalid_argument("norm equation needs a nonzero right-hand side");
    if (c_base >= base_.q()) throw std::invalid_argument("element outside base field");
    return norm_preimage_[c_base];
}

const std::vector<Elt>& QuadExt::unity_subgroup() const { return unity_; }
Elt QuadExt::unity_generator() const { return xi_; }
const std::vector<Elt>& QuadExt::coset_representatives() const { return coset_reps_; }

}  // namespace grl
