#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace grl {

/// Canonical element index in [0, q). The index encodes the coefficient
/// vector of the element in base p, constant term first: index 0 is the
/// additive identity, index 1 the multiplicative identity.
using Elt = std::uint32_t;

/// Thrown when an enumeration or subset budget would be exceeded.
/// Callers must treat this as "infeasible", never as a silent bound.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
struct FieldData;
}

/**
 * Immutable handle to a finite field GF(p^m), p prime, p^m <= 2^20.
 *
 * The defining modulus is the lexicographically least monic irreducible of
 * degree m over GF(p), where candidates are ordered by the integer whose
 * base-p digits are the non-leading coefficients (constant term least
 * significant). A modulus override is accepted for reproducing externally
 * fixed defining relations.
 *
 * Multiplication runs on log/antilog tables over the least primitive
 * element; addition is digit-split table lookup. All tables are built once
 * and shared: handles to the same (p, m, modulus) triple compare equal by
 * pointer and are safe to use concurrently.
 */
class Field {
public:
    static Field make(int p, int m);
    static Field make(int p, int m, const std::vector<int>& modulus);

    int p() const;
    int m() const;
    std::uint32_t q() const;
    /// Modulus coefficients low-to-high, size m+1, monic.
    const std::vector<int>& modulus() const;

    Elt zero() const { return 0; }
    Elt one() const { return 1; }

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const;            // throws on a == 0
    Elt div(Elt a, Elt b) const;     // throws on b == 0
    Elt pow(Elt a, long long e) const;

    /// Least primitive element of the multiplicative group.
    Elt generator() const;
    /// Multiplicative order; throws on a == 0.
    std::uint32_t order_of(Elt a) const;

    /// Scalar embedding of an integer via repeated addition of 1 (mod p).
    Elt from_int(long long v) const;
    Elt from_coeffs(std::span<const int> coeffs) const;
    std::vector<int> to_coeffs(Elt a) const;

    /// Conjugate x -> x^(p^(m/2)); requires even m.
    Elt conj(Elt a) const;
    bool has_conj() const { return m() % 2 == 0; }

    /// Human-readable rendering, e.g. "2w+1" for index 7 over GF(9).
    std::string to_string(Elt a) const;

    bool operator==(const Field& o) const { return d_ == o.d_; }
    bool operator!=(const Field& o) const { return d_ != o.d_; }

    const detail::FieldData* data() const { return d_.get(); }

private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> d_;
};

/// Checked element: carries its field so cross-field arithmetic is an error
/// and equality is "same field and same index".
struct FqElem {
    Field field;
    Elt v = 0;

    FqElem(Field f, Elt x) : field(std::move(f)), v(x) {}

    friend FqElem operator+(const FqElem& a, const FqElem& b) { return {a.same(b), a.field.add(a.v, b.v)}; }
    friend FqElem operator-(const FqElem& a, const FqElem& b) { return {a.same(b), a.field.sub(a.v, b.v)}; }
    friend FqElem operator*(const FqElem& a, const FqElem& b) { return {a.same(b), a.field.mul(a.v, b.v)}; }
    friend FqElem operator/(const FqElem& a, const FqElem& b) { return {a.same(b), a.field.div(a.v, b.v)}; }
    FqElem operator-() const { return {field, field.neg(v)}; }
    friend bool operator==(const FqElem& a, const FqElem& b) { return a.field == b.field && a.v == b.v; }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

private:
    Field same(const FqElem& o) const {
        if (field != o.field) throw std::invalid_argument("field mismatch between elements");
        return field;
    }
};

/**
 * The quadratic extension view GF(q^2) over GF(q) used by all Hermitian
 * machinery: the embedding GF(q) -> GF(q^2), its inverse on the embedded
 * image, the norm map N(x) = x^(q+1), the order-(q+1) unity subgroup and a
 * representative set of GF(q^2)* / GF(q)*.
 *
 * Every "choose any" is resolved to the minimal-index choice so that
 * construction traces are reproducible.
 */
class QuadExt {
public:
    static QuadExt make(const Field& base);
    static QuadExt make(const Field& base, const Field& ext);

    const Field& base() const { return base_; }
    const Field& ext() const { return ext_; }
    std::uint32_t q() const { return base_.q(); }

    Elt embed(Elt base_elt) const;
    /// Inverse of embed; empty when x is outside the embedded base field.
    std::optional<Elt> project(Elt ext_elt) const;

    Elt conj(Elt x) const { return ext_.conj(x); }
    /// N(x) = x^(q+1) as an element of the base field.
    Elt norm(Elt x) const;
    /// N(x) left inside the extension field.
    Elt norm_in_ext(Elt x) const;

    /// Minimal-index beta with N(beta) = c; throws on c == 0.
    Elt solve_norm_equation(Elt c_base) const;

    /// The q+1 solutions of x^(q+1) = 1, listed as powers of unity_generator().
    const std::vector<Elt>& unity_subgroup() const;
    /// Minimal-index primitive (q+1)-th root of unity.
    Elt unity_generator() const;

    /// q+1 pairwise-inequivalent coset representatives of GF(q^2)*/GF(q)*,
    /// minimal-index first (so representative 0 is always 1).
    const std::vector<Elt>& coset_representatives() const;

private:
    QuadExt(Field base, Field ext);
    void build();

    Field base_;
    Field ext_;
    std::vector<Elt> embed_;           // base index -> ext index
    std::vector<Elt> project_;         // ext index -> base index or sentinel
    std::vector<Elt> norm_preimage_;   // base index -> minimal ext preimage
    std::vector<Elt> unity_;
    Elt xi_ = 0;
    std::vector<Elt> coset_reps_;
};

namespace polyops {
/// Deterministic least monic irreducible of degree m over GF(p).
std::vector<int> least_irreducible(int p, int m);
bool is_irreducible(std::span<const int> poly, int p);
bool is_prime(long long n);
}  // namespace polyops

}  // namespace grl
