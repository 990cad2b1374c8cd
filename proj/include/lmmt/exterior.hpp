#pragma once

#include "lmmt/linalg.hpp"
#include "lmmt/scalar.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace lmmt {

class DimensionError : public Error {
public:
    using Error::Error;
};

class DegreeError : public Error {
public:
    using Error::Error;
};

/// Bit i (0-based) set means basis index i+1 is present.
using Mask = std::uint64_t;

inline constexpr unsigned kMaxDimension = 64;

/// Set of basis indices in ascending order, stored as a bitmask.
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(unsigned n, Mask mask);
    /// Indices are 1-based; they must be distinct.
    static MultiIndex of(unsigned n, std::initializer_list<unsigned> indices);

    unsigned dimension() const { return n_; }
    Mask mask() const { return mask_; }
    unsigned degree() const { return static_cast<unsigned>(std::popcount(mask_)); }
    /// 1-based indices in ascending order.
    std::vector<unsigned> indices() const;
    /// "1,2,3"
    std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    unsigned n_ = 0;
    Mask mask_ = 0;
};

Mask full_mask(unsigned n);
/// 1-based indices -> mask.
Mask mask_of(std::initializer_list<unsigned> indices);
std::vector<unsigned> indices_of(Mask m);

/// (-1)^(number of pairs i in a, j in b with i > j): sign of e_a ^ e_b relative to e_(a|b).
int wedge_sign(Mask a, Mask b);

/// All masks of popcount k below 2^n, ascending numerically. This fixes the
/// canonical basis of every exterior power used in the library.
const std::vector<Mask>& basis_masks(unsigned n, unsigned k);
/// Position of `m` in basis_masks(n, popcount(m)).
std::size_t basis_position(unsigned n, Mask m);
std::size_t binomial(unsigned n, unsigned k);

struct FormKind {};
struct VectorKind {};

/// Sparse element of a single exterior power over a fixed n-dimensional basis.
/// Kind distinguishes forms (on V) from multivectors (in V).
template <class Kind>
class Exterior {
public:
    Exterior() = default;
    Exterior(unsigned n, unsigned degree) : n_(n), degree_(degree) { check_dim(n); }

    /// Coefficient `c` times the basis element on the 1-based `indices`.
    static Exterior basis(unsigned n, std::initializer_list<unsigned> indices, Scalar c = 1) {
        Exterior e(n, static_cast<unsigned>(indices.size()));
        e.add_term(mask_of(indices), std::move(c));
        return e;
    }
    static Exterior basis_mask(unsigned n, Mask m, Scalar c = 1) {
        Exterior e(n, static_cast<unsigned>(std::popcount(m)));
        e.add_term(m, std::move(c));
        return e;
    }
    static Exterior scalar(unsigned n, Scalar c) { return basis_mask(n, 0, std::move(c)); }
    /// Coefficients in the canonical basis basis_masks(n, degree).
    static Exterior from_vector(unsigned n, unsigned degree, const Vector& coeffs) {
        Exterior e(n, degree);
        const auto& masks = basis_masks(n, degree);
        if (coeffs.size() != masks.size()) throw DimensionError("coefficient vector has wrong length");
        for (std::size_t i = 0; i < masks.size(); ++i) e.add_term(masks[i], coeffs[i]);
        return e;
    }

    unsigned dimension() const { return n_; }
    unsigned degree() const { return degree_; }
    const std::map<Mask, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coefficient(Mask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(Mask m, const Scalar& c) {
        if (std::popcount(m) != static_cast<int>(degree_)) {
            throw DegreeError("term degree does not match element degree");
        }
        if (n_ < 64 && (m >> n_) != 0) throw DimensionError("index exceeds ambient dimension");
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Vector to_vector() const {
        Vector v(binomial(n_, degree_));
        for (const auto& [m, c] : terms_) v[basis_position(n_, m)] = c;
        return v;
    }

    Exterior& operator+=(const Exterior& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Exterior& operator-=(const Exterior& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Exterior& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend Exterior operator+(Exterior a, const Exterior& b) { return a += b; }
    friend Exterior operator-(Exterior a, const Exterior& b) { return a -= b; }
    friend Exterior operator*(const Scalar& s, Exterior a) { return a *= s; }
    Exterior operator-() const { return Scalar(-1) * *this; }

    friend bool operator==(const Exterior& a, const Exterior& b) {
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Exterior& a, const Exterior& b) { return !(a == b); }

    /// "e123 + 1/2*e145" style rendering (E for multivectors).
    std::string to_string() const;

private:
    static void check_dim(unsigned n) {
        if (n > kMaxDimension) throw DimensionError("ambient dimension exceeds 64");
    }
    void check_same(const Exterior& o) const {
        if (o.n_ != n_) throw DimensionError("ambient dimension mismatch");
        if (o.degree_ != degree_) throw DegreeError("adding elements of different degree");
    }

    unsigned n_ = 0;
    unsigned degree_ = 0;
    std::map<Mask, Scalar> terms_;
};

using KForm = Exterior<FormKind>;
using KVector = Exterior<VectorKind>;

extern template class Exterior<FormKind>;
extern template class Exterior<VectorKind>;

/// Graded-commutative wedge product; zero when the degrees exceed n.
KForm wedge(const KForm& a, const KForm& b);
KVector wedge(const KVector& a, const KVector& b);

/// Partial evaluation (p ⌟ a)(Y...) = a(X1..Xs, Y...) for p = X1∧..∧Xs.
KForm contract(const KVector& p, const KForm& a);

/// Full pairing <a, p> for equal degrees, with <e^I, E_I> = 1.
Scalar pair(const KForm& a, const KVector& p);

/// Hodge star for the standard orthonormal basis and orientation e_1..e_n:
/// e_I ∧ ⋆e_I = vol.
KForm hodge_star(const KForm& a);

/// Moves basis index i (1-based) to target[i-1] in an ambient space of
/// dimension new_n, reordering signs accordingly.
KForm reindex(const KForm& a, unsigned new_n, std::span<const unsigned> target);
KVector reindex(const KVector& a, unsigned new_n, std::span<const unsigned> target);

/// e_1 ∧ ... ∧ e_n.
KForm volume_form(unsigned n);

/// Element of degree 1 with the given coefficients.
KVector vector_of(const Vector& coeffs);
KForm covector_of(const Vector& coeffs);

/// Evaluates a form on a list of vectors by direct multilinear expansion.
Scalar evaluate(const KForm& a, const std::vector<Vector>& args);

}  // namespace lmmt
