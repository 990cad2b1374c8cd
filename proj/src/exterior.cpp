#include "lmmt/exterior.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace lmmt {

MultiIndex::MultiIndex(unsigned n, Mask mask) : n_(n), mask_(mask) {
    if (n > kMaxDimension) throw DimensionError("ambient dimension exceeds 64");
    if (n < 64 && (mask >> n) != 0) throw DimensionError("index exceeds ambient dimension");
}

MultiIndex MultiIndex::of(unsigned n, std::initializer_list<unsigned> indices) {
    return MultiIndex(n, mask_of(indices));
}

std::vector<unsigned> MultiIndex::indices() const { return indices_of(mask_); }

std::string MultiIndex::to_string() const {
    std::string out;
    for (unsigned i : indices()) {
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    }
    return out;
}

Mask full_mask(unsigned n) { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

Mask mask_of(std::initializer_list<unsigned> indices) {
    Mask m = 0;
    for (unsigned i : indices) {
        if (i == 0 || i > kMaxDimension) throw DimensionError("basis indices are 1-based");
        const Mask bit = Mask{1} << (i - 1);
        if (m & bit) throw DegreeError("repeated basis index");
        m |= bit;
    }
    return m;
}

std::vector<unsigned> indices_of(Mask m) {
    std::vector<unsigned> out;
    while (m) {
        out.push_back(static_cast<unsigned>(std::countr_zero(m)) + 1);
        m &= m - 1;
    }
    return out;
}

int wedge_sign(Mask a, Mask b) {
    unsigned inversions = 0;
    Mask rest = b;
    while (rest) {
        const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
        rest &= rest - 1;
        if (j < 63) inversions += static_cast<unsigned>(std::popcount(a >> (j + 1)));
    }
    return (inversions & 1U) ? -1 : 1;
}

std::size_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

struct BasisTable {
    std::vector<Mask> masks;
    std::map<Mask, std::size_t> position;
};

const BasisTable& basis_table(unsigned n, unsigned k) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, BasisTable> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (n > 30) throw DimensionError("basis enumeration limited to n <= 30");

    BasisTable t;
    if (k <= n) {
        if (k == 0) {
            t.masks.push_back(0);
        } else {
            // Gosper's hack walks popcount-k masks in increasing order.
            Mask m = (Mask{1} << k) - 1;
            const Mask limit = Mask{1} << n;
            while (m < limit) {
                t.masks.push_back(m);
                const Mask c = m & (~m + 1);
                const Mask r = m + c;
                m = (((r ^ m) >> 2) / c) | r;
            }
        }
    }
    for (std::size_t i = 0; i < t.masks.size(); ++i) t.position.emplace(t.masks[i], i);
    return cache.emplace(key, std::move(t)).first->second;
}

template <class Kind>
Exterior<Kind> wedge_impl(const Exterior<Kind>& a, const Exterior<Kind>& b) {
    if (a.dimension() != b.dimension()) throw DimensionError("wedge: ambient dimension mismatch");
    const unsigned n = a.dimension();
    const unsigned deg = a.degree() + b.degree();
    if (deg > n) return Exterior<Kind>(n, deg);
    Exterior<Kind> out(n, deg);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            Scalar c = ca * cb;
            if (wedge_sign(ma, mb) < 0) c = -c;
            out.add_term(ma | mb, c);
        }
    }
    return out;
}

template <class Kind>
Exterior<Kind> reindex_impl(const Exterior<Kind>& a, unsigned new_n, std::span<const unsigned> target) {
    if (target.size() < a.dimension()) throw DimensionError("reindex: target map too short");
    Exterior<Kind> out(new_n, a.degree());
    for (const auto& [m, c] : a.terms()) {
        // Place the indices in their new positions one by one, tracking the sign.
        Mask placed = 0;
        int sign = 1;
        for (unsigned i : indices_of(m)) {
            const unsigned t = target[i - 1];
            if (t == 0 || t > new_n) throw DimensionError("reindex: target index out of range");
            const Mask bit = Mask{1} << (t - 1);
            if (placed & bit) throw DimensionError("reindex: target map is not injective");
            sign *= wedge_sign(placed, bit);
            placed |= bit;
        }
        out.add_term(placed, sign < 0 ? -c : c);
    }
    return out;
}

Scalar determinant_small(std::vector<std::vector<Scalar>> m) {
    // Exact Gaussian elimination; the matrices here are at most n x n with n <= 12.
    const std::size_t n = m.size();
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Scalar();
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        const Scalar inv = m[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            const Scalar f = m[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

}  // namespace

const std::vector<Mask>& basis_masks(unsigned n, unsigned k) { return basis_table(n, k).masks; }

std::size_t basis_position(unsigned n, Mask m) {
    const auto& t = basis_table(n, static_cast<unsigned>(std::popcount(m)));
    auto it = t.position.find(m);
    if (it == t.position.end()) throw DimensionError("mask outside ambient dimension");
    return it->second;
}

template <class Kind>
std::string Exterior<Kind>::to_string() const {
    if (terms_.empty()) return "0";
    const char letter = std::is_same_v<Kind, FormKind> ? 'e' : 'E';
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string coef = c.to_string();
        bool negative = c.is_rational() && sgn(c.rational_part()) < 0;
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << '-';
        if (negative) coef = (-c).to_string();
        first = false;
        if (m == 0) {
            os << coef;
            continue;
        }
        if (coef != "1") os << coef << '*';
        os << letter;
        const auto idx = indices_of(m);
        const bool wide = n_ > 9;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (wide && i) os << '_';
            os << idx[i];
        }
    }
    return os.str();
}


KForm wedge(const KForm& a, const KForm& b) { return wedge_impl(a, b); }
KVector wedge(const KVector& a, const KVector& b) { return wedge_impl(a, b); }

KForm contract(const KVector& p, const KForm& a) {
    if (p.dimension() != a.dimension()) throw DimensionError("contract: ambient dimension mismatch");
    if (p.degree() > a.degree()) throw DegreeError("contract: multivector degree exceeds form degree");
    KForm out(a.dimension(), a.degree() - p.degree());
    for (const auto& [mp, cp] : p.terms()) {
        for (const auto& [ma, ca] : a.terms()) {
            if ((mp & ma) != mp) continue;
            // e^J = sign * e^I ∧ e^(J\I), so E_I ⌟ e^J = sign * e^(J\I).
            const Mask rest = ma & ~mp;
            Scalar c = cp * ca;
            if (wedge_sign(mp, rest) < 0) c = -c;
            out.add_term(rest, c);
        }
    }
    return out;
}

Scalar pair(const KForm& a, const KVector& p) {
    if (p.dimension() != a.dimension()) throw DimensionError("pair: ambient dimension mismatch");
    if (p.degree() != a.degree()) throw DegreeError("pair: degrees differ");
    Scalar s;
    for (const auto& [m, c] : a.terms()) {
        const Scalar q = p.coefficient(m);
        if (!q.is_zero()) s += c * q;
    }
    return s;
}

KForm hodge_star(const KForm& a) {
    const unsigned n = a.dimension();
    const Mask all = full_mask(n);
    KForm out(n, n - a.degree());
    for (const auto& [m, c] : a.terms()) {
        const Mask comp = all & ~m;
        out.add_term(comp, wedge_sign(m, comp) < 0 ? -c : c);
    }
    return out;
}

KForm reindex(const KForm& a, unsigned new_n, std::span<const unsigned> target) {
    return reindex_impl(a, new_n, target);
}

KVector reindex(const KVector& a, unsigned new_n, std::span<const unsigned> target) {
    return reindex_impl(a, new_n, target);
}

KForm volume_form(unsigned n) { return KForm::basis_mask(n, full_mask(n)); }

KVector vector_of(const Vector& coeffs) {
    return KVector::from_vector(static_cast<unsigned>(coeffs.size()), 1, coeffs);
}

KForm covector_of(const Vector& coeffs) {
    return KForm::from_vector(static_cast<unsigned>(coeffs.size()), 1, coeffs);
}

Scalar evaluate(const KForm& a, const std::vector<Vector>& args) {
    if (args.size() != a.degree()) throw DegreeError("evaluate: wrong number of arguments");
    Scalar total;
    for (const auto& [m, c] : a.terms()) {
        const auto idx = indices_of(m);
        std::vector<std::vector<Scalar>> sub(idx.size(), std::vector<Scalar>(idx.size()));
        for (std::size_t r = 0; r < idx.size(); ++r) {
            for (std::size_t k = 0; k < args.size(); ++k) sub[r][k] = args[k].at(idx[r] - 1);
        }
        total += c * determinant_small(std::move(sub));
    }
    return total;
}

template class Exterior<FormKind>;
template class Exterior<VectorKind>;

}  // namespace lmmt
