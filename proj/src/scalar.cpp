#include "lmmt/scalar.hpp"

#include <cctype>
#include <ostream>

namespace lmmt {

namespace {

bool square_free(long d) {
    if (d < 2) return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

Scalar::Scalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    if (sgn(b_) != 0 && !square_free(d_)) {
        throw Error("quadratic field tag must be square-free and > 1, got " + std::to_string(d_));
    }
    normalize();
}

Scalar Scalar::sqrt(long d) { return Scalar(Rational(0), Rational(1), d); }

void Scalar::normalize() {
    if (sgn(b_) == 0) d_ = 1;
}

long Scalar::combine_field(const Scalar& x, const Scalar& y) {
    if (x.d_ == 1) return y.d_;
    if (y.d_ == 1 || y.d_ == x.d_) return x.d_;
    throw FieldMismatch("cannot combine sqrt(" + std::to_string(x.d_) + ") with sqrt(" +
                        std::to_string(y.d_) + ")");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = combine_field(*this, o);
    a_ += o.a_;
    if (sgn(o.b_) != 0) b_ += o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = combine_field(*this, o);
    a_ -= o.a_;
    if (sgn(o.b_) != 0) b_ -= o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    const long d = combine_field(*this, o);
    if (is_rational() && o.is_rational()) {
        a_ *= o.a_;
        return *this;
    }
    // (a + b r)(c + e r) = (ac + bed) + (ae + bc) r
    Rational na = a_ * o.a_ + b_ * o.b_ * d;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    d_ = d;
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (is_rational()) return Scalar(Rational(1) / a_);
    // 1/(a + b r) = (a - b r)/(a^2 - d b^2); the norm is nonzero as d is not a square.
    Rational norm = a_ * a_ - b_ * b_ * d_;
    return Scalar(a_ / norm, -b_ / norm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_rational()) {
        if (sgn(o.a_) == 0) throw Error("division by zero");
        combine_field(*this, o);
        a_ /= o.a_;
        if (sgn(b_) != 0) b_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

bool operator==(const Scalar& x, const Scalar& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.is_rational() || x.d_ == y.d_;
}

std::size_t Scalar::bit_size() const {
    std::size_t s = mpz_sizeinbase(a_.get_num_mpz_t(), 2) + mpz_sizeinbase(a_.get_den_mpz_t(), 2);
    if (sgn(b_) != 0) {
        s += mpz_sizeinbase(b_.get_num_mpz_t(), 2) + mpz_sizeinbase(b_.get_den_mpz_t(), 2);
    }
    return s;
}

std::string Scalar::to_string() const {
    if (is_rational()) return a_.get_str();
    std::string out;
    if (sgn(a_) != 0) out = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
    out += b_.get_str() + "*sqrt(" + std::to_string(d_) + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Rational parse_rational(std::string_view text) {
    const std::string t = trim(text);
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    const std::size_t digits_begin = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i == digits_begin) throw Error("malformed rational '" + t + "'");
    if (i < t.size() && t[i] == '/') {
        ++i;
        const std::size_t den_begin = i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        if (i == den_begin) throw Error("malformed rational '" + t + "'");
    }
    if (i != t.size()) throw Error("malformed rational '" + t + "'");
    std::string s = t;
    if (s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error("malformed rational '" + t + "'");
    if (sgn(q.get_den()) == 0) throw Error("zero denominator in '" + t + "'");
    q.canonicalize();
    return q;
}

Scalar parse_scalar(std::string_view text) {
    const std::string t = trim(text);
    const auto sq = t.find("sqrt(");
    if (sq == std::string::npos) return Scalar(parse_rational(t));

    const auto close = t.find(')', sq);
    if (close == std::string::npos || close + 1 != t.size()) {
        throw Error("malformed scalar '" + t + "'");
    }
    const long d = std::stol(t.substr(sq + 5, close - sq - 5));

    // Split "<a><sign><b>*sqrt(d)" at the sign that starts the irrational part.
    std::string head = t.substr(0, sq);
    if (!head.empty() && head.back() == '*') head.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if (head[i] == '+' || head[i] == '-') {
            split = i;
            break;
        }
    }
    Rational a(0), b(1);
    std::string coef = head;
    if (split != std::string::npos) {
        a = parse_rational(head.substr(0, split));
        coef = head.substr(split);
    }
    if (coef.empty() || coef == "+") {
        b = 1;
    } else if (coef == "-") {
        b = -1;
    } else {
        b = parse_rational(coef);
    }
    return Scalar(a, b, d);
}

}  // namespace lmmt
