#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lmmt {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when two irrational Scalars from different quadratic fields meet.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

using Rational = mpq_class;

/// Exact element a + b*sqrt(d) of Q(sqrt(d)).
///
/// A Scalar with b == 0 is a plain rational and combines with any field;
/// once b != 0 the tag d is fixed and mixing two different tags throws
/// FieldMismatch. d is square-free and > 1 whenever b != 0.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : a_(v) {}   // NOLINT(google-explicit-constructor)
    Scalar(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
    Scalar(Rational a, Rational b, long d);

    static Scalar sqrt(long d);

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt_part() const { return b_; }
    long field() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_one() const { return is_rational() && a_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    /// Bit length of all numerators and denominators; used for pivot choice.
    std::size_t bit_size() const;

    /// "p/q" or "p/q+r/s*sqrt(d)".
    std::string to_string() const;

private:
    static long combine_field(const Scalar& x, const Scalar& y);
    void normalize();

    Rational a_{0};
    Rational b_{0};
    long d_ = 1;
};

/// Parses the textual Scalar format written by Scalar::to_string.
/// Accepts "p", "p/q", "p/q+r/s*sqrt(d)", "r/s*sqrt(d)" and "sqrt(d)".
Scalar parse_scalar(std::string_view text);

/// Parses a plain rational "[-]digits[/digits]".
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace lmmt
