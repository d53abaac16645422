#ifndef OHK_FIELD_HPP
#define OHK_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ohk {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct FieldMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ground field: the rationals (p == 0) or a prime field F_p.
/// Elements of F_p are represented by integer Rat values in [0, p).
class Field {
  public:
    Field() : p_(0) {}
    static Field Q() { return Field(); }
    static Field Fp(std::uint64_t p);

    bool is_q() const { return p_ == 0; }
    std::uint64_t char_p() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    /// Brings an arbitrary rational into canonical form for this field.
    /// Over F_p a denominator is resolved through the modular inverse.
    Rat canon(const Rat& x) const;

    Rat add(const Rat& a, const Rat& b) const { return canon(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return canon(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return canon(a * b); }
    Rat neg(const Rat& a) const { return canon(-a); }
    Rat inv(const Rat& a) const;

    std::string name() const { return is_q() ? "Q" : "F" + std::to_string(p_); }
    static Field parse(const std::string& s);

    void require_same(const Field& o) const {
        if (*this != o)
            throw FieldMismatchError("field mismatch: " + name() + " vs " + o.name());
    }

  private:
    std::uint64_t p_;
};

/// A tagged exact scalar; arithmetic on mismatched tags is rejected.
class Scalar {
  public:
    Scalar(Field f, Rat v) : field_(f), value_(f.canon(std::move(v))) {}

    const Field& field() const { return field_; }
    const Rat& value() const { return value_; }

    Scalar operator+(const Scalar& o) const {
        field_.require_same(o.field_);
        return Scalar(field_, field_.add(value_, o.value_));
    }
    Scalar operator-(const Scalar& o) const {
        field_.require_same(o.field_);
        return Scalar(field_, field_.sub(value_, o.value_));
    }
    Scalar operator*(const Scalar& o) const {
        field_.require_same(o.field_);
        return Scalar(field_, field_.mul(value_, o.value_));
    }
    Scalar inverse() const { return Scalar(field_, field_.inv(value_)); }
    bool operator==(const Scalar& o) const {
        return field_ == o.field_ && value_ == o.value_;
    }

  private:
    Field field_;
    Rat value_;
};

/// Parses "3", "-2/5" etc.; throws std::invalid_argument on garbage.
Rat parse_rational(const std::string& s);
std::string rational_to_string(const Rat& x);

} // namespace ohk

#endif
