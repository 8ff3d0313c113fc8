#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace leibniz {

/// The ground field: the rationals or a prime field GF(p) with p odd.
///
/// Characteristic two is rejected on construction; every algebraic
/// statement in this library assumes 2 is invertible.
class FieldSpec {
public:
    enum class Kind { Rationals, Prime };

    /// Largest accepted modulus. Residue products must fit in 64 bits.
    static constexpr std::uint64_t max_prime = (std::uint64_t{1} << 31) - 1;

    static FieldSpec rationals() noexcept { return FieldSpec{}; }
    /// Throws FieldError unless p is an odd prime not exceeding max_prime.
    static FieldSpec prime(std::uint64_t p);
    /// Accepts "rational" or "prime:P".
    static FieldSpec parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == Kind::Prime; }
    /// 0 for the rationals.
    std::uint64_t characteristic() const noexcept { return p_; }

    /// "rational" or "prime:P"; accepted back by parse().
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec() = default;
    FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    Kind kind_ = Kind::Rationals;
    std::uint64_t p_ = 0;
};

/// An exact field element tagged with its field.
///
/// Rationals are kept reduced with a positive denominator; prime-field
/// values are canonical residues in [0, p). Arithmetic between different
/// fields throws FieldError; division by zero throws DomainError.
class Scalar {
public:
    /// Zero of the rationals.
    Scalar() : field_(FieldSpec::rationals()), value_(mpq_class(0)) {}

    static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
    static Scalar from_int(const FieldSpec& f, long value);
    /// Throws DomainError if den is zero (or divisible by p).
    static Scalar from_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den);
    /// Grammar: `[-]digits` or `[-]digits/digits`. Throws ParseError / DomainError.
    static Scalar parse(std::string_view text, const FieldSpec& f);

    const FieldSpec& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Numerator and denominator of a rational value. Throws FieldError over GF(p).
    const mpq_class& rational() const;
    /// Residue of a prime-field value. Throws FieldError over the rationals.
    std::uint64_t residue() const;

    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Values in different fields compare unequal.
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Canonical printed form; parse(to_string()) round-trips.
    std::string to_string() const;

private:
    Scalar(FieldSpec f, std::variant<mpq_class, std::uint64_t> v)
        : field_(f), value_(std::move(v)) {}

    void require_same_field(const Scalar& other) const;

    FieldSpec field_;
    std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const FieldSpec& f);

enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv };

/// Dispatching form of the scalar operations; `b` is ignored for Neg and Inv.
Scalar arith(ArithOp op, const Scalar& a, const Scalar& b);
Scalar arith(ArithOp op, const Scalar& a);

}  // namespace leibniz
