#include "leibniz/scalar.hpp"

#include <cctype>
#include <ostream>

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t reduce_mod(const mpz_class& value, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p == 2) throw FieldError("characteristic 2 is not supported");
    if (p > max_prime) throw FieldError("modulus " + std::to_string(p) + " exceeds 2^31-1");
    if (!is_prime_number(p)) throw FieldError(std::to_string(p) + " is not prime");
    return FieldSpec(Kind::Prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "rational" || text == "rationals" || text == "Q") return rationals();
    constexpr std::string_view prefix = "prime:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto digits = text.substr(prefix.size());
        if (!all_digits(digits) || digits.size() > 12)
            throw FieldError("malformed prime modulus '" + std::string(digits) + "'");
        return prime(std::stoull(std::string(digits)));
    }
    throw FieldError("unknown field '" + std::string(text) + "' (expected rational or prime:P)");
}

std::string FieldSpec::to_string() const {
    return is_prime() ? "prime:" + std::to_string(p_) : "rational";
}

Scalar Scalar::from_int(const FieldSpec& f, long value) {
    if (f.is_prime()) return Scalar(f, reduce_mod(mpz_class(value), f.characteristic()));
    return Scalar(f, mpq_class(value));
}

Scalar Scalar::from_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("zero denominator");
    if (f.is_prime()) {
        const auto p = f.characteristic();
        const auto d = reduce_mod(den, p);
        if (d == 0) throw DomainError("denominator divisible by " + std::to_string(p));
        const auto n = reduce_mod(num, p);
        return Scalar(f, n * pow_mod(d, p - 2, p) % p);
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(f, std::move(q));
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& f) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const auto num_text = body.substr(0, slash);
    const auto den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text))
        throw ParseError("malformed scalar '" + std::string(text) + "'");
    mpz_class num(std::string(num_text), 10);
    mpz_class den(std::string(den_text), 10);
    if (negative) num = -num;
    return from_fraction(f, num, den);
}

bool Scalar::is_zero() const noexcept {
    if (auto q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
    if (auto q = std::get_if<mpq_class>(&value_)) return *q == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return *q;
    throw FieldError("rational() on a prime-field scalar");
}

std::uint64_t Scalar::residue() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r;
    throw FieldError("residue() on a rational scalar");
}

void Scalar::require_same_field(const Scalar& other) const {
    if (!(field_ == other.field_))
        throw FieldError("mixed fields: " + field_.to_string() + " and " + other.field_.to_string());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (auto q = std::get_if<mpq_class>(&value_)) return Scalar(field_, mpq_class(1 / *q));
    const auto p = field_.characteristic();
    return Scalar(field_, pow_mod(std::get<std::uint64_t>(value_), p - 2, p));
}

Scalar Scalar::operator-() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return Scalar(field_, mpq_class(-*q));
    const auto r = std::get<std::uint64_t>(value_);
    return Scalar(field_, r == 0 ? 0 : field_.characteristic() - r);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto q = std::get_if<mpq_class>(&value_)) {
        *q += std::get<mpq_class>(rhs.value_);
    } else {
        auto& r = std::get<std::uint64_t>(value_);
        r = (r + std::get<std::uint64_t>(rhs.value_)) % field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto q = std::get_if<mpq_class>(&value_)) {
        *q -= std::get<mpq_class>(rhs.value_);
    } else {
        const auto p = field_.characteristic();
        auto& r = std::get<std::uint64_t>(value_);
        r = (r + p - std::get<std::uint64_t>(rhs.value_)) % p;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto q = std::get_if<mpq_class>(&value_)) {
        *q *= std::get<mpq_class>(rhs.value_);
    } else {
        auto& r = std::get<std::uint64_t>(value_);
        r = r * std::get<std::uint64_t>(rhs.value_) % field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return q->get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const FieldSpec& f) { return os << f.to_string(); }

Scalar arith(ArithOp op, const Scalar& a, const Scalar& b) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
        case ArithOp::Neg: return -a;
        case ArithOp::Inv: return a.inverse();
    }
    throw DomainError("unknown arithmetic operation");
}

Scalar arith(ArithOp op, const Scalar& a) {
    if (op != ArithOp::Neg && op != ArithOp::Inv) throw DomainError("binary operation needs two operands");
    return arith(op, a, a);
}

}  // namespace leibniz
