#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace supercoinv {

using Integer = mpz_class;

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are stored
/// inline; anything larger spills into a heap-allocated mpq_class. Every
/// operation result is normalized back to the inline form when it fits, so
/// equality of representation implies equality of value.
class Rational {
public:
    Rational() = default;
    Rational(int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int64_t num, int64_t den);
    explicit Rational(const Integer& v);
    explicit Rational(const mpq_class& v);

    Rational(const Rational& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    static Rational parse(const std::string& text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    Integer numerator() const;
    Integer denominator() const;
    mpq_class to_mpq() const;
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    /// this -= a * b, the elimination kernel.
    void submul(const Rational& a, const Rational& b);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    Rational inverse() const;

private:
    void set_big(mpq_class v);
    void normalize_small(__int128 num, __int128 den);

    int64_t num_ = 0;
    int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace supercoinv
