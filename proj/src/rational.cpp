#include "supercoinv/rational.hpp"

#include <climits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace supercoinv {

namespace {

constexpr int64_t kSmallMin = INT64_MIN + 1;

bool fits_small(__int128 v) { return v >= kSmallMin && v <= INT64_MAX; }

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b)
{
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

unsigned __int128 abs128(__int128 v) { return v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v); }

mpz_class mpz_from_i128(__int128 v)
{
    bool neg = v < 0;
    unsigned __int128 u = abs128(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & ~static_cast<unsigned long>(0)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(int64_t num, int64_t den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    normalize_small(num, den);
}

Rational::Rational(const Integer& v) { set_big(mpq_class(v)); }

Rational::Rational(const mpq_class& v)
{
    mpq_class c(v);
    c.canonicalize();
    set_big(std::move(c));
}

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_)
{
    if (other.big_)
        big_ = std::make_unique<mpq_class>(*other.big_);
}

Rational& Rational::operator=(const Rational& other)
{
    if (this == &other)
        return *this;
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_)
        big_ = std::make_unique<mpq_class>(*other.big_);
    else
        big_.reset();
    return *this;
}

Rational Rational::parse(const std::string& text)
{
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("Rational::parse: bad literal '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

void Rational::set_big(mpq_class v)
{
    const mpz_class& n = v.get_num();
    const mpz_class& d = v.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != INT64_MIN) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(v));
}

void Rational::normalize_small(__int128 num, __int128 den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    if (den != 1) {
        auto g = static_cast<__int128>(gcd128(abs128(num), static_cast<unsigned __int128>(den)));
        if (g != 1) {
            num /= g;
            den /= g;
        }
    }
    if (fits_small(num) && den <= INT64_MAX) {
        num_ = static_cast<int64_t>(num);
        den_ = static_cast<int64_t>(den);
        big_.reset();
        return;
    }
    set_big(mpq_class(mpz_from_i128(num), mpz_from_i128(den)));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const
{
    if (big_)
        return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

Integer Rational::numerator() const { return big_ ? Integer(big_->get_num()) : Integer(static_cast<long>(num_)); }

Integer Rational::denominator() const { return big_ ? Integer(big_->get_den()) : Integer(static_cast<long>(den_)); }

mpq_class Rational::to_mpq() const
{
    if (big_)
        return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
}

std::string Rational::str() const
{
    if (big_)
        return big_->get_str();
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const
{
    Rational r(*this);
    if (r.big_)
        *r.big_ = -*r.big_;
    else
        r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            int64_t s;
            if (!__builtin_add_overflow(num_, o.num_, &s) && s != INT64_MIN) {
                num_ = s;
                return *this;
            }
            normalize_small(static_cast<__int128>(num_) + o.num_, 1);
            return *this;
        }
        int64_t g = std::gcd(den_, o.den_);
        __int128 n = static_cast<__int128>(num_) * (o.den_ / g) + static_cast<__int128>(o.num_) * (den_ / g);
        __int128 d = static_cast<__int128>(den_ / g) * o.den_;
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (g != 1) {
            // gcd(n, d) divides g
            auto t = static_cast<int64_t>(gcd128(abs128(n) % static_cast<unsigned __int128>(g), static_cast<unsigned __int128>(g)));
            if (t == 0)
                t = g;
            n /= t;
            d /= t;
        }
        if (fits_small(n) && d <= INT64_MAX) {
            num_ = static_cast<int64_t>(n);
            den_ = static_cast<int64_t>(d);
            return *this;
        }
        normalize_small(n, d);
        return *this;
    }
    set_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1) {
        int64_t s;
        if (!__builtin_sub_overflow(num_, o.num_, &s) && s != INT64_MIN) {
            num_ = s;
            return *this;
        }
    }
    return *this += -o;
}

Rational& Rational::operator*=(const Rational& o)
{
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            int64_t p;
            if (!__builtin_mul_overflow(num_, o.num_, &p) && p != INT64_MIN) {
                num_ = p;
                return *this;
            }
            normalize_small(static_cast<__int128>(num_) * o.num_, 1);
            return *this;
        }
        if (num_ == 0 || o.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
        int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
        __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
        __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
        if (fits_small(n) && d <= INT64_MAX) {
            num_ = static_cast<int64_t>(n);
            den_ = static_cast<int64_t>(d);
            return *this;
        }
        normalize_small(n, d);
        return *this;
    }
    set_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("Rational: division by zero");
    if (big_)
        return Rational(mpq_class(1 / *big_));
    Rational r;
    r.normalize_small(den_, num_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

void Rational::submul(const Rational& a, const Rational& b)
{
    if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        int64_t p, s;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_sub_overflow(num_, p, &s) && s != INT64_MIN) {
            num_ = s;
            return;
        }
    }
    *this -= a * b;
}

bool operator==(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_)
        return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_)
        return *a.big_ == *b.big_;
    return false;  // normalized forms differ in storage class only when values differ
}

bool operator<(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_)
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace supercoinv
