#include "satake/rational.hpp"

#include <cstdlib>

namespace satake {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 x) { return x < 0 ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b)
{
    if ((a >> 64) == 0 && (b >> 64) == 0) {
        std::uint64_t x = static_cast<std::uint64_t>(a), y = static_cast<std::uint64_t>(b);
        while (y) {
            std::uint64_t t = x % y;
            x = y;
            y = t;
        }
        return x;
    }
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from128(i128 v)
{
    const bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
}

bool fits64(i128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

}  // namespace

mpz_class Rational::mpz_from(std::int64_t v)
{
    static_assert(sizeof(long) == 8, "64-bit long expected");
    return mpz_class(static_cast<long>(v));
}

mpq_class Rational::to_mpq() const
{
    if (big_)
        return *big_;
    return mpq_class(mpz_from(n_), mpz_from(d_));
}

void Rational::assign(const mpq_class& q)
{
    mpq_class c = q;
    c.canonicalize();
    if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
        n_ = c.get_num().get_si();
        d_ = c.get_den().get_si();
        big_.reset();
    } else {
        big_ = std::make_unique<mpq_class>(std::move(c));
    }
}

void Rational::assign128(i128 num, i128 den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        n_ = 0;
        d_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd128(uabs(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (fits64(num) && fits64(den)) {
        n_ = static_cast<std::int64_t>(num);
        d_ = static_cast<std::int64_t>(den);
        big_.reset();
    } else {
        big_ = std::make_unique<mpq_class>(mpz_from128(num), mpz_from128(den));
    }
}

Rational& Rational::operator+=(const Rational& o)
{
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            std::int64_t r;
            if (!__builtin_add_overflow(n_, o.n_, &r)) {
                n_ = r;
                return *this;
            }
        }
        assign128(static_cast<i128>(n_) * o.d_ + static_cast<i128>(o.n_) * d_, static_cast<i128>(d_) * o.d_);
        return *this;
    }
    assign(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            std::int64_t r;
            if (!__builtin_sub_overflow(n_, o.n_, &r)) {
                n_ = r;
                return *this;
            }
        }
        assign128(static_cast<i128>(n_) * o.d_ - static_cast<i128>(o.n_) * d_, static_cast<i128>(d_) * o.d_);
        return *this;
    }
    assign(to_mpq() - o.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            std::int64_t r;
            if (!__builtin_mul_overflow(n_, o.n_, &r)) {
                n_ = r;
                return *this;
            }
        }
        assign128(static_cast<i128>(n_) * o.n_, static_cast<i128>(d_) * o.d_);
        return *this;
    }
    assign(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    if (!big_ && !o.big_) {
        assign128(static_cast<i128>(n_) * o.d_, static_cast<i128>(d_) * o.n_);
        return *this;
    }
    assign(to_mpq() / o.to_mpq());
    return *this;
}

Rational operator-(const Rational& a)
{
    if (!a.big_ && a.n_ != INT64_MIN) {
        Rational r;
        r.n_ = -a.n_;
        r.d_ = a.d_;
        return r;
    }
    return Rational(mpq_class(-a.to_mpq()));
}

int compare(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        if (a.d_ == b.d_)
            return (a.n_ > b.n_) - (a.n_ < b.n_);
        i128 l = static_cast<i128>(a.n_) * b.d_, r = static_cast<i128>(b.n_) * a.d_;
        return (l > r) - (l < r);
    }
    return cmp(a.to_mpq(), b.to_mpq()) < 0 ? -1 : (cmp(a.to_mpq(), b.to_mpq()) > 0 ? 1 : 0);
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    if (q.big_)
        return os << q.big_->get_str();
    os << q.n_;
    if (q.d_ != 1)
        os << "/" << q.d_;
    return os;
}

}  // namespace satake
