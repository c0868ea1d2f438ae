#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace satake {

// Exact rational with an inline int64 representation and a GMP fallback.
// Almost every entry in the modules handled here is a small integer or a
// small fraction; keeping those off the heap is what makes exact linear
// algebra on tensor products affordable. Values are always reduced with a
// positive denominator, and are demoted back to the inline form whenever
// they fit.
class Rational {
public:
    Rational() = default;
    template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
    Rational(I v)  // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_unsigned_v<I> && sizeof(I) >= sizeof(std::int64_t)) {
            if (v > static_cast<std::uint64_t>(INT64_MAX)) {
                big_ = std::make_unique<mpq_class>(mpz_class(std::to_string(v)));
                return;
            }
        }
        n_ = static_cast<std::int64_t>(v);
    }
    Rational(std::int64_t num, std::int64_t den) { assign128(num, den); }
    explicit Rational(const mpq_class& q) { assign(q); }

    Rational(const Rational& o) : n_(o.n_), d_(o.d_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o)
    {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    bool is_small() const { return !big_; }
    bool is_zero() const { return big_ ? sgn(*big_) == 0 : n_ == 0; }
    int sign() const { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

    mpq_class to_mpq() const;
    mpz_class get_num() const { return big_ ? mpz_class(big_->get_num()) : mpz_from(n_); }
    mpz_class get_den() const { return big_ ? mpz_class(big_->get_den()) : mpz_from(d_); }
    /// Numerator and denominator when the value is inline.
    std::int64_t small_num() const { return n_; }
    std::int64_t small_den() const { return d_; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_)
            return a.n_ == b.n_ && a.d_ == b.d_;
        if (a.big_ && b.big_)
            return *a.big_ == *b.big_;
        return false;  // canonical forms: big values never fit inline
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend int compare(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    static mpz_class mpz_from(std::int64_t v);
    void assign(const mpq_class& q);
    void assign128(__int128 num, __int128 den);

    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace satake
