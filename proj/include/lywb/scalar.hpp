#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lywb {

// Exact element of Q. Always stored in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    Rational inv() const;
    Rational conj() const { return *this; }
    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

// Element a+bi of Q(i). No ordering.
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(int v) : re_(v) {}
    Gaussian(long v) : re_(v) {}
    Gaussian(const Rational& re) : re_(re) {}
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }
    static Gaussian parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    Gaussian inv() const;
    Gaussian conj() const { return Gaussian(re_, -im_); }
    std::string str() const;

    Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o) { return *this *= o.inv(); }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re_, -a.im_); }

    friend bool operator==(const Gaussian& a, const Gaussian& b) = default;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);
std::ostream& operator<<(std::ostream& os, const Gaussian& z);

template <class S>
concept Field = std::same_as<S, Rational> || std::same_as<S, Gaussian>;

template <Field S>
struct field_traits;

template <>
struct field_traits<Rational> {
    static constexpr std::string_view tag = "Q";
    static constexpr bool is_gaussian = false;
};

template <>
struct field_traits<Gaussian> {
    static constexpr std::string_view tag = "Q(i)";
    static constexpr bool is_gaussian = true;
};

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline bool is_zero(const Gaussian& z) { return z.is_zero(); }
inline Rational conj(const Rational& q) { return q; }
inline Gaussian conj(const Gaussian& z) { return z.conj(); }

template <Field S>
S parse_scalar(std::string_view text) { return S::parse(text); }

}  // namespace lywb
