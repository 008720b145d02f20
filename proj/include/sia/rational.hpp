#pragma once
// Exact rational scalar used throughout the engine.
//
// Invariants: every value is kept in lowest terms with a positive denominator
// (canonical form is restored on construction), so operator== is plain value
// equality and to_string() emits the canonical "p" / "p/q" form that the file
// formats require.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace sia {

class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den);
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts an optional sign, digits, and an optional "/digits" suffix.
    // Throws std::invalid_argument on malformed input or a zero denominator.
    static Rat parse(const std::string& s);

    std::string to_string() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    Rat inv() const;

    std::size_t hash() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
}

inline Rat Rat::parse(const std::string& s) {
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
        return j;
    };
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t numEnd = digits(i);
    if (numEnd == i) throw std::invalid_argument("invalid rational literal: " + s);
    std::size_t rest = numEnd;
    if (rest < s.size()) {
        if (s[rest] != '/') throw std::invalid_argument("invalid rational literal: " + s);
        std::size_t denEnd = digits(rest + 1);
        if (denEnd == rest + 1 || denEnd != s.size())
            throw std::invalid_argument("invalid rational literal: " + s);
    }
    mpq_class q;
    // mpq_set_str rejects an explicit leading '+', which the scan above allows.
    const char* digitsStart = s.c_str() + (s[0] == '+' ? 1 : 0);
    if (mpq_set_str(q.get_mpq_t(), digitsStart, 10) != 0)
        throw std::invalid_argument("invalid rational literal: " + s);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw std::invalid_argument("rational with zero denominator: " + s);
    q.canonicalize();
    return Rat(q);
}

inline std::string Rat::to_string() const {
    // mpq_class::get_str() already emits "p" or "p/q" in canonical form.
    return v_.get_str();
}

inline Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    return Rat(mpq_class(v_ / o.v_));
}

inline Rat Rat::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rat(r);
}

inline std::size_t Rat::hash() const {
    // Cheap content hash over the canonical limbs; used only to shortcut
    // structural comparisons, never as the definition of equality.
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    const mpz_srcptr num = mpq_numref(v_.get_mpq_t());
    const mpz_srcptr den = mpq_denref(v_.get_mpq_t());
    mix(static_cast<std::size_t>(mpz_sgn(num)) + 7u);
    for (int part = 0; part < 2; ++part) {
        mpz_srcptr z = part == 0 ? num : den;
        std::size_t n = mpz_size(z);
        mix(n);
        for (std::size_t i = 0; i < n; ++i) mix(static_cast<std::size_t>(mpz_getlimbn(z, i)));
    }
    return h;
}

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}

}  // namespace sia
