#include "gral/scalar.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace gral {
namespace {

using i128 = __int128;

int64_t narrow(i128 v) {
    if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
        throw Error("ScalarOverflow", "rational arithmetic left the 64-bit range");
    return static_cast<int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int64_t mod_pos(i128 v, int64_t p) {
    i128 r = v % p;
    if (r < 0) r += p;
    return static_cast<int64_t>(r);
}

// Inverse of a mod p by extended Euclid; a must be nonzero mod p.
int64_t mod_inverse(int64_t a, int64_t p) {
    int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw Error("DivisionByZero", "element has no inverse in F_p");
    return t < 0 ? t + p : t;
}

}  // namespace

Field Field::fp(int64_t p) {
    if (!is_prime(p)) throw Error("NotPrime", "prime-field modulus must be prime: " + std::to_string(p));
    if (p > (int64_t(1) << 31)) throw Error("NotPrime", "prime-field modulus too large");
    return Field{Kind::prime, p};
}

std::string Field::to_string() const {
    return is_rationals() ? "q" : "fp:" + std::to_string(p);
}

Field Field::parse(std::string_view s) {
    if (s == "q" || s == "Q") return q();
    if (s.rfind("fp:", 0) == 0) {
        int64_t p = 0;
        auto body = s.substr(3);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec != std::errc() || ptr != body.data() + body.size())
            throw Error("ParseError", "bad field spec: " + std::string(s));
        return fp(p);
    }
    throw Error("ParseError", "bad field spec: " + std::string(s));
}

Scalar::Scalar(Field f, int64_t num, int64_t den) : f_(f), num_(num), den_(den) {
    if (den_ == 0) throw Error("DivisionByZero", "zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (f_.is_rationals()) {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = narrow(-i128(num_));
            den_ = narrow(-i128(den_));
        }
        int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        num_ /= g;
        den_ /= g;
    } else {
        if (den_ != 1) {
            int64_t inv = mod_inverse(mod_pos(den_, f_.p), f_.p);
            num_ = mod_pos(i128(mod_pos(num_, f_.p)) * inv, f_.p);
        } else {
            num_ = mod_pos(num_, f_.p);
        }
        den_ = 1;
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (f_.is_rationals())
        r.num_ = narrow(-i128(num_));
    else
        r.num_ = num_ == 0 ? 0 : f_.p - num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (f_ != o.f_) throw field_mismatch();
    Scalar r;
    r.f_ = f_;
    if (f_.is_rationals()) {
        i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
        i128 d = i128(den_) * o.den_;
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        r.num_ = narrow(n);
        r.den_ = narrow(d);
    } else {
        r.num_ = mod_pos(i128(num_) + o.num_, f_.p);
        r.den_ = 1;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (f_ != o.f_) throw field_mismatch();
    Scalar r;
    r.f_ = f_;
    if (f_.is_rationals()) {
        i128 n = i128(num_) * o.num_;
        i128 d = i128(den_) * o.den_;
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        r.num_ = narrow(n);
        r.den_ = narrow(d);
    } else {
        r.num_ = mod_pos(i128(num_) * o.num_, f_.p);
        r.den_ = 1;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (num_ == 0) throw Error("DivisionByZero", "inverse of zero");
    if (f_.is_rationals()) return Scalar(f_, den_, num_);
    return Scalar(f_, mod_inverse(num_, f_.p));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

std::string Scalar::to_string() const {
    if (f_.is_rationals() && den_ != 1)
        return std::to_string(num_) + "/" + std::to_string(den_);
    return std::to_string(num_);
}

Scalar Scalar::parse(Field f, std::string_view s) {
    auto parse_int = [&](std::string_view part) {
        int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size())
            throw Error("ParseError", "bad scalar: " + std::string(s));
        return v;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Scalar(f, parse_int(s));
    return Scalar(f, parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace gral
