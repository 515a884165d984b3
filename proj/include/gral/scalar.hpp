#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gral {

/// Base class for all library errors. `code()` is a stable short tag
/// suitable for dispatch in tests and the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error field_mismatch() { return Error("FieldMismatch", "operands live in different fields"); }
inline Error dimension_error(const std::string& what) { return Error("DimensionError", what); }

/// Coefficient field: the rationals, or a prime field F_p.
struct Field {
    enum class Kind : uint8_t { rationals, prime };

    Kind kind = Kind::rationals;
    int64_t p = 0;

    static Field q() { return Field{Kind::rationals, 0}; }
    static Field fp(int64_t p);

    bool is_rationals() const { return kind == Kind::rationals; }
    bool operator==(const Field&) const = default;

    std::string to_string() const;
    /// Accepts "q" or "fp:<p>".
    static Field parse(std::string_view s);
};

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator; prime-field values are residues in [0, p) with denominator 1.
/// Arithmetic never rounds; rational results that leave the int64 range throw
/// Error("ScalarOverflow").
class Scalar {
public:
    Scalar() : f_(Field::q()) {}
    Scalar(Field f, int64_t num, int64_t den = 1);

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }

    const Field& field() const { return f_; }
    int64_t num() const { return num_; }
    int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        return f_ == o.f_ && num_ == o.num_ && den_ == o.den_;
    }

    /// "num/den" over the rationals (denominator omitted when 1),
    /// plain residue over a prime field.
    std::string to_string() const;
    static Scalar parse(Field f, std::string_view s);

private:
    void normalize();

    Field f_;
    int64_t num_ = 0;
    int64_t den_ = 1;
};

}  // namespace gral
