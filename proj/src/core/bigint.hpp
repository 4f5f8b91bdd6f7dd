#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cubicfolds {

// Arbitrary-precision signed integer, sign-magnitude over base 2^32 limbs.
// Only the operations needed by exact lattice arithmetic are provided.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit by design, mirrors int literals
    static BigInt from_string(std::string_view s);

    std::string to_string() const;
    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_even() const;
    bool fits_int64() const;
    long long to_int64() const;  // throws DomainError when out of range

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    // Truncated division (C semantics): quotient rounds toward zero and the
    // remainder carries the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b);  // nonnegative

    std::strong_ordering operator<=>(const BigInt& o) const;
    bool operator==(const BigInt& o) const = default;

private:
    int sign_ = 0;                 // -1, 0, +1
    std::vector<uint32_t> mag_;    // little-endian, no leading zero limbs

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);  // a >= b
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

// Exact rational with reduced numerator/denominator, denominator > 0.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design
    BigRat(long long n) : num_(n), den_(1) {}          // NOLINT
    BigRat(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }
    std::string to_string() const;  // "p/q", or "p" when integral

    BigRat operator-() const;
    friend BigRat operator+(const BigRat& a, const BigRat& b);
    friend BigRat operator-(const BigRat& a, const BigRat& b);
    friend BigRat operator*(const BigRat& a, const BigRat& b);
    friend BigRat operator/(const BigRat& a, const BigRat& b);  // throws on /0
    BigRat& operator+=(const BigRat& o) { return *this = *this + o; }
    BigRat& operator-=(const BigRat& o) { return *this = *this - o; }
    BigRat& operator*=(const BigRat& o) { return *this = *this * o; }

    // Representative of this class mod n in [0, n); n > 0.
    BigRat mod(const BigInt& n) const;

    std::strong_ordering operator<=>(const BigRat& o) const;
    bool operator==(const BigRat& o) const;

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

}  // namespace cubicfolds
