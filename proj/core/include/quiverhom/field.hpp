#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace quiverhom {

__extension__ using uint128 = unsigned __int128;

inline constexpr std::uint64_t default_prime = 2147483647; // 2^31 - 1

bool is_prime(std::uint64_t n);

/// The coefficient field: the rationals or a prime field F_p with p < 2^62.
class FieldSpec {
public:
    FieldSpec(): prime_(default_prime) {}

    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime_field(std::uint64_t p); // throws precondition_error unless p is prime

    /// "q" or "fp:<prime>"
    static FieldSpec parse(std::string_view text);
    std::string to_string() const;

    bool is_rationals() const { return prime_ == 0; }
    bool is_prime_field() const { return prime_ != 0; }
    std::uint64_t prime() const { return prime_; }

    bool operator==(const FieldSpec&) const = default;

private:
    explicit FieldSpec(std::uint64_t p): prime_(p) {}
    std::uint64_t prime_; // 0 encodes the rationals
};

/// Arithmetic in F_p on canonical residues in [0, p).
class ModArith {
public:
    explicit ModArith(std::uint64_t p): p_(p) {}

    std::uint64_t modulus() const { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const; // a != 0

    /// Reduces a signed integer into [0, p).
    std::uint64_t from_signed(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
    }

    /// Precomputed multiplier for repeated products by a fixed w (Shoup).
    struct Multiplier {
        std::uint64_t w;
        std::uint64_t w_shoup;
    };
    Multiplier multiplier(std::uint64_t w) const {
        return {w, static_cast<std::uint64_t>((static_cast<uint128>(w) << 64) / p_)};
    }
    std::uint64_t mul(std::uint64_t x, const Multiplier& m) const {
        std::uint64_t q = static_cast<std::uint64_t>((static_cast<uint128>(x) * m.w_shoup) >> 64);
        std::uint64_t r = x * m.w - q * p_;
        return r >= p_ ? r - p_ : r;
    }

private:
    std::uint64_t p_;
};

} // namespace quiverhom
