#include "quiverhom/field.hpp"

#include <charconv>

#include "quiverhom/error.hpp"

namespace quiverhom {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin; these bases are exact for all 64-bit n.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p: {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a: {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 62))
        throw precondition_error("prime must be below 2^62");
    if (!is_prime(p)) throw precondition_error(std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.substr(0, 3) == "fp:") {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty())
            return prime_field(p);
    }
    throw precondition_error("bad field '" + std::string(text) + "', expected q or fp:<prime>");
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "q" : "fp:" + std::to_string(prime_);
}

std::uint64_t ModArith::pow(std::uint64_t a, std::uint64_t e) const { return powmod(a, e, p_); }

std::uint64_t ModArith::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw internal_error("inverse of zero in F_p");
    return powmod(a, p_ - 2, p_);
}

} // namespace quiverhom
