#ifndef SYZ_FIELD_HPP
#define SYZ_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "syz/errors.hpp"

namespace syz {

using Elem = std::uint32_t;

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

/// Prime field Z/p. Elements are stored as canonical residues in [0, p).
class Field {
public:
    Field() : Field(kDefaultCharacteristic) {}

    explicit Field(std::uint32_t p) : p_(p)
    {
        if (!is_prime(p))
            throw InputError("field characteristic " + std::to_string(p) + " is not a prime");
        if (p >= (1u << 31))
            throw InputError("field characteristic must be below 2^31");
    }

    std::uint32_t characteristic() const { return p_; }

    Elem add(Elem a, Elem b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const
    {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    /// a - b*c
    Elem sub_mul(Elem a, Elem b, Elem c) const { return sub(a, mul(b, c)); }

    Elem pow(Elem a, std::uint64_t e) const
    {
        Elem r = 1;
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elem inv(Elem a) const
    {
        if (a == 0)
            throw std::domain_error("inverse of zero in Z/" + std::to_string(p_));
        // extended Euclid on signed 64-bit values
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0)
            t += p_;
        return static_cast<Elem>(t);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(std::int64_t v) const
    {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0)
            r += p_;
        return static_cast<Elem>(r);
    }

    /// Representative in (-p/2, p/2], used for printing.
    std::int64_t to_signed(Elem a) const
    {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_)
                          : static_cast<std::int64_t>(a);
    }

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

    static bool is_prime(std::uint32_t n)
    {
        if (n < 2)
            return false;
        for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

private:
    std::uint32_t p_;
};

}  // namespace syz

#endif
