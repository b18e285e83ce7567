// Half-integer quantum numbers, stored exactly as twice their value.
#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace spinsh {

/// Exact half-integer value (l, s, j, j_z, ...). Stores 2x the value, so
/// j = 3/2 has twice() == 3. Integers convert implicitly; halves are built
/// with from_twice() or half().
class HalfInt {
  public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int n) : twice_(2 * static_cast<std::int64_t>(n)) {}
    constexpr HalfInt(std::int64_t n) : twice_(2 * n) {}

    static constexpr HalfInt from_twice(std::int64_t t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }
    static constexpr HalfInt half() { return from_twice(1); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return 0.5 * static_cast<double>(twice_); }
    /// Integer value; meaningful only when is_integer().
    constexpr std::int64_t integer() const { return twice_ / 2; }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
        return from_twice(a.twice_ + b.twice_);
    }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
        return from_twice(a.twice_ - b.twice_);
    }
    constexpr HalfInt& operator+=(HalfInt b) {
        twice_ += b.twice_;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt b) {
        twice_ -= b.twice_;
        return *this;
    }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    friend constexpr HalfInt abs(HalfInt a) {
        return a.twice_ < 0 ? -a : a;
    }
    /// True when a and b differ by a whole integer (same parity of twice()).
    friend constexpr bool integer_spaced(HalfInt a, HalfInt b) {
        return (a.twice_ - b.twice_) % 2 == 0;
    }

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

  private:
    std::int64_t twice_ = 0;
};

} // namespace spinsh
