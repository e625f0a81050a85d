#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qlorentz {

/// Half-integer quantum number, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(int t) { return HalfInt(t); }
    static constexpr HalfInt whole(int n) { return HalfInt(2 * n); }

    constexpr int twice() const { return tw_; }
    constexpr bool is_integer() const { return tw_ % 2 == 0; }
    /// Value as integer; requires is_integer().
    constexpr int as_int() const {
        assert(tw_ % 2 == 0);
        return tw_ / 2;
    }
    constexpr double to_double() const { return tw_ / 2.0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.tw_ + b.tw_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.tw_ - b.tw_); }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.tw_); }
    friend constexpr HalfInt operator*(int n, HalfInt a) { return HalfInt(n * a.tw_); }
    friend constexpr HalfInt operator*(HalfInt a, int n) { return HalfInt(n * a.tw_); }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    HalfInt& operator+=(HalfInt b) { tw_ += b.tw_; return *this; }
    HalfInt& operator-=(HalfInt b) { tw_ -= b.tw_; return *this; }

    /// Product a*b when it is again a half-integer (2ab even).
    friend HalfInt mul(HalfInt a, HalfInt b) {
        long p = static_cast<long>(a.tw_) * b.tw_;
        if (p % 2 != 0) throw std::domain_error("HalfInt product is not a half-integer");
        return HalfInt(static_cast<int>(p / 2));
    }
    /// 2ab, always a half-integer.
    friend HalfInt mul2(HalfInt a, HalfInt b) {
        return HalfInt(static_cast<int>(static_cast<long>(a.tw_) * b.tw_));
    }

    std::string str() const {
        if (tw_ % 2 == 0) return std::to_string(tw_ / 2);
        return std::to_string(tw_) + "/2";
    }

private:
    explicit constexpr HalfInt(int t) : tw_(t) {}
    int tw_ = 0;
};

inline constexpr HalfInt half = HalfInt::from_twice(1);

inline HalfInt hi(int n) { return HalfInt::whole(n); }
inline HalfInt hi2(int twice) { return HalfInt::from_twice(twice); }

/// (-1)^n for integer n given as half-integer difference; requires integrality.
inline int parity_sign(HalfInt n) {
    if (!n.is_integer()) throw std::domain_error("parity of non-integer");
    return (n.as_int() % 2 == 0) ? 1 : -1;
}

} // namespace qlorentz
