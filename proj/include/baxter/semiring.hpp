#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <string>

#include "baxter/error.hpp"

namespace baxter {

/// Commutative idempotent semiring with a distinguished element of infinite
/// multiplicative order. `+` is the semiring sum and `*` the product.
template <class S>
concept IdempotentSemiring = std::regular<S> && requires(S a, S b) {
  { S::zero() } -> std::same_as<S>;
  { S::one() } -> std::same_as<S>;
  { S::generator() } -> std::same_as<S>;
  { a + b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
};

/// Max-plus semiring on Z with -infinity. zero = -inf, one = 0, generator = 1.
class Tropical {
 public:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();

  constexpr Tropical() = default;
  constexpr explicit Tropical(std::int64_t v) : value_(v) {}

  static constexpr Tropical zero() { return Tropical(kNegInf); }
  static constexpr Tropical one() { return Tropical(0); }
  static constexpr Tropical generator() { return Tropical(1); }

  constexpr bool is_zero() const { return value_ == kNegInf; }
  constexpr std::int64_t value() const { return value_; }

  friend constexpr Tropical operator+(Tropical a, Tropical b) {
    return a.value_ >= b.value_ ? a : b;
  }

  friend Tropical operator*(Tropical a, Tropical b) {
    if (a.is_zero() || b.is_zero()) {
      return zero();
    }
    std::int64_t r = 0;
    if (__builtin_add_overflow(a.value_, b.value_, &r) || r == kNegInf) {
      throw OverflowError("tropical product " + std::to_string(a.value_) + " + " +
                          std::to_string(b.value_) + " overflows");
    }
    return Tropical(r);
  }

  friend constexpr bool operator==(Tropical, Tropical) = default;

 private:
  std::int64_t value_ = kNegInf;
};

inline std::string to_string(Tropical t) {
  return t.is_zero() ? "-inf" : std::to_string(t.value());
}

/// s^k in S, with s^0 = one.
template <IdempotentSemiring S>
S power(S s, unsigned k) {
  S r = S::one();
  for (unsigned i = 0; i < k; ++i) {
    r = r * s;
  }
  return r;
}

static_assert(IdempotentSemiring<Tropical>);

}  // namespace baxter
