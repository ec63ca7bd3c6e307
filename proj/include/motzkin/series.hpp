#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "motzkin/bigint.hpp"

namespace motzkin {

// Truncated formal power series with exact integer coefficients: a
// representative of f modulo z^(order+1). Nothing past `order` is known, so
// binary operations answer at the smaller of the two orders.
class IntSeries {
 public:
  // The zero series known up to `order`.
  explicit IntSeries(int order = 0);
  // Pads with zeros or drops coefficients past `order`.
  IntSeries(std::vector<BigInt> coefficients, int order);
  IntSeries(std::initializer_list<long long> coefficients, int order);

  static IntSeries one(int order);
  // The series variable itself (z or v).
  static IntSeries variable(int order);

  int order() const noexcept { return order_; }
  // [z^n]; n must be in [0, order].
  const BigInt& operator[](int n) const;
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  std::string to_string() const;

  bool operator==(const IntSeries&) const = default;

 private:
  std::vector<BigInt> coeffs_;
  int order_;
};

IntSeries truncate(const IntSeries& a, int order);
// Multiply by z^k; the result is known up to a.order() + k.
IntSeries shift(const IntSeries& a, int k);

IntSeries add(const IntSeries& a, const IntSeries& b);
IntSeries sub(const IntSeries& a, const IntSeries& b);
IntSeries negate(const IntSeries& a);

// Truncated Cauchy product. Output coefficients are independent, so the
// default kernel runs them on OpenMP threads; mul_serial is the
// single-threaded reference kept for cross-checks and benchmarks.
IntSeries mul(const IntSeries& a, const IntSeries& b);
IntSeries mul_serial(const IntSeries& a, const IntSeries& b);

// Binary powering; power(a, 0) is 1 at a's order.
IntSeries power(const IntSeries& a, int exponent);

// Requires a[0] = +-1 so the inverse stays integral; DomainError otherwise.
IntSeries invert_unit(const IntSeries& a);

// outer(inner) by Horner's rule. Requires inner[0] = 0 (DomainError).
// Known up to min(outer.order(), inner.order()).
IntSeries compose(const IntSeries& outer, const IntSeries& inner);

inline IntSeries operator+(const IntSeries& a, const IntSeries& b) { return add(a, b); }
inline IntSeries operator-(const IntSeries& a, const IntSeries& b) { return sub(a, b); }
inline IntSeries operator-(const IntSeries& a) { return negate(a); }
inline IntSeries operator*(const IntSeries& a, const IntSeries& b) { return mul(a, b); }

// M = 1 + zM + z^2 M^2, solved by fixpoint iteration from M = 1.
IntSeries motzkin_series(int order);

// Q = zM; satisfies Q = z + zQ + zQ^2.
IntSeries q_series(int order);

// G with G(0) = 1 and (1 - 2z - 3z^2) G^2 = 1, i.e. 1/sqrt(1 - 2z - 3z^2),
// built coefficient by coefficient without radicals.
IntSeries grand_series(int order);

// z = v / (1 + v + v^2) as a series in v.
IntSeries subst_v(int order);

}  // namespace motzkin
