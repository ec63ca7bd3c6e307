#include "motzkin/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "motzkin/errors.hpp"

namespace motzkin {

namespace {

void check_order(int order) {
  if (order < 0) throw DomainError("series order must be nonnegative, got " + std::to_string(order));
}

BigInt cauchy_term(const IntSeries& a, const IntSeries& b, int n) {
  BigInt sum = 0;
  for (int i = 0; i <= n; ++i) {
    const BigInt& x = a[i];
    if (x.is_zero()) continue;
    sum += x * b[n - i];
  }
  return sum;
}

}  // namespace

IntSeries::IntSeries(int order) : order_(order) {
  check_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
}

IntSeries::IntSeries(std::vector<BigInt> coefficients, int order)
    : coeffs_(std::move(coefficients)), order_(order) {
  check_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1, BigInt(0));
}

IntSeries::IntSeries(std::initializer_list<long long> coefficients, int order) : order_(order) {
  check_order(order);
  coeffs_.assign(coefficients.begin(), coefficients.end());
  coeffs_.resize(static_cast<std::size_t>(order) + 1, BigInt(0));
}

IntSeries IntSeries::one(int order) {
  IntSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

IntSeries IntSeries::variable(int order) {
  IntSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

const BigInt& IntSeries::operator[](int n) const {
  if (n < 0 || n > order_) {
    throw std::out_of_range("coefficient " + std::to_string(n) + " outside order " +
                            std::to_string(order_));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

bool IntSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c.is_zero(); });
}

std::string IntSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= order_; ++n) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(n)];
    if (c.is_zero()) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (mag != 1 || n == 0) os << mag;
    if (n >= 1) os << "z";
    if (n >= 2) os << "^" << n;
    first = false;
  }
  if (first) os << "0";
  os << " + O(z^" << order_ + 1 << ")";
  return os.str();
}

IntSeries truncate(const IntSeries& a, int order) {
  const auto c = a.coefficients();
  const int keep = std::min(order, a.order());
  return IntSeries(std::vector<BigInt>(c.begin(), c.begin() + keep + 1), order);
}

IntSeries shift(const IntSeries& a, int k) {
  if (k < 0) throw DomainError("shift must be nonnegative");
  std::vector<BigInt> c(static_cast<std::size_t>(k), BigInt(0));
  c.insert(c.end(), a.coefficients().begin(), a.coefficients().end());
  return IntSeries(std::move(c), a.order() + k);
}

IntSeries add(const IntSeries& a, const IntSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c[static_cast<std::size_t>(n)] = a[n] + b[n];
  return IntSeries(std::move(c), order);
}

IntSeries sub(const IntSeries& a, const IntSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c[static_cast<std::size_t>(n)] = a[n] - b[n];
  return IntSeries(std::move(c), order);
}

IntSeries negate(const IntSeries& a) {
  std::vector<BigInt> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x = -x;
  return IntSeries(std::move(c), a.order());
}

IntSeries mul_serial(const IntSeries& a, const IntSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c[static_cast<std::size_t>(n)] = cauchy_term(a, b, n);
  return IntSeries(std::move(c), order);
}

IntSeries mul(const IntSeries& a, const IntSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
  // Term n costs n+1 products; dynamic scheduling evens out the triangle.
#pragma omp parallel for schedule(dynamic, 8) if (order >= 64)
  for (int n = 0; n <= order; ++n) c[static_cast<std::size_t>(n)] = cauchy_term(a, b, n);
  return IntSeries(std::move(c), order);
}

IntSeries power(const IntSeries& a, int exponent) {
  if (exponent < 0) throw DomainError("negative exponent " + std::to_string(exponent));
  IntSeries result = IntSeries::one(a.order());
  IntSeries base = a;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

IntSeries invert_unit(const IntSeries& a) {
  const BigInt& a0 = a[0];
  if (a0 != 1 && a0 != -1) {
    throw DomainError("constant term " + a0.str() + " is not a unit in the integers");
  }
  const int order = a.order();
  std::vector<BigInt> b(static_cast<std::size_t>(order) + 1);
  b[0] = a0;  // 1/a0 = a0 for a0 = +-1
  for (int n = 1; n <= order; ++n) {
    BigInt sum = 0;
    for (int i = 1; i <= n; ++i) sum += a[i] * b[static_cast<std::size_t>(n - i)];
    b[static_cast<std::size_t>(n)] = -a0 * sum;
  }
  return IntSeries(std::move(b), order);
}

IntSeries compose(const IntSeries& outer, const IntSeries& inner) {
  if (!inner[0].is_zero()) {
    throw DomainError("inner series must have zero constant term, got " + inner[0].str());
  }
  const int order = std::min(outer.order(), inner.order());
  const IntSeries x = truncate(inner, order);
  IntSeries result(std::vector<BigInt>{outer[order]}, order);
  for (int i = order - 1; i >= 0; --i) {
    result = mul(result, x);
    result = add(result, IntSeries(std::vector<BigInt>{outer[i]}, order));
  }
  return result;
}

IntSeries motzkin_series(int order) {
  check_order(order);
  IntSeries m = IntSeries::one(order);
  // Pass p fixes coefficient p; one extra pass confirms the fixpoint.
  for (int pass = 0; pass <= order + 1; ++pass) {
    IntSeries next = IntSeries::one(order) + shift(m, 1) + shift(mul(m, m), 2);
    next = truncate(next, order);
    if (next == m) return m;
    m = std::move(next);
  }
  throw std::logic_error("Motzkin fixpoint did not stabilize");
}

IntSeries q_series(int order) {
  check_order(order);
  if (order == 0) return IntSeries(0);
  return shift(motzkin_series(order - 1), 1);
}

IntSeries grand_series(int order) {
  check_order(order);
  const auto size = static_cast<std::size_t>(order) + 1;
  // H = G^2 = 1/(1 - 2z - 3z^2): H_n = 2 H_{n-1} + 3 H_{n-2}.
  std::vector<BigInt> h(size);
  h[0] = 1;
  if (order >= 1) h[1] = 2;
  for (std::size_t n = 2; n < size; ++n) h[n] = 2 * h[n - 1] + 3 * h[n - 2];

  // Match [z^n] G^2 = H_n: 2 G_0 G_n + sum_{0<i<n} G_i G_{n-i} = H_n.
  std::vector<BigInt> g(size);
  g[0] = 1;
  for (std::size_t n = 1; n < size; ++n) {
    BigInt rest = h[n];
    for (std::size_t i = 1; i < n; ++i) rest -= g[i] * g[n - i];
    if ((rest & 1) != 0) throw std::logic_error("grand series coefficient is not integral");
    g[n] = rest / 2;
  }
  return IntSeries(std::move(g), order);
}

IntSeries subst_v(int order) {
  check_order(order);
  if (order == 0) return IntSeries(0);
  return shift(invert_unit(IntSeries({1, 1, 1}, order - 1)), 1);
}

}  // namespace motzkin
