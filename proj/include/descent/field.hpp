#pragma once

#include <concepts>

#include "descent/rational.hpp"

namespace descent {

/// An element of a field that knows its field: `x.field()` hands out zero,
/// one, integer images and the characteristic.
template <class F>
concept FieldElement = std::copyable<F> && requires(const F& a, const F& b) {
  typename F::Field;
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.field() } -> std::convertible_to<typename F::Field>;
  { a.field().zero() } -> std::convertible_to<F>;
  { a.field().one() } -> std::convertible_to<F>;
  { a.field().from_integer(Integer(1)) } -> std::convertible_to<F>;
  { a.field().characteristic() } -> std::convertible_to<Integer>;
};

template <FieldElement F>
F power(const F& base, long e) {
  if (e < 0) return power(base.field().one() / base, -e);
  F acc = base.field().one(), b = base;
  while (e) {
    if (e & 1) acc = acc * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return acc;
}

}  // namespace descent
