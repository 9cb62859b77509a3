#include "w22/generator.hpp"

#include "w22/errors.hpp"

#include <atomic>

namespace w22 {

namespace {

std::atomic<std::int64_t> g_index_bound{kDefaultIndexBound};

void check_index(std::int64_t n) {
  auto bound = g_index_bound.load(std::memory_order_relaxed);
  if (n > bound || n < -bound)
    throw IndexOverflow("generator index " + std::to_string(n) + " exceeds bound " +
                        std::to_string(bound));
}

} // namespace

std::int64_t index_bound() { return g_index_bound.load(std::memory_order_relaxed); }

void set_index_bound(std::int64_t bound) {
  if (bound < 1)
    bound = 1;
  g_index_bound.store(bound, std::memory_order_relaxed);
}

std::int64_t add_indices(std::int64_t m, std::int64_t n) {
  std::int64_t s;
  if (__builtin_add_overflow(m, n, &s))
    throw IndexOverflow("index sum overflows");
  check_index(s);
  return s;
}

Generator Generator::L(std::int64_t n) {
  check_index(n);
  return Generator(Kind::L, n);
}

Generator Generator::I(std::int64_t n) {
  check_index(n);
  return Generator(Kind::I, n);
}

std::string Generator::str() const {
  switch (kind_) {
  case Kind::C:
    return "C";
  case Kind::C1:
    return "C1";
  case Kind::I:
    return "I(" + std::to_string(index_) + ")";
  case Kind::L:
    return "L(" + std::to_string(index_) + ")";
  }
  return "?";
}

} // namespace w22
