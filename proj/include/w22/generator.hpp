#ifndef W22_GENERATOR_HPP
#define W22_GENERATOR_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace w22 {

enum class Kind : std::uint8_t { C = 0, C1 = 1, I = 2, L = 3 };

inline constexpr std::int64_t kDefaultIndexBound = 1'000'000;

/// One basis element of W(2,2): L(n), I(n), C or C1.
///
/// The declaration order of the members makes the defaulted comparison the
/// canonical PBW order: C < C1 < I(n) ascending in n < L(n) ascending in n.
class Generator {
public:
  static Generator L(std::int64_t n);
  static Generator I(std::int64_t n);
  static Generator C() { return Generator(Kind::C, 0); }
  static Generator C1() { return Generator(Kind::C1, 0); }

  Kind kind() const { return kind_; }
  /// Zero for the central generators.
  std::int64_t index() const { return index_; }
  bool is_central() const { return kind_ == Kind::C || kind_ == Kind::C1; }

  /// ad-L(0) eigenvalue.
  std::int64_t weight() const { return is_central() ? 0 : index_; }

  /// "L(-2)", "I(3)", "C", "C1".
  std::string str() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;

private:
  Generator(Kind k, std::int64_t n) : kind_(k), index_(n) {}

  Kind kind_;
  std::int64_t index_;
};

/// Current bound on |index|; construction and index sums outside it throw IndexOverflow.
std::int64_t index_bound();
void set_index_bound(std::int64_t bound);

/// Checked index sum m + n.
std::int64_t add_indices(std::int64_t m, std::int64_t n);

} // namespace w22

#endif
