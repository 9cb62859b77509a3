#ifndef W22_LINEAR_HPP
#define W22_LINEAR_HPP

#include "w22/scalar.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace w22 {

/// Finite formal linear combination with no zero coefficients.
/// Keys iterate in Compare order, which callers pick to be the canonical order.
template <class Key, ScalarRing R, class Compare = std::less<Key>>
class LinearCombination {
public:
  using key_type = Key;
  using scalar_type = R;
  using map_type = std::map<Key, R, Compare>;

  LinearCombination() = default;
  LinearCombination(const Key& k, R coeff = R(Rational(1))) { add(k, std::move(coeff)); }

  void add(const Key& k, const R& coeff) {
    if (coeff.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(k, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  void add(const LinearCombination& o, const R& scale) {
    for (const auto& [k, c] : o.terms_)
      add(k, c * scale);
  }

  R coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? R() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const map_type& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinearCombination operator-() const {
    LinearCombination r;
    for (const auto& [k, c] : terms_)
      r.terms_.emplace(k, -c);
    return r;
  }
  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_)
      add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_)
      add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const R& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = it->second * s;
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const R& s, LinearCombination a) { return a *= s; }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

  /// "coeff*key+..." using key_str(key); "0" when empty.
  template <class KeyStr>
  std::string str(KeyStr key_str) const {
    if (terms_.empty())
      return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      std::string cs = c.str();
      bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      if (compound)
        cs = "(" + cs + ")";
      if (!first)
        out += (cs[0] == '-') ? "" : "+";
      first = false;
      std::string ks = key_str(k);
      if (ks.empty())
        out += cs;
      else if (cs == "1")
        out += ks;
      else if (cs == "-1")
        out += "-" + ks;
      else
        out += cs + "*" + ks;
    }
    return out;
  }

private:
  map_type terms_;
};

} // namespace w22

#endif
