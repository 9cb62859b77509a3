#ifndef W22_VERMA_HPP
#define W22_VERMA_HPP

#include "w22/matrix.hpp"
#include "w22/pbw.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace w22 {

inline constexpr int kDefaultMaxLevel = 8;
inline constexpr int kDefaultMaxSymbolicLevel = 4;

/// Level bounds for numeric (rational) and symbolic (polynomial) computations.
int max_level();
int max_symbolic_level();
void set_max_level(int n);
void set_max_symbolic_level(int n);

template <ScalarRing R>
int level_bound() {
  if constexpr (std::same_as<R, Polynomial>)
    return max_symbolic_level();
  else
    return max_level();
}

void check_level(int n, int bound);

/// Highest weight data: L(0) v = lambda v, C = c, I(0) v = c0 v, C1 = c1.
template <ScalarRing R>
struct HWParams {
  R lambda, c, c0, c1;

  static HWParams symbolic()
    requires std::same_as<R, Polynomial>
  {
    return {Polynomial::variable(Var::lambda), Polynomial::variable(Var::c),
            Polynomial::variable(Var::c0), Polynomial::variable(Var::c1)};
  }
};

/// PBW basis vector I(-i_1)...I(-i_p) L(-l_1)...L(-l_q) v with both partitions nonincreasing.
struct BasisMonomial {
  std::vector<int> i_part;
  std::vector<int> l_part;

  int level() const;
  Word word() const;
  /// "I(-2)I(-1)L(-3)"; "1" for the highest weight vector.
  std::string str() const;

  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

/// Canonical basis order: descending lexicographic on i_part, then on l_part.
struct BasisLess {
  bool operator()(const BasisMonomial& a, const BasisMonomial& b) const {
    if (a.i_part != b.i_part)
      return b.i_part < a.i_part;
    return b.l_part < a.l_part;
  }
};

/// Ordered basis of level n. Throws LevelBoundExceeded above max_level().
std::vector<BasisMonomial> level_basis(int n);
std::vector<BasisMonomial> level_basis_unchecked(int n);

/// First factor of the canonical word and the remaining monomial; m must not be empty.
std::pair<Generator, BasisMonomial> split_leading(const BasisMonomial& m);

template <ScalarRing R>
using Coords = LinearCombination<BasisMonomial, R, BasisLess>;

/// Homogeneous vector of a Verma module.
template <ScalarRing R>
struct VermaVector {
  int level = 0;
  Coords<R> coords;

  bool is_zero() const { return coords.is_zero(); }
  std::string str() const {
    return coords.str([](const BasisMonomial& m) { return m.level() == 0 ? std::string() : m.str(); });
  }
  friend bool operator==(const VermaVector&, const VermaVector&) = default;
};

template <ScalarRing R>
VermaVector<R> basis_vector(const BasisMonomial& m) {
  return {m.level(), Coords<R>(m)};
}

/// M(lambda, c, c0, c1) with memoized generator actions on basis vectors.
///
/// A generator is applied by commuting it to the right through the lowering word:
/// g Y w = Y (g w) + [g, Y] w. Positive modes kill v, L(0), I(0), C, C1 act on v by
/// lambda, c0, c, c1, and lowering modes are inserted in canonical position.
/// Not thread-safe; parallel kernels give each worker its own instance.
template <ScalarRing R>
class VermaModule {
public:
  explicit VermaModule(HWParams<R> p) : p_(std::move(p)) {}

  const HWParams<R>& params() const { return p_; }

  const Coords<R>& act(const Generator& g, const BasisMonomial& m) {
    auto key = std::make_pair(g, m);
    if (auto it = cache_.find(key); it != cache_.end())
      return it->second;
    Coords<R> r = compute(g, m);
    return cache_.emplace(std::move(key), std::move(r)).first->second;
  }

  VermaVector<R> act(const Generator& g, const VermaVector<R>& w) {
    VermaVector<R> out{w.level - static_cast<int>(g.weight()), {}};
    for (const auto& [m, c] : w.coords)
      out.coords.add(act(g, m), c);
    return out;
  }

  VermaVector<R> act(const LieElement<R>& a, const VermaVector<R>& w) {
    VermaVector<R> out{w.level, {}};
    bool first = true;
    for (const auto& [g, c] : a) {
      auto part = act(g, w);
      if (first)
        out.level = part.level;
      first = false;
      out.coords.add(part.coords, c);
    }
    return out;
  }

  /// Applies an element of U: each word acts letter by letter from the right.
  Coords<R> apply(const UEQ& u, const BasisMonomial& m) {
    Coords<R> out;
    for (const auto& [word, q] : u) {
      Coords<R> cur(m);
      for (auto it = word.rbegin(); it != word.rend() && !cur.is_zero(); ++it) {
        Coords<R> next;
        for (const auto& [b, c] : cur)
          next.add(act(*it, b), c);
        cur = std::move(next);
      }
      out.add(cur, R(q));
    }
    return out;
  }

  std::size_t cache_size() const { return cache_.size(); }

private:
  // g is a lowering mode with g <= first factor of m (or m empty).
  static BasisMonomial prepend(const Generator& g, BasisMonomial m) {
    auto k = static_cast<int>(-g.index());
    if (g.kind() == Kind::I)
      m.i_part.insert(m.i_part.begin(), k);
    else
      m.l_part.insert(m.l_part.begin(), k);
    return m;
  }

  Coords<R> compute(const Generator& g, const BasisMonomial& m) {
    switch (g.kind()) {
    case Kind::C:
      return Coords<R>(m, p_.c);
    case Kind::C1:
      return Coords<R>(m, p_.c1);
    default:
      break;
    }
    if (g.kind() == Kind::L && g.index() == 0)
      return Coords<R>(m, p_.lambda - R(Rational(m.level())));

    const bool empty = m.i_part.empty() && m.l_part.empty();
    if (empty) {
      if (g.index() > 0)
        return {};
      if (g.index() == 0) // I(0)
        return Coords<R>(m, p_.c0);
      return Coords<R>(prepend(g, m));
    }

    auto [head, rest] = split_leading(m);
    if (g.index() < 0 && !(head < g))
      return Coords<R>(prepend(g, m));

    // g head w = head (g w) + [g, head] w
    Coords<R> out;
    Coords<R> gw = act(g, rest);
    for (const auto& [b, c] : gw)
      out.add(act(head, b), c);
    for (const auto& [h, q] : bracket(g, head))
      out.add(act(h, rest), R(q));
    return out;
  }

  struct KeyLess {
    bool operator()(const std::pair<Generator, BasisMonomial>& a,
                    const std::pair<Generator, BasisMonomial>& b) const {
      if (a.first != b.first)
        return a.first < b.first;
      return BasisLess{}(a.second, b.second);
    }
  };

  HWParams<R> p_;
  std::map<std::pair<Generator, BasisMonomial>, Coords<R>, KeyLess> cache_;
};

/// Matrix of g from level n to level n - weight(g); column j is g applied to basis j.
/// Columns are computed in parallel.
template <ScalarRing R>
Matrix<R> action_matrix(const HWParams<R>& p, const Generator& g, int level);

/// Contravariant form on level n: entry (X, Y) is the coefficient of v in omega(X) Y v.
/// Rows are built by the recursion <X1 X' v, Y v> = <X' v, omega(X1) Y v>, in parallel.
template <ScalarRing R>
Matrix<R> gram_matrix(int n, const HWParams<R>& p);

/// Serial, definition-based form: normal-orders omega of each basis word in U and applies it.
template <ScalarRing R>
Matrix<R> gram_matrix_reference(int n, const HWParams<R>& p);

template <ScalarRing R>
R shapovalov_det(int n, const HWParams<R>& p) {
  return determinant(gram_matrix(n, p));
}

template <ScalarRing R>
VermaVector<R> from_column(int level, const std::vector<BasisMonomial>& basis,
                           const std::vector<R>& x) {
  VermaVector<R> v{level, {}};
  for (std::size_t i = 0; i < basis.size(); ++i)
    v.coords.add(basis[i], x[i]);
  return v;
}

template <ScalarRing R>
std::vector<R> to_column(const std::vector<BasisMonomial>& basis, const VermaVector<R>& v) {
  std::vector<R> x;
  x.reserve(basis.size());
  for (const auto& b : basis)
    x.push_back(v.coords.coeff(b));
  return x;
}

struct SingularVector {
  VermaVector<Rational> vector;
  /// I(0) w = c0 w holds.
  bool i0_eigenvector = false;
};

/// Basis of the joint kernel of L(1), L(2), I(1), I(2) on level n (n >= 1).
std::vector<SingularVector> singular_vectors(int n, const HWParams<Rational>& p);

struct ReducibilityWitness {
  bool reducible = false;
  /// Smallest positive m with (m^2-1)/12 c1 + 2 c0 = 0.
  std::optional<long> witness_m;
};

/// Exact decision of whether (m^2-1)/12 c1 + 2 c0 vanishes for some nonzero integer m.
ReducibilityWitness is_reducible(const Rational& c0, const Rational& c1);

template <ScalarRing R>
Matrix<R> i0_matrix(int n, const HWParams<R>& p) {
  check_level(n, level_bound<R>());
  return action_matrix(p, Generator::I(0), n);
}

struct I0Report {
  int level = 0;
  Matrix<Rational> matrix;
  /// I(0) - c0 id.
  Matrix<Rational> nilpotent_part;
  /// (I(0) - c0)^(level+1) == 0.
  bool nilpotent_within_bound = false;
  /// Smallest k with (I(0) - c0)^k == 0.
  unsigned nilpotency_index = 0;
  bool diagonalizable = false;
  /// Jordan block sizes for eigenvalue c0, descending.
  std::vector<std::size_t> jordan_blocks;
};

I0Report i0_analysis(int n, const HWParams<Rational>& p);

/// Smallest m >= 1 with (m^2-1)/12 c1 - 2 c0 = 0: where this module's contravariant form
/// degenerates. The brackets used here make the I(-m)/L(-m) pairing equal
/// m((m^2-1)/12 c1 - 2 c0), so this is is_reducible with c0 negated.
ReducibilityWitness degeneracy_witness(const Rational& c0, const Rational& c1);

/// Determinants and singular vectors at one numeric point, compared with both witnesses.
struct CriterionCrossCheck {
  HWParams<Rational> params;
  int max_level = 0;
  ReducibilityWitness stated;
  ReducibilityWitness engine;
  /// dets[n-1] = shapovalov_det(n) for n = 1..max_level.
  std::vector<Rational> dets;
  /// singular_counts[n-1] = number of independent singular vectors at level n.
  std::vector<std::size_t> singular_counts;
  /// First n with a vanishing determinant, 0 if none.
  int first_degenerate_level = 0;
  /// Every found singular vector lies in the radical of the form.
  bool singular_in_radical = true;

  /// A witness m <= max_level predicts: nothing below level m, then a zero determinant
  /// and a singular vector at level m. Otherwise nothing up to max_level.
  bool agrees_with(const ReducibilityWitness& w) const;
};

CriterionCrossCheck criterion_cross_check(const HWParams<Rational>& p, int max_level);

/// Gram matrix times the coordinate column of w is zero.
bool in_radical(const Matrix<Rational>& gram, const std::vector<BasisMonomial>& basis,
                const VermaVector<Rational>& w);

extern template class VermaModule<Rational>;
extern template class VermaModule<Polynomial>;
extern template Matrix<Rational> action_matrix(const HWParams<Rational>&, const Generator&, int);
extern template Matrix<Polynomial> action_matrix(const HWParams<Polynomial>&, const Generator&, int);
extern template Matrix<Rational> gram_matrix(int, const HWParams<Rational>&);
extern template Matrix<Polynomial> gram_matrix(int, const HWParams<Polynomial>&);
extern template Matrix<Rational> gram_matrix_reference(int, const HWParams<Rational>&);
extern template Matrix<Polynomial> gram_matrix_reference(int, const HWParams<Polynomial>&);

} // namespace w22

#endif
