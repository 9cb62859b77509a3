#include "w22/verma.hpp"

#include "w22/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>

namespace w22 {

namespace {

std::atomic<int> g_max_level{kDefaultMaxLevel};
std::atomic<int> g_max_symbolic_level{kDefaultMaxSymbolicLevel};

// Partitions of n into parts <= max_part, nonincreasing, appended to out.
void partitions(int n, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

using BasisIndex = std::map<BasisMonomial, std::size_t, BasisLess>;

BasisIndex index_of(const std::vector<BasisMonomial>& basis) {
  BasisIndex idx;
  for (std::size_t i = 0; i < basis.size(); ++i)
    idx.emplace(basis[i], i);
  return idx;
}

Generator raising(Kind k, int j) { return k == Kind::I ? Generator::I(j) : Generator::L(j); }

} // namespace

int max_level() { return g_max_level.load(); }
int max_symbolic_level() { return g_max_symbolic_level.load(); }
void set_max_level(int n) { g_max_level.store(n); }
void set_max_symbolic_level(int n) { g_max_symbolic_level.store(n); }

void check_level(int n, int bound) {
  if (n < 0)
    throw std::invalid_argument("level must be nonnegative");
  if (n > bound)
    throw LevelBoundExceeded("level " + std::to_string(n) + " exceeds bound " +
                             std::to_string(bound));
}

int BasisMonomial::level() const {
  int s = 0;
  for (int k : i_part)
    s += k;
  for (int k : l_part)
    s += k;
  return s;
}

Word BasisMonomial::word() const {
  Word w;
  for (int k : i_part)
    w.push_back(Generator::I(-k));
  for (int k : l_part)
    w.push_back(Generator::L(-k));
  return w;
}

std::string BasisMonomial::str() const { return word_str(word()); }

std::pair<Generator, BasisMonomial> split_leading(const BasisMonomial& m) {
  BasisMonomial rest = m;
  if (!m.i_part.empty()) {
    rest.i_part.erase(rest.i_part.begin());
    return {Generator::I(-m.i_part.front()), rest};
  }
  if (m.l_part.empty())
    throw std::invalid_argument("highest weight vector has no leading factor");
  rest.l_part.erase(rest.l_part.begin());
  return {Generator::L(-m.l_part.front()), rest};
}

std::vector<BasisMonomial> level_basis_unchecked(int n) {
  std::vector<BasisMonomial> basis;
  if (n < 0)
    return basis;
  for (int a = 0; a <= n; ++a) {
    std::vector<std::vector<int>> ip, lp;
    std::vector<int> prefix;
    partitions(a, a, prefix, ip);
    partitions(n - a, n - a, prefix, lp);
    for (const auto& i : ip)
      for (const auto& l : lp)
        basis.push_back({i, l});
  }
  std::sort(basis.begin(), basis.end(), BasisLess{});
  return basis;
}

std::vector<BasisMonomial> level_basis(int n) {
  check_level(n, max_level());
  return level_basis_unchecked(n);
}

template <ScalarRing R>
Matrix<R> action_matrix(const HWParams<R>& p, const Generator& g, int level) {
  const auto src = level_basis_unchecked(level);
  const auto dst = level_basis_unchecked(level - static_cast<int>(g.weight()));
  const auto idx = index_of(dst);
  Matrix<R> m(dst.size(), src.size());
  const auto cols = static_cast<std::ptrdiff_t>(src.size());
#pragma omp parallel
  {
    VermaModule<R> mod(p);
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t j = 0; j < cols; ++j)
      for (const auto& [b, c] : mod.act(g, src[static_cast<std::size_t>(j)]))
        m(idx.at(b), static_cast<std::size_t>(j)) = c;
  }
  return m;
}

template <ScalarRing R>
Matrix<R> gram_matrix(int n, const HWParams<R>& p) {
  check_level(n, level_bound<R>());
  std::vector<Matrix<R>> gram(static_cast<std::size_t>(n) + 1);
  std::vector<BasisIndex> index(static_cast<std::size_t>(n) + 1);
  gram[0] = Matrix<R>::identity(1);
  index[0] = index_of(level_basis_unchecked(0));

  for (int k = 1; k <= n; ++k) {
    const auto basis = level_basis_unchecked(k);
    index[static_cast<std::size_t>(k)] = index_of(basis);
    // raise[kind][j]: L(j) or I(j) from level k down to level k - j.
    std::vector<Matrix<R>> raise_l(static_cast<std::size_t>(k) + 1), raise_i(static_cast<std::size_t>(k) + 1);
    for (int j = 1; j <= k; ++j) {
      raise_l[static_cast<std::size_t>(j)] = action_matrix(p, raising(Kind::L, j), k);
      raise_i[static_cast<std::size_t>(j)] = action_matrix(p, raising(Kind::I, j), k);
    }
    const std::size_t d = basis.size();
    Matrix<R> g(d, d);
    const auto rows = static_cast<std::ptrdiff_t>(d);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t xi = 0; xi < rows; ++xi) {
      const auto x = static_cast<std::size_t>(xi);
      auto [head, rest] = split_leading(basis[x]);
      const auto j = static_cast<std::size_t>(-head.index());
      const auto& a = head.kind() == Kind::I ? raise_i[j] : raise_l[j];
      const auto& lower = gram[static_cast<std::size_t>(k) - j];
      const std::size_t r = index[static_cast<std::size_t>(k) - j].at(rest);
      for (std::size_t z = 0; z < a.rows(); ++z) {
        const R& lz = lower(r, z);
        if (lz.is_zero())
          continue;
        for (std::size_t y = 0; y < d; ++y)
          if (!a(z, y).is_zero())
            g(x, y) = g(x, y) + lz * a(z, y);
      }
    }
    gram[static_cast<std::size_t>(k)] = std::move(g);
  }
  return gram[static_cast<std::size_t>(n)];
}

template <ScalarRing R>
Matrix<R> gram_matrix_reference(int n, const HWParams<R>& p) {
  check_level(n, level_bound<R>());
  const auto basis = level_basis_unchecked(n);
  VermaModule<R> mod(p);
  const BasisMonomial top{};
  Matrix<R> g(basis.size(), basis.size());
  for (std::size_t x = 0; x < basis.size(); ++x) {
    const UEQ adjoint = omega(UEQ(basis[x].word()));
    for (std::size_t y = 0; y < basis.size(); ++y)
      g(x, y) = mod.apply(adjoint, basis[y]).coeff(top);
  }
  return g;
}

std::vector<SingularVector> singular_vectors(int n, const HWParams<Rational>& p) {
  check_level(n, max_level());
  if (n < 1)
    throw std::invalid_argument("singular vectors live at level >= 1");
  const auto basis = level_basis_unchecked(n);
  std::vector<Matrix<Rational>> blocks;
  for (auto g : {Generator::L(1), Generator::L(2), Generator::I(1), Generator::I(2)})
    if (g.weight() <= n)
      blocks.push_back(action_matrix(p, g, n));
  std::size_t rows = 0;
  for (const auto& b : blocks)
    rows += b.rows();
  Matrix<Rational> stacked(rows, basis.size());
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        stacked(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }

  VermaModule<Rational> mod(p);
  std::vector<SingularVector> out;
  for (const auto& x : kernel(std::move(stacked))) {
    SingularVector s;
    s.vector = from_column(n, basis, x);
    auto i0w = mod.act(Generator::I(0), s.vector);
    auto scaled = s.vector;
    scaled.coords *= p.c0;
    s.i0_eigenvector = i0w == scaled;
    out.push_back(std::move(s));
  }
  return out;
}

ReducibilityWitness is_reducible(const Rational& c0, const Rational& c1) {
  if (c1.is_zero()) {
    if (c0.is_zero())
      return {true, 1};
    return {false, std::nullopt};
  }
  // (m^2 - 1)/12 c1 + 2 c0 = 0  <=>  m^2 = 1 - 24 c0 / c1
  Rational t = Rational(1) - Rational(24) * c0 / c1;
  if (!t.is_integer() || t.sign() <= 0)
    return {false, std::nullopt};
  mpz_class sq = t.numerator();
  if (!mpz_perfect_square_p(sq.get_mpz_t()))
    return {false, std::nullopt};
  mpz_class root = sqrt(sq);
  if (!root.fits_slong_p())
    return {true, std::nullopt};
  return {true, root.get_si()};
}

I0Report i0_analysis(int n, const HWParams<Rational>& p) {
  I0Report rep;
  rep.level = n;
  rep.matrix = i0_matrix(n, p);
  const std::size_t d = rep.matrix.rows();
  Matrix<Rational> shift = Matrix<Rational>::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    shift(i, i) = p.c0;
  rep.nilpotent_part = rep.matrix - shift;
  rep.diagonalizable = rep.nilpotent_part.is_zero();
  rep.nilpotent_within_bound = power(rep.nilpotent_part, static_cast<unsigned>(n) + 1).is_zero();

  // ranks[k] = rank(N^k); blocks of size >= k number ranks[k-1] - ranks[k].
  std::vector<std::size_t> ranks{d};
  Matrix<Rational> pw = Matrix<Rational>::identity(d);
  while (ranks.back() > 0 && ranks.size() <= d + 1) {
    pw = pw * rep.nilpotent_part;
    ranks.push_back(rank(pw));
    if (ranks.back() == ranks[ranks.size() - 2])
      break; // not nilpotent
  }
  rep.nilpotency_index = ranks.back() == 0 ? static_cast<unsigned>(ranks.size() - 1) : 0;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    std::size_t at_least_k = ranks[k - 1] - ranks[k];
    std::size_t at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t b = 0; b < at_least_k - at_least_next; ++b)
      rep.jordan_blocks.push_back(k);
  }
  std::sort(rep.jordan_blocks.rbegin(), rep.jordan_blocks.rend());
  return rep;
}

bool in_radical(const Matrix<Rational>& gram, const std::vector<BasisMonomial>& basis,
                const VermaVector<Rational>& w) {
  auto x = to_column(basis, w);
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (!x[j].is_zero())
        s += gram(i, j) * x[j];
    if (!s.is_zero())
      return false;
  }
  return true;
}

ReducibilityWitness degeneracy_witness(const Rational& c0, const Rational& c1) {
  return is_reducible(-c0, c1);
}

bool CriterionCrossCheck::agrees_with(const ReducibilityWitness& w) const {
  if (!singular_in_radical)
    return false;
  int expected = 0;
  if (w.reducible && w.witness_m && *w.witness_m <= max_level)
    expected = static_cast<int>(*w.witness_m);
  for (int n = 1; n <= max_level; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    const bool degenerate = dets[i].is_zero();
    const bool singular = singular_counts[i] > 0;
    if (n < expected || expected == 0) {
      if (degenerate || singular)
        return false;
    } else if (n == expected) {
      return degenerate && singular;
    }
  }
  return true;
}

CriterionCrossCheck criterion_cross_check(const HWParams<Rational>& p, int max_level) {
  CriterionCrossCheck cc;
  cc.params = p;
  cc.max_level = max_level;
  cc.stated = is_reducible(p.c0, p.c1);
  cc.engine = degeneracy_witness(p.c0, p.c1);
  for (int n = 1; n <= max_level; ++n) {
    auto gram = gram_matrix(n, p);
    cc.dets.push_back(determinant(gram));
    if (cc.dets.back().is_zero() && cc.first_degenerate_level == 0)
      cc.first_degenerate_level = n;
    auto basis = level_basis_unchecked(n);
    auto sv = singular_vectors(n, p);
    for (const auto& s : sv)
      cc.singular_in_radical = cc.singular_in_radical && in_radical(gram, basis, s.vector);
    cc.singular_counts.push_back(sv.size());
  }
  return cc;
}

template class VermaModule<Rational>;
template class VermaModule<Polynomial>;
template Matrix<Rational> action_matrix(const HWParams<Rational>&, const Generator&, int);
template Matrix<Polynomial> action_matrix(const HWParams<Polynomial>&, const Generator&, int);
template Matrix<Rational> gram_matrix(int, const HWParams<Rational>&);
template Matrix<Polynomial> gram_matrix(int, const HWParams<Polynomial>&);
template Matrix<Rational> gram_matrix_reference(int, const HWParams<Rational>&);
template Matrix<Polynomial> gram_matrix_reference(int, const HWParams<Polynomial>&);

} // namespace w22
