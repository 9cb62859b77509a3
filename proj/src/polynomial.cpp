#include "w22/polynomial.hpp"

#include "w22/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace w22 {

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (exp[i] > o.exp[i])
      return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i)
    r.exp[i] = a.exp[i] + b.exp[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i)
    r.exp[i] = a.exp[i] - b.exp[i];
  return r;
}

bool monomial_greater(const Monomial& a, const Monomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db)
    return da > db;
  return a.exp > b.exp;
}

namespace {

struct Greater {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_greater(a, b); }
};

using TermMap = std::map<Monomial, Rational, Greater>;

} // namespace

Polynomial::Polynomial(const Rational& r) {
  if (!r.is_zero())
    terms_.emplace_back(Monomial{}, r);
}

Polynomial Polynomial::variable(Var v) {
  Monomial m;
  m.exp[static_cast<std::size_t>(v)] = 1;
  return term(m, Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& coeff) {
  Polynomial p;
  if (!coeff.is_zero())
    p.terms_.emplace_back(m, coeff);
  return p;
}

Polynomial Polynomial::from_sorted(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, m.degree());
  return d;
}

Rational Polynomial::evaluate(const std::array<Rational, kNumVars>& point) const {
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < kNumVars; ++i)
      for (std::uint32_t k = 0; k < m.exp[i]; ++k)
        t *= point[i];
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_)
    t.second = -t.second;
  return r;
}

namespace {

// Merge two descending term lists; sign is +1 or -1 applied to b.
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && monomial_greater(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || monomial_greater(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : -b[j].second);
      ++j;
    } else {
      Rational c = sign > 0 ? a[i].second + b[j].second : a[i].second - b[j].second;
      if (!c.is_zero())
        out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  TermMap acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ma * mb, ca * cb);
      if (!inserted)
        it->second += ca * cb;
    }
  std::vector<Polynomial::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero())
      out.emplace_back(m, std::move(c));
  return Polynomial::from_sorted(std::move(out));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  if (b.terms_.size() == 1) {
    const auto& [mb, cb] = b.terms_[0];
    std::vector<Polynomial::Term> out;
    out.reserve(a.terms_.size());
    for (const auto& [m, c] : a.terms_) {
      if (!mb.divides(m))
        throw std::domain_error("inexact polynomial division");
      out.emplace_back(m / mb, c / cb);
    }
    return Polynomial::from_sorted(std::move(out));
  }
  // Leading-term division; exact quotients leave no remainder in any monomial order.
  const auto& [lead_m, lead_c] = b.terms_.front();
  TermMap rem;
  for (const auto& [m, c] : a.terms_)
    rem.emplace(m, c);
  TermMap quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead_m.divides(it->first))
      throw std::domain_error("inexact polynomial division");
    Monomial qm = it->first / lead_m;
    Rational qc = it->second / lead_c;
    quot.emplace(qm, qc);
    for (const auto& [mb, cb] : b.terms_) {
      auto [r, inserted] = rem.try_emplace(qm * mb, -(qc * cb));
      if (!inserted) {
        r->second -= qc * cb;
        if (r->second.is_zero())
          rem.erase(r);
      }
    }
  }
  std::vector<Polynomial::Term> out(quot.begin(), quot.end());
  return Polynomial::from_sorted(std::move(out));
}

std::string Polynomial::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    if (neg)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    bool need_star = false;
    if (!mag.is_one() || m.is_constant()) {
      out += mag.str();
      need_star = true;
    }
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m.exp[i] == 0)
        continue;
      if (need_star)
        out += '*';
      out += kVarNames[i];
      if (m.exp[i] > 1)
        out += '^' + std::to_string(m.exp[i]);
      need_star = true;
    }
  }
  return out;
}

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial run() {
    if (s_.empty())
      fail("empty polynomial");
    Polynomial sum;
    bool first = true;
    while (pos_ < s_.size() || first) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Polynomial t = term();
      sum += sign > 0 ? t : -t;
    }
    return sum;
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad polynomial '" + std::string(s_) + "': " + what);
  }

  Polynomial term() {
    Rational coeff(1);
    Monomial m;
    bool any = false;
    while (true) {
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= number();
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        auto [var, e] = power();
        m.exp[var] += e;
      } else {
        fail("expected factor");
      }
      any = true;
      if (peek() != '*')
        break;
      ++pos_;
    }
    if (!any)
      fail("empty term");
    return Polynomial::term(m, coeff);
  }

  Rational number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("bad denominator");
      while (std::isdigit(static_cast<unsigned char>(peek())))
        ++pos_;
    }
    if (peek() == '.' || peek() == 'e' || peek() == 'E')
      fail("floating-point literal");
    return Rational::parse(s_.substr(start, pos_ - start));
  }

  std::pair<std::size_t, std::uint32_t> power() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())))
      ++pos_;
    auto name = s_.substr(start, pos_ - start);
    auto it = std::find(kVarNames.begin(), kVarNames.end(), name);
    if (it == kVarNames.end())
      fail("unknown variable '" + std::string(name) + "'");
    std::uint32_t e = 1;
    if (peek() == '^') {
      ++pos_;
      std::size_t es = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        ++pos_;
      if (es == pos_)
        fail("missing exponent");
      e = static_cast<std::uint32_t>(std::stoul(std::string(s_.substr(es, pos_ - es))));
    }
    return {static_cast<std::size_t>(it - kVarNames.begin()), e};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(std::string_view s) { return PolyParser(s).run(); }

} // namespace w22
