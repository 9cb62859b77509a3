#include "w22/pbw.hpp"

#include "w22/errors.hpp"

namespace w22 {

bool is_sorted_word(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] < w[i - 1])
      return false;
  return true;
}

std::string word_str(const Word& w) {
  if (w.empty())
    return "1";
  std::string s;
  for (const auto& g : w)
    s += g.str();
  return s;
}

namespace {

// Position i with w[i] > w[i+1], or npos.
std::size_t find_inversion(const Word& w, RewriteStrategy strategy) {
  if (w.size() < 2)
    return std::string::npos;
  if (strategy == RewriteStrategy::LeftmostFirst) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i + 1] < w[i])
        return i;
  } else {
    for (std::size_t i = w.size() - 1; i-- > 0;)
      if (w[i + 1] < w[i])
        return i;
  }
  return std::string::npos;
}

void check_length(const Word& w, std::size_t max_len) {
  if (w.size() > max_len)
    throw WordLengthExceeded("word of length " + std::to_string(w.size()) + " exceeds bound " +
                             std::to_string(max_len));
}

} // namespace

UEQ normal_order(const UEQ& u, RewriteStrategy strategy, std::size_t max_len) {
  for (const auto& [w, c] : u)
    check_length(w, max_len);
  UEQ pending = u;
  UEQ done;
  while (!pending.is_zero()) {
    // Longest words first: rewrites only produce equal-length or shorter words,
    // so equal terms meet in `pending` and cancel early.
    auto it = std::prev(pending.end());
    Word w = it->first;
    Rational c = it->second;
    pending.add(w, -c);

    auto i = find_inversion(w, strategy);
    if (i == std::string::npos) {
      done.add(w, c);
      continue;
    }
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    pending.add(swapped, c);
    for (const auto& [g, q] : bracket(w[i], w[i + 1])) {
      Word shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      shorter.push_back(g);
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
      pending.add(shorter, q * c);
    }
  }
  return done;
}

UEQ normal_order(const Word& w, RewriteStrategy strategy, std::size_t max_len) {
  return normal_order(UEQ(w), strategy, max_len);
}

Word omega_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    switch (it->kind()) {
    case Kind::L:
      out.push_back(Generator::L(-it->index()));
      break;
    case Kind::I:
      out.push_back(Generator::I(-it->index()));
      break;
    default:
      out.push_back(*it);
    }
  }
  return out;
}

} // namespace w22
