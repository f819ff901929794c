#include "opkit/permutation.hpp"

#include "opkit/rational.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace opkit {

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

bool is_permutation_of_range(const std::vector<int>& values) {
  std::vector<char> seen(values.size() + 1, 0);
  for (int v : values) {
    if (v < 1 || v > static_cast<int>(values.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (!is_permutation_of_range(images_))
    throw std::invalid_argument("not a permutation of {1.." + std::to_string(images_.size()) + "}");
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int m, int a, int b) {
  if (a < 1 || b < 1 || a > m || b > m) throw std::invalid_argument("transposition out of range");
  auto p = identity(m);
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::unrank(int m, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(m) + 1, 1);
  for (int i = 1; i <= m; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
  if (rank >= fact[static_cast<std::size_t>(m)]) throw std::invalid_argument("permutation rank out of range");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = m; i >= 1; --i) {
    auto f = fact[static_cast<std::size_t>(i - 1)];
    auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

std::uint64_t lex_rank(const std::vector<int>& images) {
  const auto m = images.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < m; ++j)
      if (images[j] < images[i]) ++smaller;
    rank = rank * (m - i) + smaller;
  }
  return rank;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

int Permutation::sign() const {
  std::vector<char> seen(images_.size(), 0);
  int s = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::uint64_t Permutation::rank() const { return lex_rank(images_); }

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> out(s.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = t(s.images_[i]);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  auto p = Permutation::identity(m);
  std::vector<int> v = p.images();
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace opkit
