#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace opkit {

/// Permutation of {1..m}, stored as its image list.
///
/// Products are read left to right: (s * t)(i) = t(s(i)). This is the
/// convention under which leaf relabeling is a right action.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);
  /// Transposition (a b) in degree m.
  static Permutation transposition(int m, int a, int b);
  /// Lexicographic unranking, 0 <= rank < m!.
  static Permutation unrank(int m, std::uint64_t rank);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int sign() const;
  std::uint64_t rank() const;
  bool is_identity() const;

  std::string to_string() const;

  friend Permutation operator*(const Permutation& s, const Permutation& t);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// True iff `values` is a permutation of {1..values.size()}.
bool is_permutation_of_range(const std::vector<int>& values);

/// Lexicographic rank of a permutation given by its image list.
std::uint64_t lex_rank(const std::vector<int>& images);

/// All permutations of degree m in lexicographic order.
std::vector<Permutation> all_permutations(int m);

}  // namespace opkit
