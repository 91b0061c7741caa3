#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace minfol {

// Permutation of {0, ..., n-1}. External text and JSON use 1-based labels.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t n);
  // 1-based cycles, e.g. {{1, 2, 3}, {4, 5}}.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);
  // Cycle notation "(1 2 3)(4 5)" or "(1,2,3)". "()" and "" denote the identity.
  static Permutation parse(std::string_view text, std::size_t n);
  // Degree inferred from the largest label.
  static Permutation parse(std::string_view text);

  std::size_t size() const { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  // 0-based cycles, each starting at its smallest element, sorted by that element.
  std::vector<std::vector<int>> cycles() const;
  std::vector<std::vector<int>> cycles_one_based(bool include_fixed = false) const;
  std::size_t num_cycles() const { return cycles().size(); }
  std::vector<int> cycle_type() const;  // sorted descending
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Function composition: (f * g)(i) = f(g(i)), so g acts first.
Permutation operator*(const Permutation& f, const Permutation& g);

// Orbits of the group generated by gens (0-based, sorted).
std::vector<std::vector<int>> orbits(std::span<const Permutation> gens, std::size_t n);
bool is_transitive(std::span<const Permutation> gens, std::size_t n);

}  // namespace minfol
