#include "minfol/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "minfol/error.hpp"

namespace minfol {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
      throw DomainError("not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      int a = c[k], b = c[(k + 1) % c.size()];
      if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n || static_cast<std::size_t>(b) > n)
        throw DomainError("cycle label out of range 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(a - 1)]) throw DomainError("label repeated in cycle notation");
      used[static_cast<std::size_t>(a - 1)] = true;
      v[static_cast<std::size_t>(a - 1)] = b - 1;
    }
  }
  return Permutation(std::move(v));
}

namespace {

std::vector<std::vector<int>> parse_cycle_lists(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw DomainError("malformed cycle notation: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw DomainError("malformed cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw DomainError("malformed cycle notation: unexpected '" + std::string(1, text[i]) + "'");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1000000) throw DomainError("malformed cycle notation: label too large");
        ++i;
      }
      cycle.push_back(value);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cycles;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, std::size_t n) {
  return from_cycles(n, parse_cycle_lists(text));
}

Permutation Permutation::parse(std::string_view text) {
  auto cycles = parse_cycle_lists(text);
  int n = 0;
  for (const auto& c : cycles)
    for (int x : c) n = std::max(n, x);
  return from_cycles(static_cast<std::size_t>(n), cycles);
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int j = static_cast<int>(s); !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<int>> Permutation::cycles_one_based(bool include_fixed) const {
  std::vector<std::vector<int>> out;
  for (auto c : cycles()) {
    if (c.size() == 1 && !include_fixed) continue;
    for (auto& x : c) ++x;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string Permutation::to_string() const {
  auto cs = cycles_one_based();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw DomainError("composing permutations of different degree");
  std::vector<int> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = f(g(static_cast<int>(i)));
  return Permutation(std::move(v));
}

std::vector<std::vector<int>> orbits(std::span<const Permutation> gens, std::size_t n) {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> orbit{static_cast<int>(s)};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& g : gens) {
        // Forward images suffice: every element of a finite group is a positive word.
        int y = g(orbit[k]);
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(std::span<const Permutation> gens, std::size_t n) {
  return n == 0 || orbits(gens, n).size() == 1;
}

}  // namespace minfol
