#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "movcone/errors.hpp"

namespace movcone {

/// A permutation of {1, ..., m}; images()[l - 1] is sigma(l).
///
/// Composition is right-to-left: (sigma * tau)(l) = sigma(tau(l)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
      if (x < 1 || x > static_cast<int>(images_.size()) || seen[x])
        throw ParameterError("not a permutation of 1.." + std::to_string(images_.size()));
      seen[x] = true;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> images(m);
    for (int l = 0; l < m; ++l) images[l] = l + 1;
    return Permutation(std::move(images));
  }

  static Permutation transposition(int m, int i, int j) { return cycle(m, {i, j}); }

  /// The cycle (a1, a2, ..., ak): a1 -> a2 -> ... -> ak -> a1.
  static Permutation cycle(int m, const std::vector<int>& points) {
    Permutation p = identity(m);
    for (std::size_t k = 0; k < points.size(); ++k) {
      const int from = points[k];
      const int to = points[(k + 1) % points.size()];
      if (from < 1 || from > m) throw ParameterError("cycle point out of range");
      p.images_[from - 1] = to;
    }
    return Permutation(p.images_);  // revalidates repeated points
  }

  static Permutation cycle(int m, std::initializer_list<int> points) {
    return cycle(m, std::vector<int>(points));
  }

  /// Cycle (first, first + 1, ..., last); the identity when first >= last.
  static Permutation consecutive_cycle(int m, int first, int last) {
    std::vector<int> pts;
    for (int k = first; k <= last; ++k) pts.push_back(k);
    return cycle(m, pts);
  }

  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }

  int operator()(int l) const {
    if (l < 1 || l > size()) throw ParameterError("permutation argument out of range");
    return images_[l - 1];
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int l = 1; l <= size(); ++l) inv[images_[l - 1] - 1] = l;
    return Permutation(std::move(inv));
  }

  bool is_identity() const {
    for (int l = 1; l <= size(); ++l)
      if (images_[l - 1] != l) return false;
    return true;
  }

  /// +1 for even, -1 for odd permutations.
  int sign() const {
    std::vector<bool> seen(images_.size(), false);
    int s = 1;
    for (int l = 0; l < size(); ++l) {
      if (seen[l]) continue;
      int len = 0;
      for (int x = l; !seen[x]; x = images_[x] - 1) {
        seen[x] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw ParameterError("permutation size mismatch");
    std::vector<int> images(a.images_.size());
    for (int l = 1; l <= a.size(); ++l) images[l - 1] = a(b(l));
    Permutation out;
    out.images_ = std::move(images);
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All permutations of {1..m} in lexicographic order of their image lists.
inline std::vector<Permutation> all_permutations(int m) {
  std::vector<int> images(m);
  for (int l = 0; l < m; ++l) images[l] = l + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace movcone
