#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "tpsym/common.hpp"

namespace tpsym {

/// A permutation of k subsystem slots, stored as the image map i -> sigma(i)
/// on 0-based slots. Composition is function composition: (a∘b)(i) = a(b(i)).
class SubsystemPerm {
 public:
  explicit SubsystemPerm(std::vector<int> images) : image_(std::move(images)) {
    require(!image_.empty(), "permutation must act on at least one slot");
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
      require(v >= 0 && v < static_cast<int>(image_.size()) && !seen[v],
              "slot images must form a bijection");
      seen[v] = 1;
    }
  }

  static SubsystemPerm identity(int k) {
    std::vector<int> im(static_cast<std::size_t>(k));
    std::iota(im.begin(), im.end(), 0);
    return SubsystemPerm(std::move(im));
  }

  /// The bipartite exchange (1 2); k must be 2.
  static SubsystemPerm exchange() { return SubsystemPerm({1, 0}); }

  static SubsystemPerm transposition(int k, int a, int b) {
    auto p = identity(k);
    std::swap(p.image_[static_cast<std::size_t>(a)],
              p.image_[static_cast<std::size_t>(b)]);
    return p;
  }

  /// Cyclic shift sigma_c = (1,2,...,k): slot i maps to i+1 mod k.
  static SubsystemPerm cyclic_shift(int k) {
    std::vector<int> im(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) im[static_cast<std::size_t>(i)] = (i + 1) % k;
    return SubsystemPerm(std::move(im));
  }

  /// Parses a 1-based image list, e.g. {2,3,1} for the 3-cycle.
  static SubsystemPerm from_images_one_based(const std::vector<int>& images) {
    std::vector<int> im(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) im[i] = images[i] - 1;
    return SubsystemPerm(std::move(im));
  }

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int slot) const { return image_[static_cast<std::size_t>(slot)]; }

  SubsystemPerm inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
    return SubsystemPerm(std::move(inv));
  }

  /// this ∘ other, i.e. other acts first.
  SubsystemPerm compose(const SubsystemPerm& other) const {
    require(size() == other.size(), "permutation sizes differ");
    std::vector<int> im(image_.size());
    for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>(i)] = (*this)(other(i));
    return SubsystemPerm(std::move(im));
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  bool has_fixed_point() const {
    for (int i = 0; i < size(); ++i)
      if ((*this)(i) == i) return true;
    return false;
  }

  /// 0 for even, 1 for odd.
  int parity() const {
    std::vector<char> seen(image_.size(), 0);
    int transpositions = 0;
    for (int i = 0; i < size(); ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      int len = 0;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
        seen[static_cast<std::size_t>(j)] = 1;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions & 1;
  }

  int sign() const { return parity() ? -1 : 1; }

  std::vector<int> images_one_based() const {
    std::vector<int> out(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) out[i] = image_[i] + 1;
    return out;
  }

  /// Cycle notation on 1-based slots, 1-cycles included: "((1),(2,3))".
  std::string cycle_notation() const {
    std::vector<char> seen(image_.size(), 0);
    std::string out = "(";
    for (int i = 0; i < size(); ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      if (out.size() > 1) out += ",";
      out += "(";
      bool first = true;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
        seen[static_cast<std::size_t>(j)] = 1;
        if (!first) out += ",";
        out += std::to_string(j + 1);
        first = false;
      }
      out += ")";
    }
    out += ")";
    return out;
  }

  friend bool operator==(const SubsystemPerm& a, const SubsystemPerm& b) {
    return a.image_ == b.image_;
  }
  friend bool operator<(const SubsystemPerm& a, const SubsystemPerm& b) {
    return a.image_ < b.image_;
  }

 private:
  std::vector<int> image_;
};

/// All elements of S_k in lexicographic image order.
inline std::vector<SubsystemPerm> all_permutations(int k) {
  require(k >= 1 && k <= limits::max_factorial_slots,
          "slot count outside the supported factorial budget");
  std::vector<int> im(static_cast<std::size_t>(k));
  std::iota(im.begin(), im.end(), 0);
  std::vector<SubsystemPerm> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace tpsym
