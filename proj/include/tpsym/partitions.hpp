#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tpsym/common.hpp"
#include "tpsym/perm.hpp"

namespace tpsym {

/// An ordered multiplicative partition d = [d_1,...,d_k] of N, every entry >= 2.
/// This is the shape of a tensor product decomposition of C^N.
class Dims {
 public:
  explicit Dims(std::vector<label_t> entries) : entries_(std::move(entries)) {
    require(!entries_.empty(), "shape needs at least one factor");
    product_ = 1;
    for (label_t d : entries_) {
      require(d >= 2, "subsystem dimensions must be greater than 1");
      require(product_ <= limits::max_dimension / d, "shape product exceeds the dimension limit");
      product_ *= d;
    }
  }

  label_t product() const { return product_; }
  int size() const { return static_cast<int>(entries_.size()); }
  label_t operator[](int slot) const { return entries_[static_cast<std::size_t>(slot)]; }
  const std::vector<label_t>& entries() const { return entries_; }

  bool is_homogeneous() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](label_t d) { return d == entries_.front(); });
  }

  label_t max_entry() const { return *std::max_element(entries_.begin(), entries_.end()); }
  label_t min_entry() const { return *std::min_element(entries_.begin(), entries_.end()); }

  /// "2x2x3"
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += "x";
      out += std::to_string(entries_[i]);
    }
    return out;
  }

  friend bool operator==(const Dims& a, const Dims& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const Dims& a, const Dims& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<label_t> entries_;
  label_t product_;
};

/// sigma(d) = [d_{sigma^-1(1)},...,d_{sigma^-1(k)}].
inline Dims apply_perm(const SubsystemPerm& sigma, const Dims& d) {
  require(sigma.size() == d.size(), "permutation and shape sizes differ");
  const SubsystemPerm inv = sigma.inverse();
  std::vector<label_t> out(static_cast<std::size_t>(d.size()));
  for (int r = 0; r < d.size(); ++r) out[static_cast<std::size_t>(r)] = d[inv(r)];
  return Dims(std::move(out));
}

/// Prime factors of N with repetition, sorted ascending. Its cardinality is Omega(N).
inline std::vector<label_t> prime_factor_multiset(label_t n) {
  require(n >= 2, "prime factorization needs N >= 2");
  std::vector<label_t> out;
  for (label_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline label_t omega(label_t n) {
  return static_cast<label_t>(prime_factor_multiset(n).size());
}

/// The all-prime shape of N, entries ascending. N must be composite.
inline Dims primitive_partition(label_t n) {
  require(n >= 4, "no tensor-product shape exists below N = 4");
  auto primes = prime_factor_multiset(n);
  require(primes.size() >= 2, "prime N admits no tensor-product shape");
  return Dims(std::move(primes));
}

namespace detail {
inline void ordered_factorizations(label_t n, std::vector<label_t>& prefix,
                                   std::vector<Dims>& out) {
  for (label_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    prefix.push_back(d);
    if (n == d) {
      if (prefix.size() >= 2) out.emplace_back(prefix);
    } else {
      ordered_factorizations(n / d, prefix, out);
    }
    prefix.pop_back();
  }
}
}  // namespace detail

/// P(N): every ordered tuple of integers >= 2, length >= 2, with product N.
/// Lexicographic on entry tuples.
inline std::vector<Dims> all_partitions(label_t n) {
  require(n >= 4, "N below 4 has no multiplicative partition");
  require(omega(n) >= 2, "prime N has no multiplicative partition");
  std::vector<Dims> out;
  std::vector<label_t> prefix;
  detail::ordered_factorizations(n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// P_k(N). Out-of-range k yields the empty set.
inline std::vector<Dims> partitions_with_k(label_t n, int k) {
  std::vector<Dims> out;
  if (k < 2 || static_cast<label_t>(k) > omega(n)) return out;
  for (const Dims& d : all_partitions(n))
    if (d.size() == k) out.push_back(d);
  return out;
}

/// The permutation-equivalence class of a shape. The representative has
/// non-decreasing entries; members are sorted lexicographically.
struct PartitionClass {
  Dims representative;
  std::vector<Dims> members;
};

inline PartitionClass equivalence_class(const Dims& d) {
  std::vector<label_t> sorted = d.entries();
  std::sort(sorted.begin(), sorted.end());
  std::set<Dims> members;
  std::vector<label_t> perm = sorted;
  do {
    members.emplace(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return PartitionClass{Dims(std::move(sorted)), std::vector<Dims>(members.begin(), members.end())};
}

/// One representative (entries ascending) per equivalence class of P(N),
/// sorted lexicographically. N = 24 yields six of them.
inline std::vector<Dims> representative_partitions(label_t n) {
  std::set<Dims> reps;
  for (const Dims& d : all_partitions(n)) {
    std::vector<label_t> s = d.entries();
    std::sort(s.begin(), s.end());
    reps.emplace(std::move(s));
  }
  return {reps.begin(), reps.end()};
}

}  // namespace tpsym
