#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "tpsym/common.hpp"
#include "tpsym/index_map.hpp"
#include "tpsym/partitions.hpp"
#include "tpsym/perm.hpp"

namespace tpsym {

/// Image of |L> under T_{d,sigma}: decompose L in shape d, move digit r to
/// slot sigma(r) (so the new slot r holds digit sigma^-1(r)), and read the
/// result back in the permuted shape sigma(d).
inline label_t step(label_t flat, const Dims& d, const SubsystemPerm& sigma) {
  require(sigma.size() == d.size(), "permutation and shape sizes differ");
  const MultiIndex m = flat_to_multi(flat, d);
  const SubsystemPerm inv = sigma.inverse();
  const int k = d.size();
  std::vector<label_t> digits(static_cast<std::size_t>(k));
  std::vector<label_t> radices(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) {
    digits[static_cast<std::size_t>(r)] = m.digits[static_cast<std::size_t>(inv(r))];
    radices[static_cast<std::size_t>(r)] = d[inv(r)];
  }
  return multi_to_flat(MultiIndex{std::move(digits)}, Dims(std::move(radices)));
}

/// Bipartite exchange recurrence L' = d1*L - floor(L/d2)*(N-1).
inline label_t bipartite_step(label_t flat, label_t d1, label_t d2) {
  require(d1 >= 2 && d2 >= 2, "subsystem dimensions must be greater than 1");
  const label_t n = d1 * d2;
  require(flat >= 0 && flat < n, "basis label out of range");
  return d1 * flat - (flat / d2) * (n - 1);
}

/// Full image table of T_{d,sigma} on labels 0..N-1.
inline std::vector<label_t> image_table(const Dims& d, const SubsystemPerm& sigma) {
  std::vector<label_t> table(static_cast<std::size_t>(d.product()));
  for (label_t l = 0; l < d.product(); ++l) table[static_cast<std::size_t>(l)] = step(l, d, sigma);
  return table;
}

/// Canonical disjoint cycles of an image table: each cycle starts at its
/// minimum element and cycles are sorted by that minimum. 1-cycles are kept.
inline std::vector<std::vector<label_t>> canonical_cycles(const std::vector<label_t>& table) {
  const label_t n = static_cast<label_t>(table.size());
  std::vector<char> seen(table.size(), 0);
  std::vector<std::vector<label_t>> cycles;
  for (label_t start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<label_t> cycle;
    for (label_t l = start; !seen[static_cast<std::size_t>(l)]; l = table[static_cast<std::size_t>(l)]) {
      seen[static_cast<std::size_t>(l)] = 1;
      cycle.push_back(l);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

/// pi(d,sigma) as disjoint cycles over basis labels, in canonical form.
struct CycleDecomp {
  Dims shape;
  SubsystemPerm sigma;
  std::vector<std::vector<label_t>> cycles;

  label_t size() const { return shape.product(); }

  std::vector<label_t> lengths() const {
    std::vector<label_t> out;
    out.reserve(cycles.size());
    for (const auto& c : cycles) out.push_back(static_cast<label_t>(c.size()));
    return out;
  }

  /// lcm of the cycle lengths; T^order = identity.
  label_t order() const {
    label_t m = 1;
    for (const auto& c : cycles) m = std::lcm(m, static_cast<label_t>(c.size()));
    return m;
  }

  label_t count_of_length(label_t l) const {
    label_t n = 0;
    for (const auto& c : cycles)
      if (static_cast<label_t>(c.size()) == l) ++n;
    return n;
  }

  label_t even_length_count() const {
    label_t n = 0;
    for (const auto& c : cycles)
      if (c.size() % 2 == 0) ++n;
    return n;
  }
};

inline CycleDecomp cycle_decomposition(const Dims& d, const SubsystemPerm& sigma) {
  return CycleDecomp{d, sigma, canonical_cycles(image_table(d, sigma))};
}

inline CycleDecomp cycle_decomposition(label_t d1, label_t d2) {
  return cycle_decomposition(Dims({d1, d2}), SubsystemPerm::exchange());
}

/// Moebius function: 1 at 1, (-1)^k on squarefree n with k prime factors, else 0.
inline int mobius(label_t n) {
  require(n >= 1, "Moebius function needs n >= 1");
  int k = 0;
  for (label_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++k;
  }
  if (n > 1) ++k;
  return (k & 1) ? -1 : 1;
}

namespace detail {
inline label_t pow_mod(label_t base, label_t exp, label_t mod) {
  label_t result = 1 % mod;
  base %= mod;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
  }
  return result;
}
}  // namespace detail

/// l* = min{p >= 1 : d2^p == 1 (mod N-1)}. Every cycle length of
/// pi(d1,d2) divides l*.
inline label_t l_star(label_t d1, label_t d2) {
  require(d1 >= 2 && d2 >= 2, "subsystem dimensions must be greater than 1");
  const label_t m = d1 * d2 - 1;
  // d2 divides N, so gcd(d2, N-1) = 1 and the order exists.
  label_t acc = d2 % m;
  for (label_t p = 1;; ++p) {
    if (acc == 1 % m) return p;
    acc = acc * d2 % m;
  }
}

/// Number of cycles of length l in pi(d1,d2):
///   sigma(1) = gcd(d2 - 1, N - 1) + 1,
///   sigma(l) = (1/l) sum_{d | l} mu(l/d) gcd(d2^d - 1, N - 1)   for l > 1.
/// Vanishes whenever l does not divide l*.
inline label_t cycle_count(label_t l, label_t d1, label_t d2) {
  require(l >= 1, "cycle length must be positive");
  require(d1 >= 2 && d2 >= 2, "subsystem dimensions must be greater than 1");
  const label_t m = d1 * d2 - 1;
  auto gcd_pow = [&](label_t e) {
    const label_t r = (detail::pow_mod(d2, e, m) + m - 1 % m) % m;
    return std::gcd(r, m);  // gcd(0, m) = m
  };
  if (l == 1) return gcd_pow(1) + 1;
  label_t sum = 0;
  for (label_t div = 1; div <= l; ++div) {
    if (l % div != 0) continue;
    sum += mobius(l / div) * gcd_pow(div);
  }
  return sum / l;
}

/// Both sides of pi(d, s1∘s2) = pi(s2(d), s1) ∘ pi(d, s2) as image tables.
inline std::pair<std::vector<label_t>, std::vector<label_t>> compose_check(
    const Dims& d, const SubsystemPerm& s1, const SubsystemPerm& s2) {
  std::vector<label_t> lhs = image_table(d, s1.compose(s2));
  const std::vector<label_t> first = image_table(d, s2);
  const std::vector<label_t> second = image_table(apply_perm(s2, d), s1);
  std::vector<label_t> rhs(first.size());
  for (std::size_t l = 0; l < first.size(); ++l)
    rhs[l] = second[static_cast<std::size_t>(first[l])];
  return {std::move(lhs), std::move(rhs)};
}

/// Verifies pi(sigma(d), sigma^-1) = pi(d, sigma)^-1.
inline bool inverse_check(const Dims& d, const SubsystemPerm& sigma) {
  const std::vector<label_t> fwd = image_table(d, sigma);
  const std::vector<label_t> candidate = image_table(apply_perm(sigma, d), sigma.inverse());
  for (std::size_t l = 0; l < fwd.size(); ++l)
    if (candidate[static_cast<std::size_t>(fwd[l])] != static_cast<label_t>(l)) return false;
  return true;
}

/// Result of the coarse-graining search: permutations over the primitive
/// partition's slots with pi(s1(d_p), s2) = pi(d', sigma'). "found == false"
/// is a reportable outcome, not an error.
struct CoarseGrainMatch {
  bool found = false;
  std::optional<SubsystemPerm> sigma1;
  std::optional<SubsystemPerm> sigma2;
};

/// Exhaustive search over S_Omega x S_Omega in lexicographic order; the first
/// valid pair wins.
inline CoarseGrainMatch coarse_grain_match(const Dims& d_prime, const SubsystemPerm& sigma_prime,
                                           long budget = limits::default_match_budget) {
  const label_t n = d_prime.product();
  const Dims d_p = primitive_partition(n);
  require(d_p.size() > d_prime.size(), "shape is not a coarse-graining of the primitive partition");
  const long k = d_p.size();
  long pairs = 1;
  for (long i = 2; i <= k; ++i) pairs *= i;
  if (pairs > budget / pairs) throw budget_error("coarse-grain search budget exceeded");
  pairs *= pairs;
  if (pairs > budget) throw budget_error("coarse-grain search budget exceeded");

  const std::vector<label_t> target = image_table(d_prime, sigma_prime);
  const auto perms = all_permutations(static_cast<int>(k));
  for (const SubsystemPerm& s1 : perms) {
    const Dims permuted = apply_perm(s1, d_p);
    for (const SubsystemPerm& s2 : perms) {
      bool match = true;
      for (label_t l = 0; l < n && match; ++l)
        match = step(l, permuted, s2) == target[static_cast<std::size_t>(l)];
      if (match) return CoarseGrainMatch{true, s1, s2};
    }
  }
  return CoarseGrainMatch{};
}

}  // namespace tpsym
