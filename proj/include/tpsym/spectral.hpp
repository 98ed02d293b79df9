#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "tpsym/common.hpp"
#include "tpsym/perm_engine.hpp"

namespace tpsym {

using complex_t = std::complex<double>;

/// Exact eigenvalue label e^{2*pi*i*exponent/order}, stored in lowest terms.
/// Floats never enter equality tests; only value() produces one.
struct RootOfUnity {
  label_t order = 1;
  label_t exponent = 0;

  static RootOfUnity make(label_t order, label_t exponent) {
    require(order >= 1, "root order must be positive");
    exponent %= order;
    if (exponent < 0) exponent += order;
    const label_t g = std::gcd(exponent == 0 ? order : exponent, order);
    return RootOfUnity{order / g, exponent / g};
  }

  static RootOfUnity one() { return RootOfUnity{1, 0}; }
  static RootOfUnity minus_one() { return RootOfUnity{2, 1}; }

  complex_t value() const {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(exponent) /
                         static_cast<double>(order);
    return {std::cos(angle), std::sin(angle)};
  }

  RootOfUnity conjugate() const { return make(order, order - exponent); }
  bool is_one() const { return order == 1; }

  /// "1", "-1", "i", "-i", otherwise "exp(2i*pi*m/l)".
  std::string to_string() const {
    if (order == 1) return "1";
    if (order == 2) return "-1";
    if (order == 4 && exponent == 1) return "i";
    if (order == 4 && exponent == 3) return "-i";
    return "exp(2i*pi*" + std::to_string(exponent) + "/" + std::to_string(order) + ")";
  }

  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    return a.order == b.order && a.exponent == b.exponent;
  }
  /// Orders by angle in [0, 2*pi), exactly.
  friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
    return a.exponent * b.order < b.exponent * a.order;
  }
};

/// T_{d,sigma} as a permutation of basis labels: a 0/1 matrix with one unit
/// entry per row and column, kept as an image table.
struct PermOperator {
  Dims shape;
  SubsystemPerm sigma;
  std::vector<label_t> image;

  label_t size() const { return static_cast<label_t>(image.size()); }

  label_t operator()(label_t l) const { return image[static_cast<std::size_t>(l)]; }

  /// <m|T|n> = 1 iff m = image[n].
  Eigen::MatrixXd dense(label_t dense_limit = limits::default_dense_limit) const {
    require(size() <= dense_limit, "dense matrix exceeds the configured size limit");
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(size(), size());
    for (label_t n = 0; n < size(); ++n) t((*this)(n), n) = 1.0;
    return t;
  }

  Eigen::MatrixXcd dense_complex(label_t dense_limit = limits::default_dense_limit) const {
    return dense(dense_limit).cast<complex_t>();
  }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const {
    Eigen::VectorXcd out(size());
    for (label_t n = 0; n < size(); ++n) out((*this)(n)) = v(n);
    return out;
  }
};

inline PermOperator build_operator(const Dims& d, const SubsystemPerm& sigma) {
  return PermOperator{d, sigma, image_table(d, sigma)};
}

/// Spectrum as (eigenvalue, multiplicity) pairs sorted by angle. An l-cycle
/// contributes every l-th root of unity once, so the multiplicity of a root
/// of order o is the number of cycles whose length o divides.
inline std::vector<std::pair<RootOfUnity, label_t>> spectrum(const CycleDecomp& cd) {
  std::map<RootOfUnity, label_t> mult;
  for (const auto& cycle : cd.cycles) {
    const label_t l = static_cast<label_t>(cycle.size());
    for (label_t m = 0; m < l; ++m) mult[RootOfUnity::make(l, m)]++;
  }
  return {mult.begin(), mult.end()};
}

inline std::vector<std::pair<RootOfUnity, label_t>> spectrum(const Dims& d,
                                                             const SubsystemPerm& sigma) {
  return spectrum(cycle_decomposition(d, sigma));
}

/// Eigenvector of the cycle (L_1,...,L_l) for eigenvalue e^{2*pi*i*m/l}:
///   (1/sqrt(l)) * sum_r lambda^{-(r-1)} |L_r>,
/// phased so the coefficient of the cycle minimum L_1 is real positive.
inline Eigen::VectorXcd cycle_eigenvector(const std::vector<label_t>& cycle, label_t m,
                                          label_t dimension) {
  const label_t l = static_cast<label_t>(cycle.size());
  require(l >= 1 && m >= 0 && m < l, "eigenvalue exponent out of range for this cycle");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dimension);
  const double norm = 1.0 / std::sqrt(static_cast<double>(l));
  for (label_t r = 0; r < l; ++r) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(m) *
                         static_cast<double>(r) / static_cast<double>(l);
    v(cycle[static_cast<std::size_t>(r)]) = norm * complex_t{std::cos(angle), std::sin(angle)};
  }
  return v;
}

/// Orthonormal basis of the eigenspace S^eta: one vector per cycle whose
/// length is a multiple of eta's order. Empty when eta is not in the spectrum.
struct EigenspaceBasis {
  RootOfUnity eigenvalue;
  Dims shape;
  SubsystemPerm sigma;
  std::vector<Eigen::VectorXcd> vectors;

  label_t dimension() const { return static_cast<label_t>(vectors.size()); }

  Eigen::MatrixXcd matrix() const {
    Eigen::MatrixXcd b(shape.product(), dimension());
    for (label_t c = 0; c < dimension(); ++c) b.col(c) = vectors[static_cast<std::size_t>(c)];
    return b;
  }
};

inline EigenspaceBasis eigenspace(const CycleDecomp& cd, const RootOfUnity& eta) {
  EigenspaceBasis basis{eta, cd.shape, cd.sigma, {}};
  for (const auto& cycle : cd.cycles) {
    const label_t l = static_cast<label_t>(cycle.size());
    if (l % eta.order != 0) continue;
    basis.vectors.push_back(cycle_eigenvector(cycle, (l / eta.order) * eta.exponent % l, cd.size()));
  }
  return basis;
}

inline EigenspaceBasis eigenspace(const Dims& d, const SubsystemPerm& sigma,
                                  const RootOfUnity& eta) {
  return eigenspace(cycle_decomposition(d, sigma), eta);
}

/// k! * S and k! * A accumulated exactly: entry (r,c) counts the signed number
/// of sigma with step(c) = r. Division by k! happens only on the way out.
struct ProjectorCounts {
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> counts;
  long long factorial = 1;

  Eigen::MatrixXd value() const {
    return counts.cast<double>() / static_cast<double>(factorial);
  }

  bool is_zero() const { return counts.isZero(); }

  /// rank of an exact projector equals its trace
  long long trace_over_factorial() const {
    const long long tr = counts.trace();
    require(tr % factorial == 0, "trace is not an integer multiple of k!");
    return tr / factorial;
  }

  /// exact idempotence check: (k! P)^2 == k! * (k! P)
  bool idempotent() const {
    return (counts * counts - factorial * counts).isZero();
  }
};

namespace detail {
inline ProjectorCounts projector_counts(const Dims& d, bool antisymmetric) {
  const int k = d.size();
  require(k <= limits::max_factorial_slots, "projector summation budget exceeded");
  const label_t n = d.product();
  require(n <= limits::default_dense_limit,
          "dense projector exceeds the configured size limit");
  ProjectorCounts pc;
  pc.counts.setZero(n, n);
  pc.factorial = 1;
  for (int i = 2; i <= k; ++i) pc.factorial *= i;
  for (const SubsystemPerm& sigma : all_permutations(k)) {
    const long long s = antisymmetric ? sigma.sign() : 1;
    for (label_t c = 0; c < n; ++c) pc.counts(step(c, d, sigma), c) += s;
  }
  return pc;
}
}  // namespace detail

/// S_d = (1/k!) sum_sigma T_{d,sigma}.
inline ProjectorCounts symmetric_projector_counts(const Dims& d) {
  return detail::projector_counts(d, false);
}

/// A_d = (1/k!) sum_sigma sgn(sigma) T_{d,sigma}.
inline ProjectorCounts antisymmetric_projector_counts(const Dims& d) {
  return detail::projector_counts(d, true);
}

inline Eigen::MatrixXd symmetric_projector(const Dims& d) {
  return symmetric_projector_counts(d).value();
}

inline Eigen::MatrixXd antisymmetric_projector(const Dims& d) {
  return antisymmetric_projector_counts(d).value();
}

inline label_t binomial(label_t n, label_t k) {
  if (k < 0 || k > n) return 0;
  label_t r = 1;
  for (label_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// rho(p) = p * S/C(d+k-1,k) + (1-p) * A/C(d,k) for a homogeneous shape.
inline Eigen::MatrixXd rho_family(const Dims& d, double p) {
  require(d.is_homogeneous(), "the mixed family needs a homogeneous shape");
  require(p >= 0.0 && p <= 1.0, "mixing weight must lie in [0,1]");
  const label_t dim = d[0];
  const label_t k = d.size();
  const label_t rank_s = binomial(dim + k - 1, k);
  const label_t rank_a = binomial(dim, k);
  if (p < 1.0) require(rank_a > 0, "no antisymmetric state exists when k > d");
  Eigen::MatrixXd rho =
      (p / static_cast<double>(rank_s)) * symmetric_projector(d);
  if (p < 1.0)
    rho += ((1.0 - p) / static_cast<double>(rank_a)) * antisymmetric_projector(d);
  return rho;
}

/// Dimension of the symmetric subspace of the cyclic shift on k equal slots of
/// dimension d, for prime k: d fixed strings plus (d^k - d)/k full cycles.
inline label_t cyclic_sym_dim(label_t d, label_t k) {
  require(d >= 2, "subsystem dimension must be greater than 1");
  require(k >= 2 && omega(k) == 1 && prime_factor_multiset(k).front() == k, "k must be prime");
  label_t n = 1;
  for (label_t i = 0; i < k; ++i) {
    require(n <= limits::max_dimension / d, "shape product exceeds the dimension limit");
    n *= d;
  }
  return d + (n - d) / k;
}

}  // namespace tpsym
