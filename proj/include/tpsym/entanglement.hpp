#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "tpsym/common.hpp"
#include "tpsym/index_map.hpp"
#include "tpsym/spectral.hpp"

namespace tpsym {

using StateVector = Eigen::VectorXcd;
using DensityMatrix = Eigen::MatrixXcd;

// ---------------------------------------------------------------------------
// Seeded sampling

namespace detail {
/// One standard normal from a 64-bit engine via Box-Muller; the engine is the
/// only source of randomness, so draws are reproducible bit for bit.
inline double standard_normal(std::mt19937_64& rng) {
  const double u1 = (static_cast<double>(rng()) + 1.0) /
                    (static_cast<double>(std::mt19937_64::max()) + 2.0);
  const double u2 = static_cast<double>(rng()) /
                    (static_cast<double>(std::mt19937_64::max()) + 1.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline StateVector haar_state(label_t dim, std::mt19937_64& rng) {
  StateVector v(dim);
  for (label_t i = 0; i < dim; ++i) v(i) = complex_t{standard_normal(rng), standard_normal(rng)};
  return v / v.norm();
}
}  // namespace detail

/// Haar-random unit vector in C^dim, deterministic per seed.
inline StateVector haar_random_state(label_t dim, std::uint64_t seed) {
  require(dim >= 1, "state dimension must be positive");
  std::mt19937_64 rng(seed);
  return detail::haar_state(dim, rng);
}

// ---------------------------------------------------------------------------
// Cuts and reduced states

/// Precomputed index split for one bipartite cut A | complement of a shape:
/// label L lands at (row_of[L], col_of[L]) of the cut matrix.
struct CutPlan {
  label_t row_dim = 1;
  label_t col_dim = 1;
  std::vector<label_t> row_of;
  std::vector<label_t> col_of;
  double normalizer = 1.0;  // d_A / (d_A - 1)
};

inline CutPlan make_cut_plan(const Dims& d, const std::vector<int>& keep) {
  const int k = d.size();
  require(!keep.empty() && static_cast<int>(keep.size()) < k,
          "cut must keep a nonempty proper subset of slots");
  std::vector<char> kept(static_cast<std::size_t>(k), 0);
  for (int slot : keep) {
    require(slot >= 0 && slot < k, "cut slot out of range");
    require(!kept[static_cast<std::size_t>(slot)], "cut slot repeated");
    kept[static_cast<std::size_t>(slot)] = 1;
  }
  CutPlan plan;
  for (int r = 0; r < k; ++r) (kept[static_cast<std::size_t>(r)] ? plan.row_dim : plan.col_dim) *= d[r];
  const label_t n = d.product();
  plan.row_of.resize(static_cast<std::size_t>(n));
  plan.col_of.resize(static_cast<std::size_t>(n));
  for (label_t l = 0; l < n; ++l) {
    label_t row = 0, col = 0;
    const MultiIndex m = flat_to_multi(l, d);
    for (int r = 0; r < k; ++r) {
      if (kept[static_cast<std::size_t>(r)])
        row = row * d[r] + m.digits[static_cast<std::size_t>(r)];
      else
        col = col * d[r] + m.digits[static_cast<std::size_t>(r)];
    }
    plan.row_of[static_cast<std::size_t>(l)] = row;
    plan.col_of[static_cast<std::size_t>(l)] = col;
  }
  plan.normalizer = static_cast<double>(plan.row_dim) / static_cast<double>(plan.row_dim - 1);
  return plan;
}

inline Eigen::MatrixXcd cut_matrix(const CutPlan& plan, const StateVector& psi) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(plan.row_dim, plan.col_dim);
  for (label_t l = 0; l < static_cast<label_t>(psi.size()); ++l)
    m(plan.row_of[static_cast<std::size_t>(l)], plan.col_of[static_cast<std::size_t>(l)]) = psi(l);
  return m;
}

/// tr(rho_A^2) for the cut, via the Gram matrix on the smaller side. Fast but
/// loses precision near purity 1; zero-tests should use cut_schmidt_deficit.
inline double cut_purity(const CutPlan& plan, const StateVector& psi) {
  const Eigen::MatrixXcd m = cut_matrix(plan, psi);
  const Eigen::MatrixXcd gram =
      plan.row_dim <= plan.col_dim ? Eigen::MatrixXcd(m * m.adjoint()) : Eigen::MatrixXcd(m.adjoint() * m);
  return gram.squaredNorm();
}

/// 1 - tr(rho_A^2) for the normalized cut, evaluated from singular values as
/// the cancellation-free cross sum 2 sum_{i<j} s_i^2 s_j^2 / (sum_i s_i^2)^2.
/// An exactly rank-one cut matrix yields an exact (or epsilon^2) zero.
inline double cut_schmidt_deficit(const CutPlan& plan, const StateVector& psi) {
  const Eigen::MatrixXcd m = cut_matrix(plan, psi);
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
  double total = 0.0, cross = 0.0;
  for (int i = 0; i < sv.size(); ++i) {
    const double w = sv(i) * sv(i);
    cross += total * w;
    total += w;
  }
  if (total <= 0.0) return 0.0;
  return 2.0 * cross / (total * total);
}

/// rho_A = Tr_{complement} |psi><psi| for kept slots A (0-based, any order
/// given sorted ascending; the result uses the tensor order of the kept slots).
inline DensityMatrix reduced_density(const StateVector& psi, const Dims& d,
                                     const std::vector<int>& keep) {
  require(psi.size() == d.product(), "state dimension does not match the shape");
  const CutPlan plan = make_cut_plan(d, keep);
  const Eigen::MatrixXcd m = cut_matrix(plan, psi);
  return m * m.adjoint();
}

/// sqrt(d_A/(d_A - 1) * (1 - tr rho_A^2)) for one cut; the quantity the
/// entanglement measure minimizes.
inline double cut_mixedness(const StateVector& psi, const Dims& d, const std::vector<int>& keep) {
  const CutPlan plan = make_cut_plan(d, keep);
  return std::sqrt(plan.normalizer * cut_schmidt_deficit(plan, psi));
}

namespace detail {
inline void subsets_of_size(int k, int t, std::vector<std::vector<int>>& out) {
  std::vector<int> current;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == t) {
      out.push_back(current);
      return;
    }
    for (int i = start; i < k; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}
}  // namespace detail

/// All cuts of size t, precomputed once; value() is the measure E_t.
struct EntanglementEvaluator {
  std::vector<CutPlan> plans;

  EntanglementEvaluator(const Dims& d, int t) {
    require(t >= 1 && t <= d.size() / 2, "cut size must satisfy 1 <= t <= k/2");
    std::vector<std::vector<int>> subsets;
    detail::subsets_of_size(d.size(), t, subsets);
    for (const auto& a : subsets) plans.push_back(make_cut_plan(d, a));
  }

  double value(const StateVector& psi) const {
    double best = std::numeric_limits<double>::infinity();
    for (const CutPlan& plan : plans)
      best = std::min(best, std::sqrt(plan.normalizer * cut_schmidt_deficit(plan, psi)));
    return best;
  }

  /// Gram-based variant for sampling loops where values stay away from zero.
  double value_fast(const StateVector& psi) const {
    double best = std::numeric_limits<double>::infinity();
    for (const CutPlan& plan : plans) {
      const double deficit = std::max(0.0, 1.0 - cut_purity(plan, psi));
      best = std::min(best, std::sqrt(plan.normalizer * deficit));
    }
    return best;
  }
};

/// E_t(psi) = min over |A| = t of sqrt(d_A/(d_A-1) (1 - tr rho_A^2)).
inline double entanglement_Et(const StateVector& psi, const Dims& d, int t = 1) {
  require(psi.size() == d.product(), "state dimension does not match the shape");
  return EntanglementEvaluator(d, t).value(psi);
}

/// Largest Schmidt coefficient over all size-t cuts; >= 1 - tol on every cut
/// means product across each of them.
inline double min_cut_largest_schmidt(const StateVector& psi, const Dims& d, int t = 1) {
  std::vector<std::vector<int>> subsets;
  detail::subsets_of_size(d.size(), t, subsets);
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& a : subsets) {
    const Eigen::MatrixXcd m = cut_matrix(make_cut_plan(d, a), psi);
    const double s1 = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
    worst = std::min(worst, s1);
  }
  return worst;
}

inline bool is_product_state(const StateVector& psi, const Dims& d, double tol = 1e-9) {
  // product across every single-slot cut
  return min_cut_largest_schmidt(psi, d, 1) >= 1.0 - tol;
}

/// (1/2) sum |eigenvalues| of rho - rho'.
inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "density matrix dimensions differ");
  const Eigen::MatrixXcd diff = a - b;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

// ---------------------------------------------------------------------------
// Named states

/// Uniform state over the interior labels 1..N-2.
inline StateVector gamma_state(label_t n) {
  require(n >= 3, "the interior-uniform state needs N >= 3");
  StateVector v = StateVector::Zero(n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n - 2));
  for (label_t l = 1; l <= n - 2; ++l) v(l) = amp;
  return v;
}

/// Uniform state over all N labels; a product state in every shape.
inline StateVector sigma_state(label_t n) {
  require(n >= 2, "the uniform state needs N >= 2");
  return StateVector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
}

/// (1/sqrt(d_min)) sum_i |i i ... i> in the given shape.
inline StateVector ghz_state(const Dims& d) {
  const label_t dmin = d.min_entry();
  label_t stride_sum = 0, stride = 1;
  for (int r = d.size() - 1; r >= 0; --r) {
    stride_sum += stride;
    stride *= d[r];
  }
  StateVector v = StateVector::Zero(d.product());
  for (label_t i = 0; i < dmin; ++i) v(i * stride_sum) = 1.0 / std::sqrt(static_cast<double>(dmin));
  return v;
}

/// One-parameter N = 6 family interpolating between the symmetric and
/// antisymmetric vectors of the 4-cycle of pi(2,3); at p = 1/2 it is
/// (|2> + |3>)/sqrt(2), separable in [3,2] but entangled in [2,3].
inline StateVector psi_p(double p) {
  require(p >= 0.0 && p <= 1.0, "mixing weight must lie in [0,1]");
  const double cs = std::sqrt(p), ca = std::sqrt(1.0 - p);
  StateVector v = StateVector::Zero(6);
  v(1) = 0.5 * (cs - ca);
  v(2) = 0.5 * (cs + ca);
  v(3) = 0.5 * (cs + ca);
  v(4) = 0.5 * (cs - ca);
  return v;
}

/// sqrt(p) (|0> + |N-1>)/sqrt(2) + sqrt(1-p) |Gamma_N>; equals the uniform
/// state at p = 2/N.
inline StateVector chi1(label_t n, double p) {
  require(p >= 0.0 && p <= 1.0, "mixing weight must lie in [0,1]");
  StateVector v = std::sqrt(1.0 - p) * gamma_state(n);
  const double edge = std::sqrt(p / 2.0);
  v(0) += edge;
  v(n - 1) += edge;
  return v;
}

/// sqrt(p) |0> + e^{i phi} sqrt(1-p) |Gamma_N>.
inline StateVector chi2(label_t n, double p, double phi) {
  require(p >= 0.0 && p <= 1.0, "mixing weight must lie in [0,1]");
  StateVector v = complex_t{std::cos(phi), std::sin(phi)} * std::sqrt(1.0 - p) * gamma_state(n);
  v(0) += std::sqrt(p);
  return v;
}

// ---------------------------------------------------------------------------
// Closed forms

/// E_1 of |Gamma_N| in shape d: with d_max = max(d) and d' = N/d_max,
/// sqrt(d_max/(d_max-1) * (4 (d_max-1)(d'-1) - 2) / (N-2)^2).
inline double gamma_entanglement_closed_form(const Dims& d) {
  const label_t n = d.product();
  require(n >= 4, "the interior-uniform state needs N >= 4 here");
  const double dmax = static_cast<double>(d.max_entry());
  const double dother = static_cast<double>(n) / dmax;
  const double num = 4.0 * (dmax - 1.0) * (dother - 1.0) - 2.0;
  const double den = static_cast<double>(n - 2) * static_cast<double>(n - 2);
  return std::sqrt(dmax / (dmax - 1.0) * num / den);
}

/// E_1 of the generalized GHZ state: sqrt(d_max (d_min - 1) / (d_min (d_max - 1))).
inline double ghz_entanglement_closed_form(const Dims& d) {
  const double dmin = static_cast<double>(d.min_entry());
  const double dmax = static_cast<double>(d.max_entry());
  return std::sqrt(dmax * (dmin - 1.0) / (dmin * (dmax - 1.0)));
}

/// ( E_t of psi in d, E_t of T_{d,sigma} psi in sigma(d) ); the two are equal
/// for every state.
inline std::pair<double, double> exchange_entanglement_check(const StateVector& psi, const Dims& d,
                                                             const SubsystemPerm& sigma, int t = 1) {
  const PermOperator op = build_operator(d, sigma);
  return {entanglement_Et(psi, d, t), entanglement_Et(op.apply(psi), apply_perm(sigma, d), t)};
}

// ---------------------------------------------------------------------------
// Symmetric product states

/// Per-cycle chains alpha_{Lhat} beta_{Lbar} = ... over pi(d1,d2); a cycle of
/// length l contributes l-1 chained equalities, 1-cycles contribute none.
struct ConstraintSystem {
  struct Term {
    label_t a;  // index into alpha
    label_t b;  // index into beta
    friend bool operator==(const Term&, const Term&) = default;
  };
  label_t d1 = 0, d2 = 0;
  std::vector<std::vector<Term>> chains;

  label_t equality_count() const {
    label_t total = 0;
    for (const auto& chain : chains) total += static_cast<label_t>(chain.size()) - 1;
    return total;
  }
};

inline ConstraintSystem symmetric_product_constraints(label_t d1, label_t d2) {
  ConstraintSystem sys;
  sys.d1 = d1;
  sys.d2 = d2;
  for (const auto& cycle : cycle_decomposition(d1, d2).cycles) {
    if (cycle.size() < 2) continue;
    std::vector<ConstraintSystem::Term> chain;
    chain.reserve(cycle.size());
    for (label_t l : cycle) chain.push_back({l / d2, l % d2});
    sys.chains.push_back(std::move(chain));
  }
  return sys;
}

/// True when the product state built from (alpha, beta) satisfies every chain
/// within tol.
inline bool check_symmetric_product(const Eigen::VectorXcd& alpha, const Eigen::VectorXcd& beta,
                                    label_t d1, label_t d2, double tol = 1e-10) {
  require(alpha.size() == d1 && beta.size() == d2, "coefficient lengths must match the shape");
  for (const auto& chain : symmetric_product_constraints(d1, d2).chains)
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const complex_t lhs = alpha(chain[i].a) * beta(chain[i].b);
      const complex_t rhs = alpha(chain[i + 1].a) * beta(chain[i + 1].b);
      if (std::abs(lhs - rhs) > tol) return false;
    }
  return true;
}

/// Exhaustive census of symmetric product states for a bipartite shape.
///
/// A product state alpha x beta is symmetric iff the rank-one matrix
/// X_{ij} = alpha_i beta_j is constant on every cycle class of pi(d1,d2).
/// The census walks every zero/nonzero pattern over the cycle classes; a
/// pattern is feasible only if its support is a combinatorial rectangle R x C,
/// and on the rectangle the vanishing 2 x 2 minors force equalities among the
/// class constants. When every feasible pattern collapses to a single class
/// constant the census is certified complete; otherwise `certified` is false
/// (a continuum or an unresolved variety exists).
struct ProductCensus {
  bool certified = false;
  std::vector<std::pair<Eigen::VectorXcd, Eigen::VectorXcd>> states;
};

inline ProductCensus symmetric_product_census(label_t d1, label_t d2) {
  require(d1 >= 2 && d2 >= 2, "subsystem dimensions must be greater than 1");
  const auto cycles = cycle_decomposition(d1, d2).cycles;
  const int p = static_cast<int>(cycles.size());
  require(p <= 20, "class pattern enumeration budget exceeded");
  std::vector<std::vector<int>> class_of(static_cast<std::size_t>(d1),
                                         std::vector<int>(static_cast<std::size_t>(d2), -1));
  for (int c = 0; c < p; ++c)
    for (label_t l : cycles[static_cast<std::size_t>(c)])
      class_of[static_cast<std::size_t>(l / d2)][static_cast<std::size_t>(l % d2)] = c;

  ProductCensus census;
  census.certified = true;
  for (unsigned pattern = 1; pattern < (1u << p); ++pattern) {
    // support rows and columns
    std::vector<char> row_in(static_cast<std::size_t>(d1), 0), col_in(static_cast<std::size_t>(d2), 0);
    for (label_t i = 0; i < d1; ++i)
      for (label_t j = 0; j < d2; ++j)
        if (pattern >> class_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & 1u)
          row_in[static_cast<std::size_t>(i)] = col_in[static_cast<std::size_t>(j)] = 1;
    // rectangle test: every cell of R x C must belong to a pattern class
    bool rectangle = true;
    for (label_t i = 0; i < d1 && rectangle; ++i)
      for (label_t j = 0; j < d2 && rectangle; ++j) {
        const bool inside = row_in[static_cast<std::size_t>(i)] && col_in[static_cast<std::size_t>(j)];
        const bool live = pattern >> class_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & 1u;
        if (inside != live) rectangle = false;
      }
    if (!rectangle) continue;

    // union-find over pattern classes driven by shared-factor minors
    std::vector<int> parent(static_cast<std::size_t>(p));
    for (int c = 0; c < p; ++c) parent[static_cast<std::size_t>(c)] = c;
    auto find = [&](int c) {
      while (parent[static_cast<std::size_t>(c)] != c) c = parent[static_cast<std::size_t>(c)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(c)])];
      return c;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[static_cast<std::size_t>(a)] = b;
    };
    std::vector<label_t> rows, cols;
    for (label_t i = 0; i < d1; ++i)
      if (row_in[static_cast<std::size_t>(i)]) rows.push_back(i);
    for (label_t j = 0; j < d2; ++j)
      if (col_in[static_cast<std::size_t>(j)]) cols.push_back(j);
    auto cls = [&](label_t i, label_t j) {
      return find(class_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t ri = 0; ri < rows.size(); ++ri)
        for (std::size_t rj = ri + 1; rj < rows.size(); ++rj)
          for (std::size_t ci = 0; ci < cols.size(); ++ci)
            for (std::size_t cj = ci + 1; cj < cols.size(); ++cj) {
              // t_a t_d = t_b t_c for the minor on rows (ri,rj), cols (ci,cj)
              const int a = cls(rows[ri], cols[ci]), d = cls(rows[rj], cols[cj]);
              const int b = cls(rows[ri], cols[cj]), c = cls(rows[rj], cols[ci]);
              if ((a == b && d != c) || (a == c && d != b)) {
                unite(d, a == b ? c : b);
                changed = true;
              } else if ((d == b && a != c) || (d == c && a != b)) {
                unite(a, d == b ? c : b);
                changed = true;
              }
            }
    }
    // with shared factors exhausted, every minor must now hold symbolically
    bool satisfied = true;
    int group = -1;
    bool single_group = true;
    for (std::size_t ri = 0; ri < rows.size() && satisfied; ++ri)
      for (std::size_t rj = ri + 1; rj < rows.size() && satisfied; ++rj)
        for (std::size_t ci = 0; ci < cols.size() && satisfied; ++ci)
          for (std::size_t cj = ci + 1; cj < cols.size() && satisfied; ++cj) {
            const int a = cls(rows[ri], cols[ci]), d = cls(rows[rj], cols[cj]);
            const int b = cls(rows[ri], cols[cj]), c = cls(rows[rj], cols[ci]);
            if (!((a == b && d == c) || (a == c && d == b))) satisfied = false;
          }
    if (!satisfied) {
      census.certified = false;  // unresolved variety; cannot enumerate
      continue;
    }
    for (label_t i : rows)
      for (label_t j : cols) {
        if (group == -1) group = cls(i, j);
        if (cls(i, j) != group) single_group = false;
      }
    if (!single_group) {
      census.certified = false;  // multi-parameter family; not a finite list
      continue;
    }
    // one class constant: the state is uniform over R x C
    Eigen::VectorXcd alpha = Eigen::VectorXcd::Zero(d1), beta = Eigen::VectorXcd::Zero(d2);
    for (label_t i : rows) alpha(i) = 1.0 / std::sqrt(static_cast<double>(rows.size()));
    for (label_t j : cols) beta(j) = 1.0 / std::sqrt(static_cast<double>(cols.size()));
    census.states.emplace_back(std::move(alpha), std::move(beta));
  }
  return census;
}

// ---------------------------------------------------------------------------
// Completely entangled subspaces

/// Orthonormal basis (columns) of the orthogonal complement of the
/// anti-diagonal sums span{ sum_{i+j=n} |i,j> : n = 0..d1+d2-2 }; its
/// dimension is (d1-1)(d2-1).
inline Eigen::MatrixXcd ces_orthocomplement_basis(label_t d1, label_t d2) {
  require(d1 >= 2 && d2 >= 2, "subsystem dimensions must be greater than 1");
  const label_t n = d1 * d2;
  const label_t m = d1 + d2 - 1;
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n, m);
  for (label_t s = 0; s < m; ++s) {
    label_t count = 0;
    for (label_t i = 0; i < d1; ++i) {
      const label_t j = s - i;
      if (j < 0 || j >= d2) continue;
      b(i * d2 + j, s) = 1.0;
      ++count;
    }
    b.col(s) /= std::sqrt(static_cast<double>(count));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(b);
  const Eigen::MatrixXcd q = qr.householderQ();
  return q.rightCols(n - m);
}

/// The d-1 vectors (|0,i> - |1,i-1>)/sqrt(2) of the qubit-qudit CES in [2,d].
inline Eigen::MatrixXcd ces_2d_basis(label_t d) {
  require(d >= 2, "qudit dimension must be greater than 1");
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(2 * d, d - 1);
  for (label_t i = 1; i <= d - 1; ++i) {
    b(i, i - 1) = 1.0 / std::sqrt(2.0);
    b(d + i - 1, i - 1) = -1.0 / std::sqrt(2.0);
  }
  return b;
}

/// The d-1 vectors (|i-1,1> - |i,0>)/sqrt(2) of the CES in [d,2].
inline Eigen::MatrixXcd ces_d2_basis(label_t d) {
  require(d >= 2, "qudit dimension must be greater than 1");
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(2 * d, d - 1);
  for (label_t i = 1; i <= d - 1; ++i) {
    b(2 * i - 1, i - 1) = 1.0 / std::sqrt(2.0);
    b(2 * i, i - 1) = -1.0 / std::sqrt(2.0);
  }
  return b;
}

/// Intersection of two subspaces given by orthonormal column bases, via the
/// null space of the stacked matrix [A, -B] with singular-value threshold.
inline Eigen::MatrixXcd subspace_intersection(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                              double threshold = 1e-9) {
  require(a.rows() == b.rows(), "ambient dimensions differ");
  Eigen::MatrixXcd stacked(a.rows(), a.cols() + b.cols());
  stacked << a, -b;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeFullV);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > threshold) ++rank;
  const int null_dim = static_cast<int>(stacked.cols()) - rank;
  Eigen::MatrixXcd out(a.rows(), null_dim);
  for (int i = 0; i < null_dim; ++i) {
    const Eigen::VectorXcd x = svd.matrixV().col(svd.matrixV().cols() - 1 - i).head(a.cols());
    out.col(i) = a * x;
  }
  if (null_dim == 0) return out;
  // orthonormalize the produced directions
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(out);
  Eigen::MatrixXcd q = qr.householderQ();
  return q.leftCols(null_dim);
}

/// R_[2,d] ∩ R_[d,2]: (d-1)/2 dimensional for odd d, one-dimensional for even.
inline Eigen::MatrixXcd ces_intersection_qubit_qudit(label_t d) {
  return subspace_intersection(ces_2d_basis(d), ces_d2_basis(d));
}

// ---------------------------------------------------------------------------
// Sampling over subspaces

/// Minimum E_1 over seeded Haar samples drawn from the span of the given
/// orthonormal columns.
inline double min_entanglement_estimate(const Eigen::MatrixXcd& basis, const Dims& d,
                                        label_t samples, std::uint64_t seed) {
  require(basis.cols() > 0, "cannot sample from an empty basis");
  require(basis.rows() == d.product(), "basis ambient dimension does not match the shape");
  EntanglementEvaluator eval(d, 1);
  std::mt19937_64 rng(seed);
  double best = std::numeric_limits<double>::infinity();
  for (label_t s = 0; s < samples; ++s) {
    const StateVector coeff = detail::haar_state(basis.cols(), rng);
    StateVector psi = basis * coeff;
    psi /= psi.norm();
    best = std::min(best, eval.value_fast(psi));
  }
  return best;
}

/// (entangled count, product count) of a basis under the E_1 > tol test.
inline std::pair<label_t, label_t> basis_type(const std::vector<StateVector>& vectors,
                                              const Dims& d, double tol = 1e-9) {
  label_t entangled = 0;
  EntanglementEvaluator eval(d, 1);
  for (const StateVector& v : vectors)
    if (eval.value(v) > tol) ++entangled;
  return {entangled, static_cast<label_t>(vectors.size()) - entangled};
}

}  // namespace tpsym
