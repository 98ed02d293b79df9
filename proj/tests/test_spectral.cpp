#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "tpsym/spectral.hpp"

using namespace tpsym;

namespace {

const SubsystemPerm kSwap = SubsystemPerm::exchange();

SubsystemPerm perm1(std::vector<int> images) { return SubsystemPerm::from_images_one_based(images); }

// test-side random unitary: QR of a Gaussian matrix, mt19937_64 + Box-Muller
Eigen::MatrixXcd random_unitary(label_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto normal = [&rng]() {
    const double u1 = (static_cast<double>(rng()) + 1.0) / (static_cast<double>(rng.max()) + 2.0);
    const double u2 = static_cast<double>(rng()) / (static_cast<double>(rng.max()) + 1.0);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  };
  Eigen::MatrixXcd g(n, n);
  for (label_t i = 0; i < n; ++i)
    for (label_t j = 0; j < n; ++j) g(i, j) = complex_t{normal(), normal()};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (label_t j = 0; j < n; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

// matrix-element rule for the bipartite exchange, 1-based indices m,n:
// [T]_{m,n} = 1 iff floor((m-1)/d1) = mod(n-1,d2) and floor((n-1)/d2) = mod(m-1,d1)
bool matrix_formula_entry(label_t m, label_t n, label_t d1, label_t d2) {
  return (m - 1) / d1 == (n - 1) % d2 && (n - 1) / d2 == (m - 1) % d1;
}

// multiset match under tolerance: every analytic eigenvalue claims its nearest
// unused numeric partner
bool spectrum_matches_numerics(const Dims& d, const SubsystemPerm& sigma, double tol) {
  const PermOperator op = build_operator(d, sigma);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(op.dense_complex(), false);
  std::vector<complex_t> numeric(solver.eigenvalues().data(),
                                 solver.eigenvalues().data() + op.size());
  std::vector<char> used(numeric.size(), 0);
  for (const auto& [root, mult] : spectrum(d, sigma)) {
    for (label_t i = 0; i < mult; ++i) {
      const complex_t target = root.value();
      std::size_t best = numeric.size();
      double best_dist = tol;
      for (std::size_t j = 0; j < numeric.size(); ++j) {
        if (used[j]) continue;
        const double dist = std::abs(numeric[j] - target);
        if (dist <= best_dist) {
          best = j;
          best_dist = dist;
        }
      }
      if (best == numeric.size()) return false;
      used[best] = 1;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("exact root-of-unity labels") {
  CHECK(RootOfUnity::make(4, 2) == RootOfUnity::minus_one());
  CHECK(RootOfUnity::make(6, 4) == RootOfUnity::make(3, 2));
  CHECK(RootOfUnity::make(5, 0) == RootOfUnity::one());
  CHECK(RootOfUnity::make(4, 1).to_string() == "i");
  CHECK(RootOfUnity::make(4, 3).to_string() == "-i");
  CHECK(RootOfUnity::make(3, 1).to_string() == "exp(2i*pi*1/3)");
  CHECK(RootOfUnity::make(4, 3).conjugate() == RootOfUnity::make(4, 1));
  // angle ordering: 1 < i < -1 < -i
  std::vector<RootOfUnity> roots{RootOfUnity::make(4, 3), RootOfUnity::minus_one(),
                                 RootOfUnity::one(), RootOfUnity::make(4, 1)};
  std::sort(roots.begin(), roots.end());
  CHECK(roots[0] == RootOfUnity::one());
  CHECK(roots[1] == RootOfUnity::make(4, 1));
  CHECK(roots[2] == RootOfUnity::minus_one());
  CHECK(roots[3] == RootOfUnity::make(4, 3));
}

TEST_CASE("operator matrices") {
  const PermOperator t22 = build_operator(Dims({2, 2}), kSwap);
  Eigen::MatrixXd expected22(4, 4);
  expected22 << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
  CHECK(t22.dense() == expected22);

  const PermOperator id = build_operator(Dims({2, 3}), SubsystemPerm::identity(2));
  CHECK(id.dense() == Eigen::MatrixXd::Identity(6, 6));

  // doubly stochastic 0/1 structure and unitarity, plus the elementwise rule
  for (label_t d1 = 2; d1 <= 5; ++d1)
    for (label_t d2 = 2; d2 <= 5; ++d2) {
      const Eigen::MatrixXd t = build_operator(Dims({d1, d2}), kSwap).dense();
      CHECK((t * t.transpose() - Eigen::MatrixXd::Identity(d1 * d2, d1 * d2)).norm() == 0.0);
      for (label_t m = 1; m <= d1 * d2; ++m)
        for (label_t n = 1; n <= d1 * d2; ++n)
          CHECK(t(m - 1, n - 1) == (matrix_formula_entry(m, n, d1, d2) ? 1.0 : 0.0));
    }

  // exchanging the factors inverts (and transposes) the operator
  const Eigen::MatrixXd t23 = build_operator(Dims({2, 3}), kSwap).dense();
  const Eigen::MatrixXd t32 = build_operator(Dims({3, 2}), kSwap).dense();
  CHECK(t23.transpose() == t32);
  CHECK((t23 * t32 - Eigen::MatrixXd::Identity(6, 6)).norm() == 0.0);

  CHECK_THROWS_AS(build_operator(Dims({2, 128}), kSwap).dense(), domain_error);
}

TEST_CASE("analytic spectra") {
  const auto s23 = spectrum(Dims({2, 3}), kSwap);
  REQUIRE(s23.size() == 4);
  CHECK(s23[0] == std::pair{RootOfUnity::one(), label_t{3}});
  CHECK(s23[1] == std::pair{RootOfUnity::make(4, 1), label_t{1}});
  CHECK(s23[2] == std::pair{RootOfUnity::minus_one(), label_t{1}});
  CHECK(s23[3] == std::pair{RootOfUnity::make(4, 3), label_t{1}});

  const auto s24 = spectrum(Dims({2, 4}), kSwap);
  REQUIRE(s24.size() == 3);
  CHECK(s24[0] == std::pair{RootOfUnity::one(), label_t{4}});
  CHECK(s24[1] == std::pair{RootOfUnity::make(3, 1), label_t{2}});
  CHECK(s24[2] == std::pair{RootOfUnity::make(3, 2), label_t{2}});

  const auto sid = spectrum(Dims({3, 4}), SubsystemPerm::identity(2));
  REQUIRE(sid.size() == 1);
  CHECK(sid[0] == std::pair{RootOfUnity::one(), label_t{12}});

  // multiplicities always sum to N
  for (const Dims& d : all_partitions(24)) {
    if (d.size() > 4) continue;
    for (const SubsystemPerm& sigma : all_permutations(d.size())) {
      label_t total = 0;
      for (const auto& [root, mult] : spectrum(d, sigma)) total += mult;
      CHECK(total == 24);
    }
  }
}

TEST_CASE("cycle eigenvectors") {
  // the antisymmetric vector of the 4-cycle of pi(2,3)
  const Eigen::VectorXcd v = cycle_eigenvector({1, 2, 4, 3}, 2, 6);
  Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(6);
  expected(1) = 0.5;
  expected(2) = -0.5;
  expected(3) = -0.5;
  expected(4) = 0.5;
  CHECK((v - expected).norm() < 1e-15);

  const Eigen::VectorXcd fixed = cycle_eigenvector({7}, 0, 15);
  CHECK(std::abs(fixed(7) - 1.0) < 1e-15);
  CHECK(fixed.norm() == doctest::Approx(1.0).epsilon(1e-14));

  // the 4-cycle of the cyclic shift on four qubits, eigenvalue -1
  const Eigen::VectorXcd w = cycle_eigenvector({1, 8, 4, 2}, 2, 16);
  CHECK(std::abs(w(1) - 0.5) < 1e-15);
  CHECK(std::abs(w(8) + 0.5) < 1e-15);
  CHECK(std::abs(w(4) - 0.5) < 1e-15);
  CHECK(std::abs(w(2) + 0.5) < 1e-15);
}

TEST_CASE("eigen-residuals and spectral oracle on small shapes") {
  for (label_t n = 4; n <= 16; ++n) {
    if (omega(n) < 2) continue;
    for (const Dims& d : all_partitions(n)) {
      if (d.size() > 3) continue;
      for (const SubsystemPerm& sigma : all_permutations(d.size())) {
        const PermOperator op = build_operator(d, sigma);
        const CycleDecomp cd = cycle_decomposition(d, sigma);
        label_t dim_total = 0;
        for (const auto& [root, mult] : spectrum(cd)) {
          const EigenspaceBasis basis = eigenspace(cd, root);
          REQUIRE(basis.dimension() == mult);
          dim_total += basis.dimension();
          for (const auto& v : basis.vectors)
            REQUIRE((op.apply(v) - root.value() * v).norm() <= 1e-12);
          // orthonormal within the eigenspace
          const Eigen::MatrixXcd b = basis.matrix();
          REQUIRE((b.adjoint() * b - Eigen::MatrixXcd::Identity(mult, mult)).norm() <= 1e-12);
        }
        REQUIRE(dim_total == n);
        REQUIRE(spectrum_matches_numerics(d, sigma, 1e-9));
      }
    }
  }
}

TEST_CASE("residuals, completeness and cross-eigenspace orthogonality up to N = 24") {
  for (label_t n : {16, 24}) {
    for (const Dims& d : partitions_with_k(n, 4)) {
      for (const SubsystemPerm& sigma : all_permutations(4)) {
        const PermOperator op = build_operator(d, sigma);
        const CycleDecomp cd = cycle_decomposition(d, sigma);
        label_t total = 0;
        std::vector<Eigen::MatrixXcd> bases;
        for (const auto& [root, mult] : spectrum(cd)) {
          const EigenspaceBasis basis = eigenspace(cd, root);
          total += basis.dimension();
          for (const auto& v : basis.vectors)
            REQUIRE((op.apply(v) - root.value() * v).norm() <= 1e-12);
          bases.push_back(basis.matrix());
        }
        REQUIRE(total == n);
        for (std::size_t i = 0; i < bases.size(); ++i)
          for (std::size_t j = i + 1; j < bases.size(); ++j)
            REQUIRE((bases[i].adjoint() * bases[j]).norm() <= 1e-12);
      }
    }
  }
}

TEST_CASE("eigenspace dimension facts") {
  const EigenspaceBasis s1_24 = eigenspace(Dims({2, 4}), kSwap, RootOfUnity::one());
  REQUIRE(s1_24.dimension() == 4);
  // span contains |0>, |7>, and the two uniform cycle vectors
  CHECK(std::abs(s1_24.vectors[0](0) - 1.0) < 1e-15);
  CHECK((s1_24.vectors[1] - cycle_eigenvector({1, 2, 4}, 0, 8)).norm() < 1e-15);
  CHECK((s1_24.vectors[2] - cycle_eigenvector({3, 6, 5}, 0, 8)).norm() < 1e-15);
  CHECK(std::abs(s1_24.vectors[3](7) - 1.0) < 1e-15);

  CHECK(eigenspace(Dims({2, 12}), kSwap, RootOfUnity::minus_one()).dimension() == 0);

  const EigenspaceBasis s1_23 = eigenspace(Dims({2, 3}), kSwap, RootOfUnity::one());
  REQUIRE(s1_23.dimension() == 3);
  CHECK((s1_23.vectors[1] - cycle_eigenvector({1, 2, 4, 3}, 0, 6)).norm() < 1e-15);

  // symmetric dimension at least three for every bipartition up to N = 60
  for (label_t d1 = 2; d1 <= 30; ++d1)
    for (label_t d2 = 2; d2 <= 30; ++d2) {
      if (d1 * d2 > 60) continue;
      CHECK(eigenspace(Dims({d1, d2}), kSwap, RootOfUnity::one()).dimension() >= 3);
    }

  // homogeneous dimensions d(d+1)/2 and d(d-1)/2
  for (label_t d = 2; d <= 8; ++d) {
    CHECK(eigenspace(Dims({d, d}), kSwap, RootOfUnity::one()).dimension() == d * (d + 1) / 2);
    CHECK(eigenspace(Dims({d, d}), kSwap, RootOfUnity::minus_one()).dimension() ==
          d * (d - 1) / 2);
  }

  // odd l* leaves no antisymmetric subspace
  for (label_t d1 = 2; d1 <= 12; ++d1)
    for (label_t d2 = 2; d2 <= 12; ++d2) {
      if (l_star(d1, d2) % 2 == 0) continue;
      CHECK(eigenspace(Dims({d1, d2}), kSwap, RootOfUnity::minus_one()).dimension() == 0);
    }
}

TEST_CASE("conjugate pairing across exchanged factors") {
  for (label_t d1 = 2; d1 <= 6; ++d1)
    for (label_t d2 = 2; d2 <= 6; ++d2) {
      if (d1 * d2 > 24) continue;
      for (const auto& [root, mult] : spectrum(Dims({d1, d2}), kSwap)) {
        const Eigen::MatrixXcd a = eigenspace(Dims({d1, d2}), kSwap, root).matrix();
        const Eigen::MatrixXcd b =
            eigenspace(Dims({d2, d1}), kSwap, root.conjugate()).matrix();
        REQUIRE(a.cols() == b.cols());
        CHECK((a * a.adjoint() - b * b.adjoint()).norm() <= 1e-10);
      }
    }
}

TEST_CASE("projectors on homogeneous shapes") {
  const auto s22 = symmetric_projector_counts(Dims({2, 2}));
  const auto a22 = antisymmetric_projector_counts(Dims({2, 2}));
  CHECK(s22.idempotent());
  CHECK(a22.idempotent());
  CHECK(s22.trace_over_factorial() == 3);
  CHECK(a22.trace_over_factorial() == 1);

  // the p = 0 member of the mixed family is the singlet projector
  const Eigen::MatrixXd singlet = rho_family(Dims({2, 2}), 0.0);
  Eigen::VectorXd s(4);
  s << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
  CHECK((singlet - s * s.transpose()).norm() < 1e-14);

  for (label_t d = 2; d <= 4; ++d)
    for (int k = 2; k <= 4; ++k) {
      label_t n = 1;
      for (int i = 0; i < k; ++i) n *= d;
      if (n > 100) continue;
      const Dims shape(std::vector<label_t>(static_cast<std::size_t>(k), d));
      const auto sp = symmetric_projector_counts(shape);
      const auto ap = antisymmetric_projector_counts(shape);
      CHECK(sp.idempotent());
      CHECK(ap.idempotent());
      CHECK(sp.trace_over_factorial() == binomial(d + k - 1, k));
      CHECK(ap.trace_over_factorial() == binomial(d, k));
    }

  CHECK(antisymmetric_projector_counts(Dims({2, 2, 2})).is_zero());
}

TEST_CASE("heterogeneous projector structure") {
  for (const Dims& d : {Dims({2, 3}), Dims({2, 2, 3}), Dims({3, 4})}) {
    const label_t n = d.product();
    const Eigen::MatrixXd s = symmetric_projector(d);
    Eigen::VectorXd gamma = Eigen::VectorXd::Zero(n);
    for (label_t l = 1; l <= n - 2; ++l) gamma(l) = 1.0 / std::sqrt(static_cast<double>(n - 2));
    Eigen::VectorXd e0 = Eigen::VectorXd::Zero(n), eN = Eigen::VectorXd::Zero(n);
    e0(0) = 1.0;
    eN(n - 1) = 1.0;
    CHECK((s * e0 - e0).norm() < 1e-14);
    CHECK((s * eN - eN).norm() < 1e-14);
    CHECK((s * gamma - gamma).norm() < 1e-14);
    // not idempotent in the heterogeneous case
    CHECK(!symmetric_projector_counts(d).idempotent());
  }
}

TEST_CASE("mixed family is invariant under identical local unitaries") {
  for (double p : {0.0, 0.3, 1.0}) {
    for (const Dims& d : {Dims({2, 2}), Dims({3, 3}), Dims({2, 2, 2})}) {
      if (d.size() > d[0] && p < 1.0) continue;
      const Eigen::MatrixXcd rho = rho_family(d, p).cast<complex_t>();
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        const Eigen::MatrixXcd u = random_unitary(d[0], seed);
        Eigen::MatrixXcd big = u;
        for (int i = 1; i < d.size(); ++i) {
          Eigen::MatrixXcd next(big.rows() * u.rows(), big.cols() * u.cols());
          for (label_t r = 0; r < big.rows(); ++r)
            for (label_t c = 0; c < big.cols(); ++c)
              next.block(r * u.rows(), c * u.cols(), u.rows(), u.cols()) = big(r, c) * u;
          big = next;
        }
        CHECK((big * rho * big.adjoint() - rho).norm() <= 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(rho_family(Dims({2, 2, 2}), 0.5), domain_error);
  CHECK_THROWS_AS(rho_family(Dims({2, 3}), 0.5), domain_error);
}

TEST_CASE("cyclic-shift symmetric dimensions") {
  CHECK(cyclic_sym_dim(2, 3) == 4);
  CHECK(cyclic_sym_dim(3, 3) == 11);
  CHECK(cyclic_sym_dim(4, 3) == 24);
  CHECK_THROWS_AS(cyclic_sym_dim(3, 4), domain_error);

  for (label_t d = 2; d <= 5; ++d)
    for (label_t k : {3, 5}) {
      const Dims shape(std::vector<label_t>(static_cast<std::size_t>(k), d));
      const CycleDecomp cd = cycle_decomposition(shape, SubsystemPerm::cyclic_shift(static_cast<int>(k)));
      CHECK(cyclic_sym_dim(d, k) == static_cast<label_t>(cd.cycles.size()));
      // only 1-cycles and k-cycles occur for prime k
      for (const auto& c : cd.cycles) CHECK((c.size() == 1 || c.size() == static_cast<std::size_t>(k)));
      CHECK(cd.count_of_length(1) == d);
    }
}

TEST_CASE("cyclic-shift eigenspace dimension table") {
  struct Row {
    label_t d;
    int k;
    std::vector<label_t> dims;
  };
  const Row rows[] = {
      {2, 3, {4, 2, 2}},          {2, 4, {6, 3, 4, 3}},       {3, 3, {11, 8, 8}},
      {3, 4, {24, 18, 21, 18}},   {4, 3, {24, 20, 20}},       {4, 4, {70, 60, 66, 60}},
  };
  for (const Row& row : rows) {
    const Dims shape(std::vector<label_t>(static_cast<std::size_t>(row.k), row.d));
    const CycleDecomp cd = cycle_decomposition(shape, SubsystemPerm::cyclic_shift(row.k));
    std::vector<label_t> dims;
    for (label_t m = 0; m < row.k; ++m)
      dims.push_back(eigenspace(cd, RootOfUnity::make(row.k, m)).dimension());
    CHECK(dims == row.dims);
  }
}
