// Command-line front end: every capability of the library behind a
// deterministic, diffable batch interface.
//
// Exit codes: 0 success, 2 usage error, 3 domain error, 4 budget exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tpsym/tpsym.hpp"

using namespace tpsym;

namespace {

struct GridSpec {
  double start = 0.0;
  double stop = 1.0;
  int steps = 101;

  double at(int i) const {
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
};

struct RunConfig {
  std::vector<label_t> dims;
  std::vector<int> perm;  // 1-based images; empty means default
  label_t n = 0;
  int k = 0;
  GridSpec grid;
  std::uint64_t seed = 20177;
  std::string format = "text";
  std::string out;
  label_t dense_limit = limits::default_dense_limit;
  label_t dmax = 29;
  int family = 1;
  label_t order = 1;
  label_t exponent = 0;
  std::string state = "gamma";
  double p = 0.5;
  std::optional<double> phi;
  std::vector<int> keep;  // 1-based slots
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char colon1 = 0, colon2 = 0;
  std::istringstream in(text);
  if (!(in >> g.start >> colon1 >> g.stop >> colon2 >> g.steps) || colon1 != ':' ||
      colon2 != ':' || !in.eof())
    throw CLI::ValidationError("--grid", "expected start:stop:steps");
  if (g.steps < 2) throw CLI::ValidationError("--grid", "grids need at least 2 points");
  return g;
}

Dims shape_of(const RunConfig& cfg) {
  if (cfg.dims.empty()) throw CLI::ValidationError("--dims", "required for this command");
  return Dims(cfg.dims);
}

SubsystemPerm perm_of(const RunConfig& cfg, int k) {
  if (!cfg.perm.empty()) {
    if (static_cast<int>(cfg.perm.size()) != k)
      throw CLI::ValidationError("--perm", "length does not match --dims");
    return SubsystemPerm::from_images_one_based(cfg.perm);
  }
  if (k == 2) return SubsystemPerm::exchange();
  throw CLI::ValidationError("--perm", "required for more than two subsystems");
}

StateVector named_state(const RunConfig& cfg, const Dims& d) {
  const label_t n = d.product();
  if (cfg.state == "gamma") return gamma_state(n);
  if (cfg.state == "sigma") return sigma_state(n);
  if (cfg.state == "ghz") return ghz_state(d);
  if (cfg.state == "psi-p") {
    require(n == 6, "psi-p lives in dimension 6");
    return psi_p(cfg.p);
  }
  if (cfg.state == "chi1") return chi1(n, cfg.p);
  if (cfg.state == "chi2") {
    double phi = 0.0;
    if (cfg.phi) {
      phi = *cfg.phi;
    } else {
      std::mt19937_64 rng(cfg.seed);
      phi = 2.0 * std::numbers::pi * static_cast<double>(rng()) /
            (static_cast<double>(std::mt19937_64::max()) + 1.0);
    }
    return chi2(n, cfg.p, phi);
  }
  throw domain_error("unknown state name: " + cfg.state);
}

// ---------------------------------------------------------------------------

std::string run_cycles(const RunConfig& cfg) {
  const Dims d = shape_of(cfg);
  const CycleDecomp cd = cycle_decomposition(d, perm_of(cfg, d.size()));
  if (cfg.format == "json") return to_json(cd).dump(2) + "\n";
  return cycles_to_string(cd.cycles) + "\n";
}

std::string run_spectrum(const RunConfig& cfg) {
  const Dims d = shape_of(cfg);
  const auto spec = spectrum(d, perm_of(cfg, d.size()));
  std::ostringstream out;
  if (cfg.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [root, mult] : spec)
      rows.push_back({{"eigenvalue", to_json(root)}, {"dimension", mult}});
    out << rows.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "eigenvalue,dimension\n";
    for (const auto& [root, mult] : spec) out << root.to_string() << "," << mult << "\n";
  } else {
    for (const auto& [root, mult] : spec) out << root.to_string() << ": " << mult << "\n";
  }
  return out.str();
}

std::string run_operator(const RunConfig& cfg) {
  const Dims d = shape_of(cfg);
  const PermOperator op = build_operator(d, perm_of(cfg, d.size()));
  std::ostringstream out;
  if (cfg.format == "json") {
    nlohmann::json j{{"d", to_json(d)}, {"sigma", to_json(op.sigma)},
                     {"image", op.image}};
    out << j.dump(2) << "\n";
    return out.str();
  }
  const Eigen::MatrixXd t = op.dense(cfg.dense_limit);
  for (label_t r = 0; r < t.rows(); ++r) {
    for (label_t c = 0; c < t.cols(); ++c) {
      if (c) out << " ";
      out << static_cast<int>(t(r, c));
    }
    out << "\n";
  }
  return out.str();
}

std::string run_eigenspace(const RunConfig& cfg) {
  const Dims d = shape_of(cfg);
  const EigenspaceBasis basis =
      eigenspace(d, perm_of(cfg, d.size()), RootOfUnity::make(cfg.order, cfg.exponent));
  if (cfg.format == "json") return to_json(basis).dump(2) + "\n";
  std::ostringstream out;
  out << "eigenvalue: " << basis.eigenvalue.to_string() << "\n";
  out << "dimension: " << basis.dimension() << "\n";
  for (const auto& v : basis.vectors) {
    bool first = true;
    for (label_t i = 0; i < v.size(); ++i) {
      if (v(i) == complex_t{0.0, 0.0}) continue;
      if (!first) out << " ";
      out << i << ":(" << fmt12(v(i).real()) << "," << fmt12(v(i).imag()) << ")";
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::string run_partitions(const RunConfig& cfg) {
  require(cfg.n >= 2, "--N is required");
  const auto parts = cfg.k > 0 ? partitions_with_k(cfg.n, cfg.k) : all_partitions(cfg.n);
  if (cfg.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const Dims& d : parts) list.push_back(to_json(d));
    nlohmann::json classes = nlohmann::json::array();
    for (const Dims& rep : representative_partitions(cfg.n))
      classes.push_back(to_json(equivalence_class(rep)));
    nlohmann::json j{{"N", cfg.n},
                     {"omega", omega(cfg.n)},
                     {"primitive", to_json(primitive_partition(cfg.n))},
                     {"partitions", list},
                     {"classes", classes}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const Dims& d : parts) out << dims_bracket(d) << "\n";
  return out.str();
}

std::string run_dims_scan(const RunConfig& cfg) {
  require(cfg.dmax >= 2, "--dmax must be at least 2");
  std::ostringstream out;
  out << "d,sym_dim,antisym_dim\n";
  for (label_t d = 2; d <= cfg.dmax; ++d) {
    const CycleDecomp cd = cycle_decomposition(2, d);
    out << d << "," << cd.cycles.size() << "," << cd.even_length_count() << "\n";
  }
  return out.str();
}

std::string run_trace_distance_scan(const RunConfig& cfg) {
  const Dims d23({2, 3}), d32({3, 2});
  std::ostringstream out;
  out << "p,d2,d3\n";
  for (int i = 0; i < cfg.grid.steps; ++i) {
    const double p = cfg.grid.at(i);
    const StateVector psi = psi_p(p);
    const double d2 =
        trace_distance(reduced_density(psi, d23, {0}), reduced_density(psi, d32, {1}));
    const double d3 =
        trace_distance(reduced_density(psi, d23, {1}), reduced_density(psi, d32, {0}));
    out << fmt12(p) << "," << fmt12(d2) << "," << fmt12(d3) << "\n";
  }
  return out.str();
}

std::string run_chi_scan(const RunConfig& cfg) {
  require(cfg.n >= 4, "--N is required");
  require(cfg.family == 1 || cfg.family == 2, "--family must be 1 or 2");
  const auto reps = representative_partitions(cfg.n);
  std::vector<EntanglementEvaluator> evals;
  for (const Dims& d : reps) evals.emplace_back(d, 1);
  std::mt19937_64 rng(cfg.seed);
  std::ostringstream out;
  out << "p,partition,E\n";
  for (int i = 0; i < cfg.grid.steps; ++i) {
    const double p = cfg.grid.at(i);
    StateVector psi;
    if (cfg.family == 1) {
      psi = chi1(cfg.n, p);
    } else {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(rng()) /
                         (static_cast<double>(std::mt19937_64::max()) + 1.0);
      psi = chi2(cfg.n, p, phi);
    }
    for (std::size_t r = 0; r < reps.size(); ++r)
      out << fmt12(p) << "," << reps[r].to_string() << "," << fmt12(evals[r].value(psi)) << "\n";
  }
  return out.str();
}

struct PaperPair {
  std::vector<label_t> shape;
  std::vector<int> s1, s2;
};

// published reference pairs for the bipartitions of N = 24
const PaperPair kReferencePairs24[] = {
    {{2, 12}, {1, 2, 3, 4}, {4, 1, 2, 3}}, {{3, 8}, {2, 3, 4, 1}, {4, 1, 2, 3}},
    {{4, 6}, {1, 2, 4, 3}, {3, 4, 1, 2}},  {{6, 4}, {1, 3, 4, 2}, {3, 4, 1, 2}},
    {{8, 3}, {1, 2, 3, 4}, {2, 3, 4, 1}},  {{12, 2}, {1, 2, 4, 3}, {2, 3, 4, 1}},
};

std::string run_coarse_table(const RunConfig& cfg) {
  require(cfg.n >= 4, "--N is required");
  const Dims dp = primitive_partition(cfg.n);
  std::ostringstream out;
  const bool csv = cfg.format == "csv";
  if (csv)
    out << "dprime,sigma1,sigma1_dp,sigma2,verified,source\n";
  else
    out << "dprime  sigma1  sigma1(dp)  sigma2  verified  source\n";
  for (const Dims& d : partitions_with_k(cfg.n, 2)) {
    const CoarseGrainMatch match = coarse_grain_match(d, SubsystemPerm::exchange());
    std::string s1 = "-", s1dp = "-", s2 = "-", verified = "no", source = "alt";
    if (match.found) {
      s1 = match.sigma1->cycle_notation();
      s1dp = dims_bracket(apply_perm(*match.sigma1, dp));
      s2 = match.sigma2->cycle_notation();
      verified = image_table(apply_perm(*match.sigma1, dp), *match.sigma2) ==
                         image_table(d, SubsystemPerm::exchange())
                     ? "yes"
                     : "no";
      for (const PaperPair& row : kReferencePairs24) {
        if (Dims(row.shape) == d &&
            SubsystemPerm::from_images_one_based(row.s1) == *match.sigma1 &&
            SubsystemPerm::from_images_one_based(row.s2) == *match.sigma2)
          source = "ref";
      }
    }
    const char* sep = csv ? "," : "  ";
    auto quote = [&](const std::string& field) {
      return csv && field.find(',') != std::string::npos ? "\"" + field + "\"" : field;
    };
    out << dims_bracket(d) << sep << quote(s1) << sep << quote(s1dp) << sep << quote(s2) << sep
        << verified << sep << source << "\n";
  }
  return out.str();
}

std::string run_rdm(const RunConfig& cfg) {
  const Dims d = shape_of(cfg);
  require(!cfg.keep.empty(), "--keep is required");
  std::vector<int> keep;
  for (int slot : cfg.keep) keep.push_back(slot - 1);
  const DensityMatrix rho = reduced_density(named_state(cfg, d), d, keep);
  if (cfg.format == "json") return to_json(rho).dump(2) + "\n";
  std::ostringstream out;
  for (label_t r = 0; r < rho.rows(); ++r) {
    for (label_t c = 0; c < rho.cols(); ++c) {
      if (c) out << " ";
      out << "(" << fmt12(rho(r, c).real()) << "," << fmt12(rho(r, c).imag()) << ")";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"permutation symmetry of heterogeneous tensor-product decompositions"};
  app.require_subcommand(1);

  std::string grid_text;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "text|json|csv")->default_str("text");
    cmd->add_option("--out", cfg.out, "write output to this path instead of stdout");
    return cmd;
  };
  auto add_shape = [&](CLI::App* cmd) {
    cmd->add_option("--dims", cfg.dims, "subsystem dimensions, e.g. 2,2,3")->delimiter(',');
    cmd->add_option("--perm", cfg.perm,
                    "slot permutation as the 1-based image list of sigma (slot i maps to the "
                    "i-th value), e.g. 2,3,1 for the cycle (1,2,3); default for two slots is "
                    "the exchange 2,1")
        ->delimiter(',');
    return cmd;
  };

  auto* c_cycles = add_shape(add_common(app.add_subcommand("cycles", "cycle decomposition pi(d,sigma)")));
  auto* c_spectrum =
      add_shape(add_common(app.add_subcommand("spectrum", "eigenvalues with eigenspace dimensions")));
  auto* c_operator = add_shape(add_common(app.add_subcommand("operator", "permutation matrix of T")));
  c_operator->add_option("--dense-limit", cfg.dense_limit, "largest N rendered as a dense matrix");
  auto* c_eigenspace =
      add_shape(add_common(app.add_subcommand("eigenspace", "orthonormal basis of one eigenspace")));
  c_eigenspace->add_option("--order", cfg.order, "eigenvalue order l of e^(2i*pi*m/l)")->required();
  c_eigenspace->add_option("--exponent", cfg.exponent, "eigenvalue exponent m")->required();
  auto* c_partitions = add_common(app.add_subcommand("partitions", "multiplicative partitions of N"));
  c_partitions->add_option("--N", cfg.n, "composite dimension")->required();
  c_partitions->add_option("--k", cfg.k, "restrict to partitions with k factors");
  auto* c_dims_scan =
      add_common(app.add_subcommand("dims-scan", "symmetric/antisymmetric dimensions of [2,d]"));
  c_dims_scan->add_option("--dmax", cfg.dmax, "largest qudit dimension (default 29)");
  auto* c_trace = add_common(
      app.add_subcommand("trace-distance-scan", "d2(p), d3(p) for the N=6 interpolating family"));
  c_trace->add_option("--grid", grid_text, "p grid as start:stop:steps (default 0:1:101)");
  auto* c_chi = add_common(
      app.add_subcommand("chi-scan", "entanglement of the chi families over representative shapes"));
  c_chi->add_option("--N", cfg.n, "composite dimension")->required();
  c_chi->add_option("--family", cfg.family, "1 or 2")->required();
  c_chi->add_option("--grid", grid_text, "p grid as start:stop:steps (default 0:1:101)");
  c_chi->add_option("--seed", cfg.seed, "random seed (fixed default)");
  auto* c_coarse = add_common(
      app.add_subcommand("coarse-table", "bipartite exchanges as primitive-partition permutations"));
  c_coarse->add_option("--N", cfg.n, "composite dimension")->required();
  auto* c_rdm = add_shape(add_common(app.add_subcommand("rdm", "reduced density matrix of a named state")));
  c_rdm->add_option("--state", cfg.state, "gamma|sigma|ghz|psi-p|chi1|chi2");
  c_rdm->add_option("--p", cfg.p, "family parameter in [0,1]");
  c_rdm->add_option("--phi", cfg.phi, "relative phase for chi2 (default drawn from --seed)");
  c_rdm->add_option("--seed", cfg.seed, "random seed (fixed default)");
  c_rdm->add_option("--keep", cfg.keep, "1-based slots to keep, e.g. 1,2")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (!grid_text.empty()) cfg.grid = parse_grid(grid_text);
    std::string output;
    if (c_cycles->parsed()) output = run_cycles(cfg);
    if (c_spectrum->parsed()) output = run_spectrum(cfg);
    if (c_operator->parsed()) output = run_operator(cfg);
    if (c_eigenspace->parsed()) output = run_eigenspace(cfg);
    if (c_partitions->parsed()) output = run_partitions(cfg);
    if (c_dims_scan->parsed()) output = run_dims_scan(cfg);
    if (c_trace->parsed()) output = run_trace_distance_scan(cfg);
    if (c_chi->parsed()) output = run_chi_scan(cfg);
    if (c_coarse->parsed()) output = run_coarse_table(cfg);
    if (c_rdm->parsed()) output = run_rdm(cfg);
    if (!cfg.out.empty()) {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw domain_error("cannot open output path: " + cfg.out);
      file << output;
    } else {
      std::cout << output;
    }
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
