#include "cca/lattice.hpp"

#include <cmath>
#include <string>

namespace cca {

namespace {

void require(bool ok, errc code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

}  // namespace

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::not_mirror_symmetric: return "not_mirror_symmetric";
    case errc::eta_zero: return "eta_zero";
    case errc::eta_degenerate: return "eta_degenerate";
    case errc::no_bound_pair: return "no_bound_pair";
    case errc::zero_gap: return "zero_gap";
    case errc::regime_mismatch: return "regime_mismatch";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::parse_error: return "parse_error";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

HoppingMatrix::HoppingMatrix(Eigen::VectorXd onsite_in,
                             Eigen::VectorXd coupling_in)
    : onsite(std::move(onsite_in)), coupling(std::move(coupling_in)) {
  require(onsite.size() >= 1, errc::invalid_argument,
          "HoppingMatrix: need at least one site");
  require(coupling.size() == onsite.size() - 1, errc::invalid_argument,
          "HoppingMatrix: coupling length must be dim-1");
  for (int i = 0; i < coupling.size(); ++i) {
    require(coupling[i] >= 0.0, errc::invalid_argument,
            "HoppingMatrix: couplings must be >= 0");
  }
}

Eigen::MatrixXd HoppingMatrix::dense() const {
  const int n = dim();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = onsite[i];
  for (int i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = -coupling[i];
    m(i + 1, i) = -coupling[i];
  }
  return m;
}

Eigen::VectorXd HoppingMatrix::apply(const Eigen::VectorXd& v) const {
  const int n = dim();
  require(v.size() == n, errc::invalid_argument,
          "HoppingMatrix::apply: dimension mismatch");
  Eigen::VectorXd out(n);
  for (int i = 0; i < n; ++i) {
    double s = onsite[i] * v[i];
    if (i > 0) s -= coupling[i - 1] * v[i - 1];
    if (i + 1 < n) s -= coupling[i] * v[i + 1];
    out[i] = s;
  }
  return out;
}

bool HoppingMatrix::mirror_symmetric(double tol) const {
  const int n = dim();
  for (int i = 0; i < n / 2; ++i) {
    if (std::abs(onsite[i] - onsite[n - 1 - i]) > tol) return false;
  }
  const int b = static_cast<int>(coupling.size());
  for (int i = 0; i < b / 2; ++i) {
    if (std::abs(coupling[i] - coupling[b - 1 - i]) > tol) return false;
  }
  return true;
}

StaggeredSpec::StaggeredSpec(int n_sites_in, double eta_in, double j_scale_in)
    : n_sites(n_sites_in), eta(eta_in), j_scale(j_scale_in) {
  require(n_sites > 0, errc::invalid_argument,
          "StaggeredSpec: n_sites must be positive");
  require(n_sites % 2 == 0, errc::invalid_argument,
          "StaggeredSpec: n_sites must be even");
  require(std::abs(eta) <= 1.0, errc::invalid_argument,
          "StaggeredSpec: eta must lie in [-1, 1]");
  require(std::isfinite(eta), errc::invalid_argument,
          "StaggeredSpec: eta must be finite");
  require(j_scale > 0.0 && std::isfinite(j_scale), errc::invalid_argument,
          "StaggeredSpec: j_scale must be positive");
}

StaggeredSpec StaggeredSpec::from_couplings(int n_sites, double j1,
                                            double j2) {
  require(j1 >= 0.0 && j2 >= 0.0, errc::invalid_argument,
          "StaggeredSpec: couplings must be >= 0");
  require(j1 + j2 > 0.0, errc::invalid_argument,
          "StaggeredSpec: couplings cannot both vanish");
  return StaggeredSpec(n_sites, (j1 - j2) / (j1 + j2), (j1 + j2) / 2.0);
}

UniformBulkSpec::UniformBulkSpec(int n_sites_in, double j_outer_in,
                                 double j_bulk_in)
    : n_sites(n_sites_in), j_outer(j_outer_in), j_bulk(j_bulk_in) {
  require(n_sites >= 3, errc::invalid_argument,
          "UniformBulkSpec: n_sites must be >= 3");
  require(j_outer >= 0.0, errc::invalid_argument,
          "UniformBulkSpec: j_outer must be >= 0");
  require(j_bulk > 0.0, errc::invalid_argument,
          "UniformBulkSpec: j_bulk must be > 0");
}

ModularSpec::ModularSpec(StaggeredSpec module_in, int n_modules_in,
                         double j_mod_in)
    : module(module_in), n_modules(n_modules_in), j_mod(j_mod_in) {
  require(n_modules >= 1, errc::invalid_argument,
          "ModularSpec: n_modules must be >= 1");
  require(j_mod >= 0.0, errc::invalid_argument,
          "ModularSpec: j_mod must be >= 0");
}

HoppingMatrix build_staggered(const StaggeredSpec& spec) {
  const int n = spec.n_sites;
  Eigen::VectorXd coupling(n - 1);
  for (int b = 1; b <= n - 1; ++b) {
    // odd bonds carry J1 = (1+eta)J, even bonds J2 = (1-eta)J
    const double sign = (b % 2 == 1) ? 1.0 : -1.0;
    coupling[b - 1] = (1.0 + sign * spec.eta) * spec.j_scale;
  }
  return HoppingMatrix(Eigen::VectorXd::Zero(n), std::move(coupling));
}

HoppingMatrix build_uniform_bulk(const UniformBulkSpec& spec) {
  const int n = spec.n_sites;
  Eigen::VectorXd coupling = Eigen::VectorXd::Constant(n - 1, spec.j_bulk);
  coupling[0] = spec.j_outer;
  coupling[n - 2] = spec.j_outer;
  return HoppingMatrix(Eigen::VectorXd::Zero(n), std::move(coupling));
}

HoppingMatrix build_modular(const ModularSpec& spec) {
  const HoppingMatrix unit = build_staggered(spec.module);
  const int n = spec.module.n_sites;
  const int total = spec.total_sites();
  Eigen::VectorXd coupling(total - 1);
  for (int j = 0; j < spec.n_modules; ++j) {
    for (int b = 0; b < n - 1; ++b) coupling[j * n + b] = unit.coupling[b];
    if (j + 1 < spec.n_modules) coupling[j * n + n - 1] = spec.j_mod;
  }
  return HoppingMatrix(Eigen::VectorXd::Zero(total), std::move(coupling));
}

ParityBlocks parity_reduce(const HoppingMatrix& h) {
  const int n = h.dim();
  require(n % 2 == 0, errc::invalid_argument,
          "parity_reduce: dimension must be even");
  require(h.mirror_symmetric(), errc::not_mirror_symmetric,
          "parity_reduce: matrix is not mirror-symmetric");

  const int m = n / 2;
  const double j_edge = h.coupling[m - 1];  // middle bond

  Eigen::VectorXd block_coupling = h.coupling.head(m - 1);
  Eigen::VectorXd onsite_even = h.onsite.head(m);
  Eigen::VectorXd onsite_odd = onsite_even;
  onsite_even[m - 1] -= j_edge;
  onsite_odd[m - 1] += j_edge;

  ParityBlocks blocks;
  blocks.even_block = HoppingMatrix(std::move(onsite_even), block_coupling);
  blocks.odd_block =
      HoppingMatrix(std::move(onsite_odd), std::move(block_coupling));
  blocks.defect_site = m;
  blocks.defect_even = -j_edge;
  blocks.defect_odd = j_edge;
  return blocks;
}

}  // namespace cca
