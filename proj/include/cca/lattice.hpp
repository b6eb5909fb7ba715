#pragma once

#include <Eigen/Dense>

#include "cca/errors.hpp"

namespace cca {

// Single-excitation Hamiltonian of a nearest-neighbour cavity chain, stored
// as its tridiagonal data. All energies are in units of the hopping scale J,
// times in 1/J. Sign convention: the (x, x+1) matrix element is -coupling[x];
// the diagonal is onsite (cavity frequency convention omega_c = 0, so
// builders emit all-zero onsite terms).
struct HoppingMatrix {
  Eigen::VectorXd onsite;    // length dim
  Eigen::VectorXd coupling;  // length dim-1, all >= 0

  HoppingMatrix() = default;
  HoppingMatrix(Eigen::VectorXd onsite_in, Eigen::VectorXd coupling_in);

  int dim() const { return static_cast<int>(onsite.size()); }

  // Dense symmetric form, built only where a solver needs it.
  Eigen::MatrixXd dense() const;

  // Matrix-vector product using the tridiagonal data directly.
  Eigen::VectorXd apply(const Eigen::VectorXd& v) const;

  bool mirror_symmetric(double tol = 1e-12) const;
};

// Staggered (Peierls-distorted) chain: N cavities, alternating couplings
// J1 = (1+eta)J on odd bonds and J2 = (1-eta)J on even bonds (1-based bond
// numbering).
struct StaggeredSpec {
  int n_sites;     // even, > 0
  double eta;      // distortion, in [-1, 1]
  double j_scale;  // hopping scale J > 0

  StaggeredSpec(int n_sites, double eta, double j_scale = 1.0);

  // Alternate parameterization directly from the two hopping rates:
  // eta = (j1-j2)/(j1+j2), J = (j1+j2)/2.
  static StaggeredSpec from_couplings(int n_sites, double j1, double j2);

  double j1() const { return (1.0 + eta) * j_scale; }
  double j2() const { return (1.0 - eta) * j_scale; }

  // The closed-form spectral results require N/2 odd; numerics work for any
  // even N.
  bool parity_analytic_valid() const { return (n_sites / 2) % 2 == 1; }
};

// Chain with uniform bulk coupling j_bulk and weak outermost bonds j_outer.
struct UniformBulkSpec {
  int n_sites;     // >= 3
  double j_outer;  // J1 >= 0
  double j_bulk;   // J2 > 0

  UniformBulkSpec(int n_sites, double j_outer, double j_bulk);
};

// m identical staggered modules of length N joined by bonds of strength
// j_mod, total length L = m*N.
struct ModularSpec {
  StaggeredSpec module;
  int n_modules;  // m >= 1
  double j_mod;   // >= 0

  ModularSpec(StaggeredSpec module, int n_modules, double j_mod);

  int total_sites() const { return module.n_sites * n_modules; }
};

HoppingMatrix build_staggered(const StaggeredSpec& spec);
HoppingMatrix build_uniform_bulk(const UniformBulkSpec& spec);
HoppingMatrix build_modular(const ModularSpec& spec);

// Mirror-parity reduction of an even-length mirror-symmetric chain: two
// half-length blocks that differ only in the sign of an on-site defect
// -/+ J_edge at the last block site, J_edge being the middle bond.
struct ParityBlocks {
  HoppingMatrix even_block;  // defect -J_edge (symmetric subspace)
  HoppingMatrix odd_block;   // defect +J_edge (antisymmetric subspace)
  int defect_site;           // 1-based block site index = dim/2
  double defect_even;        // -J_edge
  double defect_odd;         // +J_edge
};

ParityBlocks parity_reduce(const HoppingMatrix& h);

}  // namespace cca
