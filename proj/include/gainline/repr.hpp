#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "gainline/algebra.hpp"
#include "gainline/gain.hpp"
#include "gainline/group.hpp"

namespace gainline {

/// Numerical tolerances shared by the representation and spectral layers.
struct Tolerances {
  double validation = 1e-10;  // homomorphism / unitarity / Hermitian checks
  double residual = 1e-9;     // eigenpair residual relative to the matrix norm
  double bound = 1e-8;        // slack between numerical eigenvalues and the bounds +-2
};

/// A unitary representation pi: G -> U_k(C), given by one k x k image per element.
class UnitaryRepresentation {
 public:
  /// Validates pi(1) = I, pi(g) pi(h) = pi(gh) and unitarity, exhaustively.
  UnitaryRepresentation(GroupPtr group, std::vector<Eigen::MatrixXcd> images, bool irreducible,
                        std::string name = "custom", double tol = Tolerances{}.validation);

  const GroupPtr& group() const { return group_; }
  std::size_t degree() const { return degree_; }
  bool irreducible() const { return irreducible_; }
  const std::string& name() const { return name_; }
  const Eigen::MatrixXcd& operator()(Element g) const { return images_.at(g.id); }
  const std::vector<Eigen::MatrixXcd>& images() const { return images_; }

 private:
  GroupPtr group_;
  std::vector<Eigen::MatrixXcd> images_;
  std::size_t degree_;
  bool irreducible_;
  std::string name_;
};

/// trivial, sign_character, root_of_unity, q8_2dim, regular.
/// `parameter` is the exponent j for root_of_unity (pi(a) = exp(2 pi i j a / n)).
UnitaryRepresentation builtin_representation(const GroupPtr& group, const std::string& which,
                                             long long parameter = 1);

/// The block matrix whose (i, j) block is the Fourier transform of the source entry.
struct RepresentedMatrix {
  std::size_t block_rows = 0, block_cols = 0, degree = 0;
  Eigen::MatrixXcd data;
};

Eigen::MatrixXcd fourier(const AlgebraElement& f, const UnitaryRepresentation& pi);
RepresentedMatrix fourier(const CGMatrix& a, const UnitaryRepresentation& pi);

/// I_n ⊗ pi(g).
Eigen::MatrixXcd block_scalar(std::size_t n, const UnitaryRepresentation& pi, Element g);

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending, with multiplicity
};

struct EigenDecomposition {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors; // column i belongs to values[i]
  int sweeps = 0;
};

/// Cyclic Jacobi diagonalization of a complex Hermitian matrix.
/// ValidationError when the input is not Hermitian within `hermitian_tol`
/// (scaled by max(1, largest entry)).
EigenDecomposition hermitian_eigen(const Eigen::MatrixXcd& m,
                                   double hermitian_tol = Tolerances{}.validation);
Spectrum hermitian_spectrum(const RepresentedMatrix& m, double hermitian_tol = Tolerances{}.validation);
Spectrum hermitian_spectrum(const Eigen::MatrixXcd& m, double hermitian_tol = Tolerances{}.validation);

struct RepresentedGainMatrices {
  RepresentedMatrix adjacency;
  RepresentedMatrix laplacian;
};

RepresentedGainMatrices represented_gain_matrices(const GainFunction& psi, CentralWeakInvolution s,
                                                  const UnitaryRepresentation& pi);

/// The pi-spectrum of a gain graph: spectrum of its represented adjacency matrix.
Spectrum pi_spectrum(const GainFunction& psi, const UnitaryRepresentation& pi);

}  // namespace gainline
