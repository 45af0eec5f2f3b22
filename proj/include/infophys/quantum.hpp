// Finite-dimensional quantum information primitives: state vectors, density
// matrices with subsystem partitions, partial trace, entropies, the pointer
// (von Neumann) measurement map, Bell states, Wootters concurrence.

#ifndef INFOPHYS_QUANTUM_HPP
#define INFOPHYS_QUANTUM_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "infophys/classical.hpp"

namespace infophys::quantum {

using classical::LogBase;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Normalized state vector over a tensor product of finite subsystems.
class StateVector {
public:
  StateVector(Vector amplitudes, std::vector<std::size_t> dims);

  const Vector& amplitudes() const { return amps_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }

private:
  Vector amps_;
  std::vector<std::size_t> dims_;
};

/// Hermitian, positive-semidefinite, unit-trace matrix with a subsystem
/// dimension partition.
class DensityMatrix {
public:
  DensityMatrix(Matrix entries, std::vector<std::size_t> dims);

  const Matrix& entries() const { return mat_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }

  /// Eigenvalues clamped into [0, 1] (drift within 1e-10 tolerated).
  std::vector<double> spectrum() const;

private:
  Matrix mat_;
  std::vector<std::size_t> dims_;
};

DensityMatrix density_from_state(const StateVector& s);

/// Trace out every subsystem not listed in `keep` (indices into dims,
/// distinct, in ascending order of the kept subsystems).
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::size_t>& keep);

double von_neumann_entropy(const DensityMatrix& rho, LogBase b);

/// S(A|B) = S(AB) - S(B); negative for entangled states.
double conditional_q_entropy(const DensityMatrix& rho_ab, LogBase b);

/// S(A:B) = S(A) + S(B) - S(AB).
double mutual_q_entropy(const DensityMatrix& rho_ab, LogBase b);

/// Entangling pointer map |x,a> -> |x, a+x mod P> on system (dim d) tensor
/// pointer (dim P >= d). Acts on a full two-subsystem state.
StateVector pointer_unitary_apply(const StateVector& full);

/// Attaches a pointer in |0> to `system` and applies the pointer map:
/// basis state |x> -> |x,x>, superpositions entangle.
StateVector pointer_measurement(const StateVector& system,
                                std::size_t pointer_dim);

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

StateVector bell_state(BellKind kind);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const DensityMatrix& rho);

/// Entropy through the replica route: -(d/dn) Tr rho^n at n=1, evaluated by
/// central differencing Tr rho^n over the spectrum. Agrees with
/// von_neumann_entropy to ~1e-10.
double replica_entropy(const DensityMatrix& rho, LogBase b);

/// von Neumann entropy of the state reduced to the masked ("inside")
/// subsystems. mask[i] == true keeps subsystem i.
double geometric_entropy(const StateVector& s, const std::vector<bool>& inside,
                         LogBase b);

/// Kronecker product helpers.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

}  // namespace infophys::quantum

#endif
