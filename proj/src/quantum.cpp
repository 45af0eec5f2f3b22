#include "infophys/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace infophys::quantum {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kEigClampTol = 1e-10;

std::size_t dims_product(const std::vector<std::size_t>& dims) {
  std::size_t d = 1;
  for (std::size_t x : dims) {
    if (x == 0) throw std::invalid_argument("zero subsystem dimension");
    d *= x;
  }
  return d;
}

// Row-major multi-index decode for subsystem index arithmetic.
std::vector<std::size_t> unravel(std::size_t idx,
                                 const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = idx % dims[k];
    idx /= dims[k];
  }
  return out;
}

std::size_t ravel(const std::vector<std::size_t>& multi,
                  const std::vector<std::size_t>& dims) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + multi[k];
  return idx;
}

double spectrum_entropy(const std::vector<double>& lambda, LogBase b) {
  double s = 0.0;
  for (double l : lambda) s -= classical::xlogx(l, b);
  return s;
}

}  // namespace

StateVector::StateVector(Vector amplitudes, std::vector<std::size_t> dims)
    : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (dims_.empty()) dims_ = {static_cast<std::size_t>(amps_.size())};
  if (dims_product(dims_) != static_cast<std::size_t>(amps_.size()))
    throw std::invalid_argument("dims do not match amplitude length");
  if (std::abs(amps_.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("state vector not normalized");
}

DensityMatrix::DensityMatrix(Matrix entries, std::vector<std::size_t> dims)
    : mat_(std::move(entries)), dims_(std::move(dims)) {
  if (mat_.rows() != mat_.cols())
    throw std::invalid_argument("density matrix not square");
  if (dims_.empty()) dims_ = {static_cast<std::size_t>(mat_.rows())};
  if (dims_product(dims_) != static_cast<std::size_t>(mat_.rows()))
    throw std::invalid_argument("dims do not match matrix size");
  if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
    throw std::invalid_argument("density matrix not Hermitian");
  if (std::abs(mat_.trace().real() - 1.0) > 1e-10 ||
      std::abs(mat_.trace().imag()) > 1e-10)
    throw std::invalid_argument("density matrix trace != 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  if (es.eigenvalues().minCoeff() < -kEigClampTol)
    throw std::invalid_argument("density matrix not positive semidefinite");
}

std::vector<double> DensityMatrix::spectrum() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  std::vector<double> lambda(es.eigenvalues().data(),
                             es.eigenvalues().data() + es.eigenvalues().size());
  for (double& l : lambda) l = std::clamp(l, 0.0, 1.0);
  return lambda;
}

DensityMatrix density_from_state(const StateVector& s) {
  Matrix rho = s.amplitudes() * s.amplitudes().adjoint();
  return DensityMatrix(std::move(rho), s.dims());
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::size_t>& keep) {
  const auto& dims = rho.dims();
  if (keep.empty()) throw std::invalid_argument("empty keep selector");
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) throw std::out_of_range("selector out of range");
    if (kept[k]) throw std::invalid_argument("duplicate selector index");
    kept[k] = true;
  }
  std::vector<std::size_t> keep_dims, trace_dims, trace_idx;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (kept[i]) keep_dims.push_back(dims[i]);
    else { trace_dims.push_back(dims[i]); trace_idx.push_back(i); }
  }
  std::size_t dk = dims_product(keep_dims);
  std::size_t dt = dims_product(trace_dims);
  Matrix out = Matrix::Zero(dk, dk);
  std::vector<std::size_t> full(dims.size());
  for (std::size_t a = 0; a < dk; ++a) {
    auto am = unravel(a, keep_dims);
    for (std::size_t b = 0; b < dk; ++b) {
      auto bm = unravel(b, keep_dims);
      Complex acc = 0.0;
      for (std::size_t t = 0; t < dt; ++t) {
        auto tm = unravel(t, trace_dims);
        std::size_t ik = 0, it = 0;
        for (std::size_t i = 0; i < dims.size(); ++i)
          full[i] = kept[i] ? am[ik++] : tm[it++];
        std::size_t row = ravel(full, dims);
        ik = 0; it = 0;
        for (std::size_t i = 0; i < dims.size(); ++i)
          full[i] = kept[i] ? bm[ik++] : tm[it++];
        std::size_t col = ravel(full, dims);
        acc += rho.entries()(row, col);
      }
      out(a, b) = acc;
    }
  }
  // symmetrize away accumulation noise before revalidation
  out = (out + out.adjoint().eval()) / 2.0;
  return DensityMatrix(std::move(out), std::move(keep_dims));
}

double von_neumann_entropy(const DensityMatrix& rho, LogBase b) {
  return spectrum_entropy(rho.spectrum(), b);
}

double conditional_q_entropy(const DensityMatrix& rho_ab, LogBase b) {
  if (rho_ab.dims().size() != 2)
    throw std::invalid_argument("need a two-subsystem partition");
  double s_ab = von_neumann_entropy(rho_ab, b);
  double s_b = von_neumann_entropy(partial_trace(rho_ab, {1}), b);
  return s_ab - s_b;
}

double mutual_q_entropy(const DensityMatrix& rho_ab, LogBase b) {
  if (rho_ab.dims().size() != 2)
    throw std::invalid_argument("need a two-subsystem partition");
  double s_ab = von_neumann_entropy(rho_ab, b);
  double s_a = von_neumann_entropy(partial_trace(rho_ab, {0}), b);
  double s_b = von_neumann_entropy(partial_trace(rho_ab, {1}), b);
  return s_a + s_b - s_ab;
}

StateVector pointer_unitary_apply(const StateVector& full) {
  if (full.dims().size() != 2)
    throw std::invalid_argument("need system x pointer partition");
  std::size_t d = full.dims()[0], p = full.dims()[1];
  if (p < d) throw std::invalid_argument("pointer dimension too small");
  Vector out = Vector::Zero(full.dim());
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t a = 0; a < p; ++a)
      out(x * p + (a + x) % p) = full.amplitudes()(x * p + a);
  return StateVector(std::move(out), full.dims());
}

StateVector pointer_measurement(const StateVector& system,
                                std::size_t pointer_dim) {
  if (system.dims().size() != 1)
    throw std::invalid_argument("system must be a single subsystem");
  std::size_t d = system.dim();
  if (pointer_dim < d) throw std::invalid_argument("pointer dimension too small");
  Vector joint = Vector::Zero(d * pointer_dim);
  for (std::size_t x = 0; x < d; ++x)
    joint(x * pointer_dim) = system.amplitudes()(x);  // pointer in |0>
  return pointer_unitary_apply(StateVector(std::move(joint), {d, pointer_dim}));
}

StateVector bell_state(BellKind kind) {
  Vector v = Vector::Zero(4);
  const double r = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case BellKind::PhiPlus:  v(0) = r; v(3) = r; break;
    case BellKind::PhiMinus: v(0) = r; v(3) = -r; break;
    case BellKind::PsiPlus:  v(1) = r; v(2) = r; break;
    case BellKind::PsiMinus: v(1) = r; v(2) = -r; break;
  }
  return StateVector(std::move(v), {2, 2});
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("concurrence needs a two-qubit state");
  // spin flip: (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y)
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1; yy(1, 2) = 1; yy(2, 1) = 1; yy(3, 0) = -1;
  Matrix rho_tilde = yy * rho.entries().conjugate() * yy;

  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.entries());
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Matrix sqrt_rho =
      es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();

  Matrix m = sqrt_rho * rho_tilde * sqrt_rho;
  m = (m + m.adjoint().eval()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es2(m, Eigen::EigenvaluesOnly);
  if (es2.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  Eigen::VectorXd lam = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(lam.data(), lam.data() + 4, std::greater<double>());
  return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

double replica_entropy(const DensityMatrix& rho, LogBase b) {
  auto lambda = rho.spectrum();
  auto trace_pow = [&](double n) {
    double t = 0.0;
    for (double l : lambda)
      if (l > 0.0) t += std::pow(l, n);
    return t;
  };
  const double h = 1e-5;
  double s_nats = -(trace_pow(1.0 + h) - trace_pow(1.0 - h)) / (2.0 * h);
  switch (b) {
    case LogBase::E: return s_nats;
    case LogBase::Two: return s_nats / std::log(2.0);
    case LogBase::Ten: return s_nats / std::log(10.0);
  }
  throw std::logic_error("bad LogBase");
}

double geometric_entropy(const StateVector& s, const std::vector<bool>& inside,
                         LogBase b) {
  if (inside.size() != s.dims().size())
    throw std::invalid_argument("mask length mismatch");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < inside.size(); ++i)
    if (inside[i]) keep.push_back(i);
  if (keep.empty()) throw std::invalid_argument("empty inside mask");
  return von_neumann_entropy(partial_trace(density_from_state(s), keep), b);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

}  // namespace infophys::quantum
