// Copyright 2026 The entqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entqc/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "entqc/random.hpp"

namespace entqc {

namespace {

constexpr double kHermitianTol = 1e-10;

std::size_t bit_of_slot(std::size_t n, std::size_t slot) { return n - 1 - slot; }

/// For each value t of the sub-register `slots` (slot 0 = MSB of t), the
/// full-register index with exactly those bits set.
std::vector<std::size_t> slot_offsets(std::size_t n, std::span<const std::size_t> slots) {
  const std::size_t k = slots.size();
  std::vector<std::size_t> out(std::size_t{1} << k, 0);
  for (std::size_t t = 0; t < out.size(); ++t) {
    std::size_t idx = 0;
    for (std::size_t s = 0; s < k; ++s) {
      if ((t >> (k - 1 - s)) & 1U) idx |= std::size_t{1} << bit_of_slot(n, slots[s]);
    }
    out[t] = idx;
  }
  return out;
}

std::vector<std::size_t> complement_slots(std::size_t n, std::span<const std::size_t> slots) {
  std::vector<std::size_t> rest;
  for (std::size_t s = 0; s < n; ++s) {
    if (std::find(slots.begin(), slots.end(), s) == slots.end()) rest.push_back(s);
  }
  return rest;
}

void check_finite(std::span<const Complex> values) {
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ContractError("matrix entry is not finite");
    }
  }
}

void require_distinct(std::span<const std::string> labels, const char* what) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw LabelError(std::string(what) + ": duplicate label " + l);
  }
}

/// Two-sided complex Jacobi rotation that zeroes the (p,q) entry of a
/// Hermitian 2x2 block [[app, apq], [conj(apq), aqq]].
struct Rotation {
  Complex gpp, gpq, gqp, gqq;
};

Rotation jacobi_rotation(double app, double aqq, Complex apq) {
  const double mag = std::abs(apq);
  const Complex phase = apq / mag;
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex back = std::conj(phase);
  return {c, s, -s * back, c * back};
}

/// m <- m G restricted to columns p, q.
void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& g) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const Complex mp = m(k, p);
    const Complex mq = m(k, q);
    m(k, p) = mp * g.gpp + mq * g.gqp;
    m(k, q) = mp * g.gpq + mq * g.gqq;
  }
}

/// m <- G^dagger m restricted to rows p, q.
void rotate_rows(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& g) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const Complex mp = m(p, k);
    const Complex mq = m(q, k);
    m(p, k) = std::conj(g.gpp) * mp + std::conj(g.gqp) * mq;
    m(q, k) = std::conj(g.gpq) * mp + std::conj(g.gqq) * mq;
  }
}

}  // namespace

// ---------------------------------------------------------------- matrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  if (data_.size() != rows * cols) throw DimensionError("entry count does not match shape");
  check_finite(data_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  check_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  ComplexMatrix m(ket.size(), bra.size());
  for (std::size_t r = 0; r < ket.size(); ++r) {
    for (std::size_t c = 0; c < bra.size(); ++c) m(r, c) = ket[r] * std::conj(bra[c]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  }
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  }
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m = *this;
  for (auto& v : m.data_) v = std::conj(v);
  return m;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Amplitudes ComplexMatrix::apply(std::span<const Complex> x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Amplitudes y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r; c < cols_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    }
  }
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (!is_square()) return false;
  return max_abs_diff(adjoint() * *this, identity(rows_)) <= tol;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("shape mismatch in matrix product");
  ComplexMatrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) m(r, c) += ark * b(k, c);
    }
  }
  return m;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch");
  return max_abs_diff(a.data(), b.data());
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionError("length mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex x = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          m(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
        }
      }
    }
  }
  return m;
}

// -------------------------------------------------------------- register

QubitRegister::QubitRegister(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw LabelError("register needs at least one qubit");
  for (const auto& l : labels_) {
    if (l.empty()) throw LabelError("empty qubit label");
  }
  require_distinct(labels_, "register");
}

QubitRegister::QubitRegister(std::initializer_list<std::string> labels)
    : QubitRegister(std::vector<std::string>(labels)) {}

bool QubitRegister::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t QubitRegister::slot_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw LabelError("unknown qubit label " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> QubitRegister::slots_of(std::span<const std::string> labels) const {
  require_distinct(labels, "label subset");
  std::vector<std::size_t> slots;
  slots.reserve(labels.size());
  for (const auto& l : labels) slots.push_back(slot_of(l));
  return slots;
}

QubitRegister QubitRegister::operator+(const QubitRegister& other) const {
  std::vector<std::string> joined = labels_;
  joined.insert(joined.end(), other.labels_.begin(), other.labels_.end());
  return QubitRegister(std::move(joined));
}

QubitRegister numbered_register(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
  return QubitRegister(std::move(labels));
}

// ----------------------------------------------------------------- state

StateVector::StateVector(QubitRegister reg, Amplitudes amplitudes)
    : reg_(std::move(reg)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != reg_.dimension()) {
    throw DimensionError("amplitude count " + std::to_string(amplitudes_.size()) +
                         " does not match register dimension " +
                         std::to_string(reg_.dimension()));
  }
  check_finite(amplitudes_);
}

StateVector StateVector::normalized(QubitRegister reg, Amplitudes amplitudes) {
  double sq = 0.0;
  for (const auto& a : amplitudes) sq += std::norm(a);
  if (!(sq > 0.0)) throw ContractError("cannot normalize a zero vector");
  const double inv = 1.0 / std::sqrt(sq);
  for (auto& a : amplitudes) a *= inv;
  return StateVector(std::move(reg), std::move(amplitudes));
}

StateVector StateVector::basis(QubitRegister reg, std::size_t index) {
  Amplitudes amps(reg.dimension());
  amps.at(index) = 1.0;
  return StateVector(std::move(reg), std::move(amps));
}

double StateVector::norm() const {
  double sq = 0.0;
  for (const auto& a : amplitudes_) sq += std::norm(a);
  return std::sqrt(sq);
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

StateVector StateVector::relabeled(QubitRegister reg) const {
  if (reg.size() != reg_.size()) throw DimensionError("relabel changes qubit count");
  return StateVector(std::move(reg), amplitudes_);
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  Amplitudes amps(a.dimension() * b.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < b.dimension(); ++j) amps[i * b.dimension() + j] = a[i] * b[j];
  }
  return StateVector(a.reg() + b.reg(), std::move(amps));
}

Complex inner(const StateVector& bra, const StateVector& ket) {
  if (bra.dimension() != ket.dimension()) throw DimensionError("inner product size mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < bra.dimension(); ++i) acc += std::conj(bra[i]) * ket[i];
  return acc;
}

double fidelity_pure(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("fidelity of states on different sizes");
  return std::min(1.0, std::norm(inner(a, b)));
}

// --------------------------------------------------------------- density

DensityMatrix::DensityMatrix(Unchecked, QubitRegister reg, ComplexMatrix matrix)
    : reg_(std::move(reg)), matrix_(std::move(matrix)) {}

DensityMatrix::DensityMatrix(QubitRegister reg, ComplexMatrix matrix)
    : reg_(std::move(reg)), matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || matrix_.rows() != reg_.dimension()) {
    throw DimensionError("density matrix shape does not match register");
  }
  if (!matrix_.is_hermitian(1e-12)) throw ContractError("density matrix is not Hermitian");
  if (std::abs(matrix_.trace() - 1.0) > 1e-12) throw ContractError("density matrix trace is not 1");
  if (hermitian_eigenvalues(matrix_).front() < -1e-10) {
    throw ContractError("density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& state) {
  if (!state.is_normalized(1e-12)) throw ContractError("projector of an unnormalized state");
  return DensityMatrix(Unchecked{}, state.reg(),
                       ComplexMatrix::outer(state.amplitudes(), state.amplitudes()));
}

// --------------------------------------------------------------- unitary

UnitaryOp::UnitaryOp(QubitRegister reg, ComplexMatrix matrix)
    : reg_(std::move(reg)), matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || matrix_.rows() != reg_.dimension()) {
    throw DimensionError("unitary shape does not match register");
  }
  if (!matrix_.is_unitary(1e-12)) throw ContractError("operator is not unitary to 1e-12");
}

UnitaryOp UnitaryOp::identity(QubitRegister reg) {
  const std::size_t dim = reg.dimension();
  return UnitaryOp(std::move(reg), ComplexMatrix::identity(dim));
}

UnitaryOp UnitaryOp::adjoint() const { return UnitaryOp(reg_, matrix_.adjoint()); }

UnitaryOp UnitaryOp::relabeled(QubitRegister reg) const {
  return UnitaryOp(std::move(reg), matrix_);
}

UnitaryOp operator*(const UnitaryOp& a, const UnitaryOp& b) {
  if (!(a.reg() == b.reg())) throw LabelError("unitary product over different registers");
  return UnitaryOp(a.reg(), a.matrix() * b.matrix());
}

StateVector apply(const ComplexMatrix& op, std::span<const std::string> targets,
                  const StateVector& state) {
  const std::size_t n = state.num_qubits();
  const auto slots = state.reg().slots_of(targets);
  const std::size_t sub = std::size_t{1} << slots.size();
  if (!op.is_square() || op.rows() != sub) throw DimensionError("operator size does not match targets");

  const auto in_offsets = slot_offsets(n, slots);
  const auto rest_offsets = slot_offsets(n, complement_slots(n, slots));
  Amplitudes out(state.dimension());
  Amplitudes gathered(sub);
  for (const std::size_t base : rest_offsets) {
    for (std::size_t t = 0; t < sub; ++t) gathered[t] = state[base + in_offsets[t]];
    const Amplitudes mapped = op.apply(gathered);
    for (std::size_t t = 0; t < sub; ++t) out[base + in_offsets[t]] = mapped[t];
  }
  return StateVector(state.reg(), std::move(out));
}

StateVector apply(const UnitaryOp& op, const StateVector& state) {
  return apply(op.matrix(), op.reg().labels(), state);
}

// ------------------------------------------------------ partial operations

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> keep) {
  const std::size_t n = rho.reg().size();
  if (keep.empty()) throw LabelError("partial trace must keep at least one qubit");
  const auto slots = rho.reg().slots_of(keep);
  const auto keep_offsets = slot_offsets(n, slots);
  const auto rest_offsets = slot_offsets(n, complement_slots(n, slots));

  const std::size_t dim = keep_offsets.size();
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Complex acc = 0.0;
      for (const std::size_t e : rest_offsets) acc += m(keep_offsets[r] + e, keep_offsets[c] + e);
      out(r, c) = acc;
    }
  }
  return DensityMatrix(DensityMatrix::Unchecked{},
                       QubitRegister(std::vector<std::string>(keep.begin(), keep.end())),
                       std::move(out));
}

DensityMatrix reduced_density(const StateVector& state, std::span<const std::string> keep) {
  const std::size_t n = state.num_qubits();
  if (keep.empty()) throw LabelError("reduced state must keep at least one qubit");
  if (!state.is_normalized(1e-12)) throw ContractError("reduced state of an unnormalized vector");
  const auto slots = state.reg().slots_of(keep);
  const auto keep_offsets = slot_offsets(n, slots);
  const auto rest_offsets = slot_offsets(n, complement_slots(n, slots));

  const std::size_t dim = keep_offsets.size();
  ComplexMatrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Complex acc = 0.0;
      for (const std::size_t e : rest_offsets) {
        acc += state[keep_offsets[r] + e] * std::conj(state[keep_offsets[c] + e]);
      }
      out(r, c) = acc;
    }
  }
  return DensityMatrix(DensityMatrix::Unchecked{},
                       QubitRegister(std::vector<std::string>(keep.begin(), keep.end())),
                       std::move(out));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::span<const std::string> part) {
  const std::size_t n = rho.reg().size();
  if (part.empty() || part.size() >= n) {
    throw LabelError("partial transpose needs a nonempty proper subset of qubits");
  }
  std::size_t mask = 0;
  for (const std::size_t s : rho.reg().slots_of(part)) mask |= std::size_t{1} << bit_of_slot(n, s);

  const ComplexMatrix& m = rho.matrix();
  const std::size_t dim = m.rows();
  ComplexMatrix out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      out(i, j) = m((i & ~mask) | (j & mask), (j & ~mask) | (i & mask));
    }
  }
  return out;
}

// ---------------------------------------------------------- eigensolvers

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("eigenvalues of a non-square matrix");
  if (!m.is_hermitian(kHermitianTol)) throw ContractError("matrix is not Hermitian to 1e-10");
  const std::size_t n = m.rows();

  // Symmetrize so that tiny input asymmetry cannot stall the sweeps.
  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);

  double total = 0.0;
  for (const auto& x : a.data()) total += std::norm(x);
  const double threshold = 1e-32 * std::max(total, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (off <= threshold) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const Rotation g = jacobi_rotation(a(p, p).real(), a(q, q).real(), a(p, q));
        rotate_columns(a, p, q, g);
        rotate_rows(a, p, q, g);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        rotate_columns(v, p, q, g);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eigen(m).values;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  ComplexMatrix b = m.rows() >= m.cols() ? m : m.adjoint();
  const std::size_t n = b.cols();
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t k = 0; k < b.rows(); ++k) {
          alpha += std::norm(b(k, p));
          beta += std::norm(b(k, q));
          gamma += std::conj(b(k, p)) * b(k, q);
        }
        const double mag = std::abs(gamma);
        if (mag < 1e-300 || mag <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotate_columns(b, p, q, jacobi_rotation(alpha, beta, gamma));
        rotated = true;
      }
    }
    if (!rotated) break;
  }
  std::vector<double> values(n);
  for (std::size_t c = 0; c < n; ++c) {
    double sq = 0.0;
    for (std::size_t k = 0; k < b.rows(); ++k) sq += std::norm(b(k, c));
    values[c] = std::sqrt(sq);
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

std::vector<double> schmidt_coefficients(const StateVector& state,
                                         std::span<const std::string> left) {
  const std::size_t n = state.num_qubits();
  const auto slots = state.reg().slots_of(left);
  if (slots.empty() || slots.size() >= n) {
    throw LabelError("Schmidt split needs a nonempty proper subset of qubits");
  }
  const auto left_offsets = slot_offsets(n, slots);
  const auto right_offsets = slot_offsets(n, complement_slots(n, slots));
  ComplexMatrix reshaped(left_offsets.size(), right_offsets.size());
  for (std::size_t r = 0; r < left_offsets.size(); ++r) {
    for (std::size_t c = 0; c < right_offsets.size(); ++c) {
      reshaped(r, c) = state[left_offsets[r] + right_offsets[c]];
    }
  }
  return singular_values(reshaped);
}

std::size_t schmidt_rank(const StateVector& state, std::span<const std::string> left, double tol) {
  const auto s = schmidt_coefficients(state, left);
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double x) { return x > tol; }));
}

std::size_t operator_schmidt_rank(const ComplexMatrix& op, double tol) {
  if (op.rows() != 4 || op.cols() != 4) throw DimensionError("operator Schmidt rank needs a 4x4 operator");
  // R[(i1 j1), (i2 j2)] = O[(i1 i2), (j1 j2)]
  ComplexMatrix reshuffled(4, 4);
  for (std::size_t i1 = 0; i1 < 2; ++i1) {
    for (std::size_t i2 = 0; i2 < 2; ++i2) {
      for (std::size_t j1 = 0; j1 < 2; ++j1) {
        for (std::size_t j2 = 0; j2 < 2; ++j2) {
          reshuffled(2 * i1 + j1, 2 * i2 + j2) = op(2 * i1 + i2, 2 * j1 + j2);
        }
      }
    }
  }
  const auto s = singular_values(reshuffled);
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double x) { return x > tol; }));
}

// --------------------------------------------------------------- samplers

ComplexMatrix pauli(int index) {
  const Complex i{0.0, 1.0};
  switch (index) {
    case 1: return {{1.0, 0.0}, {0.0, 1.0}};
    case 2: return {{0.0, 1.0}, {1.0, 0.0}};
    case 3: return {{0.0, -i}, {i, 0.0}};
    case 4: return {{1.0, 0.0}, {0.0, -1.0}};
    default: throw ContractError("Pauli index must be in 1..4");
  }
}

UnitaryOp haar_random_unitary(int n_qubits, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_unitary(n_qubits, rng);
}

UnitaryOp haar_random_unitary(int n_qubits, Rng& rng) {
  if (n_qubits < 1) throw ContractError("Haar unitary needs at least one qubit");
  const std::size_t dim = std::size_t{1} << n_qubits;
  const double scale = std::sqrt(0.5);
  ComplexMatrix q(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const double re = rng.normal();
      const double im = rng.normal();
      q(r, c) = Complex{re, im} * scale;
    }
  }
  // Gram-Schmidt twice; R's diagonal is a positive norm, which is the
  // phase convention that makes Q Haar distributed.
  for (std::size_t c = 0; c < dim; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < c; ++k) {
        Complex proj = 0.0;
        for (std::size_t r = 0; r < dim; ++r) proj += std::conj(q(r, k)) * q(r, c);
        for (std::size_t r = 0; r < dim; ++r) q(r, c) -= proj * q(r, k);
      }
    }
    double sq = 0.0;
    for (std::size_t r = 0; r < dim; ++r) sq += std::norm(q(r, c));
    const double inv = 1.0 / std::sqrt(sq);
    for (std::size_t r = 0; r < dim; ++r) q(r, c) *= inv;
  }
  return UnitaryOp(numbered_register(static_cast<std::size_t>(n_qubits)), std::move(q));
}

StateVector haar_random_state(const QubitRegister& reg, Rng& rng) {
  Amplitudes amps(reg.dimension());
  for (auto& a : amps) {
    const double re = rng.normal();
    const double im = rng.normal();
    a = Complex{re, im};
  }
  return StateVector::normalized(reg, std::move(amps));
}

}  // namespace entqc
