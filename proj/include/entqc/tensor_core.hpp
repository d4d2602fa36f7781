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

#pragma once

/**
 * @file
 * Dense complex linear algebra over labeled qubit registers.
 *
 * Basis convention: slot 0 of a register is the most significant bit of the
 * basis index, so for two qubits |i,j> sits at index 2i+j.
 */

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "entqc/errors.hpp"

namespace entqc {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

class Rng;

/// Row-major dense complex matrix.
class ComplexMatrix {
 public:
  /// Zero matrix; both dimensions must be positive.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major `entries`; rejects size mismatch and non-finite values.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  /// y = M x
  Amplitudes apply(std::span<const Complex> x) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ordered list of distinct qubit names. Slot order fixes the tensor layout.
class QubitRegister {
 public:
  explicit QubitRegister(std::vector<std::string> labels);
  QubitRegister(std::initializer_list<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  std::size_t dimension() const { return std::size_t{1} << labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t slot) const { return labels_.at(slot); }

  bool contains(const std::string& label) const;
  /// Slot of `label`; throws LabelError when absent.
  std::size_t slot_of(const std::string& label) const;
  std::vector<std::size_t> slots_of(std::span<const std::string> labels) const;

  /// Concatenation; labels must stay distinct.
  QubitRegister operator+(const QubitRegister& other) const;

  friend bool operator==(const QubitRegister&, const QubitRegister&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Pure state over a labeled register. Normalization is not forced here;
/// use `normalized` when the caller claims a unit vector.
class StateVector {
 public:
  StateVector(QubitRegister reg, Amplitudes amplitudes);

  /// Rescales to unit norm; throws ContractError on a zero vector.
  static StateVector normalized(QubitRegister reg, Amplitudes amplitudes);
  /// Computational basis state |index>.
  static StateVector basis(QubitRegister reg, std::size_t index);

  const QubitRegister& reg() const { return reg_; }
  std::size_t num_qubits() const { return reg_.size(); }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  bool is_normalized(double tol = 1e-12) const;
  StateVector relabeled(QubitRegister reg) const;

 private:
  QubitRegister reg_;
  Amplitudes amplitudes_;
};

/// Tensor product; the registers are concatenated.
StateVector tensor(const StateVector& a, const StateVector& b);
Complex inner(const StateVector& bra, const StateVector& ket);

/// Hermitian, unit-trace, positive semidefinite operator over a register.
class DensityMatrix {
 public:
  /// Validates Hermiticity and unit trace (1e-12) and eigenvalues >= -1e-10.
  DensityMatrix(QubitRegister reg, ComplexMatrix matrix);

  static DensityMatrix from_pure(const StateVector& state);

  const QubitRegister& reg() const { return reg_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dimension() const { return matrix_.rows(); }

 private:
  struct Unchecked {};
  DensityMatrix(Unchecked, QubitRegister reg, ComplexMatrix matrix);

  friend DensityMatrix partial_trace(const DensityMatrix&, std::span<const std::string>);
  friend DensityMatrix reduced_density(const StateVector&, std::span<const std::string>);

  QubitRegister reg_;
  ComplexMatrix matrix_;
};

/// Square unitary over a register, certified to 1e-12.
class UnitaryOp {
 public:
  UnitaryOp(QubitRegister reg, ComplexMatrix matrix);

  static UnitaryOp identity(QubitRegister reg);

  const QubitRegister& reg() const { return reg_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t num_qubits() const { return reg_.size(); }

  UnitaryOp adjoint() const;
  UnitaryOp relabeled(QubitRegister reg) const;

 private:
  QubitRegister reg_;
  ComplexMatrix matrix_;
};

/// Operator product a*b; registers must match.
UnitaryOp operator*(const UnitaryOp& a, const UnitaryOp& b);

/// Applies `op` to the qubits named by `targets` (in op slot order).
/// Unnamed qubits are untouched.
StateVector apply(const ComplexMatrix& op, std::span<const std::string> targets,
                  const StateVector& state);
/// Applies a unitary to the qubits its own register names.
StateVector apply(const UnitaryOp& op, const StateVector& state);

/// Reduced state on `keep` (output register follows the order given).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> keep);
/// Same as partial_trace(from_pure(state), keep) without forming the full projector.
DensityMatrix reduced_density(const StateVector& state, std::span<const std::string> keep);

/// Transposes the tensor factors named in `part`; the rest are untouched.
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::span<const std::string> part);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic Jacobi diagonalization. Throws ContractError unless Hermitian to 1e-10.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Singular values (descending) by one-sided Jacobi.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Schmidt coefficients of `state` across `left` | rest.
std::vector<double> schmidt_coefficients(const StateVector& state,
                                         std::span<const std::string> left);
std::size_t schmidt_rank(const StateVector& state, std::span<const std::string> left,
                         double tol = 1e-10);

/// Operator Schmidt rank of a two-qubit operator across its two qubits.
/// Rank 1 means the operator is a product of one-qubit operators.
std::size_t operator_schmidt_rank(const ComplexMatrix& op, double tol = 1e-10);

/// |<a|b>|^2. Throws DimensionError if the sizes differ.
double fidelity_pure(const StateVector& a, const StateVector& b);

/// Pauli operator with index 1..4 -> I, X, Y, Z.
ComplexMatrix pauli(int index);

/// Haar-distributed unitary on `n_qubits`, labeled q0..q{n-1}.
UnitaryOp haar_random_unitary(int n_qubits, std::uint64_t seed);
UnitaryOp haar_random_unitary(int n_qubits, Rng& rng);
/// Haar-distributed unit vector on `reg`.
StateVector haar_random_state(const QubitRegister& reg, Rng& rng);

/// Default q0..q{n-1} register.
QubitRegister numbered_register(std::size_t n);

}  // namespace entqc
