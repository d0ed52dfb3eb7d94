#pragma once

#include <Eigen/Dense>
#include <vector>

#include "kerrneg/model.hpp"

namespace kerrneg {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// max |m - m^dagger| entrywise.
double hermiticity_defect(const CMatrix& m);

enum class Atom { up, down };

/// One basis state |m1, m2, level>. Fock value -1 marks the zero-coupled
/// placeholder slot of the four-state basis when a mode starts in the vacuum.
struct BasisLabel {
    int m1 = 0;
    int m2 = 0;
    Atom level = Atom::up;

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// State vector on an explicitly labeled basis.
struct StateVector {
    CVector amplitudes;
    std::vector<BasisLabel> labels;

    int dim() const { return static_cast<int>(amplitudes.size()); }
    double norm() const { return amplitudes.norm(); }
};

/// Ordered basis of the invariant subspace:
/// {|n1,n2,up>, |n1,n2,down>, |n1+1,n2+1,down>, |n1-1,n2-1,up>}.
std::vector<BasisLabel> subspace_basis(const ModelParams& params);

/// Hamiltonian restricted to the four-state subspace, in units of the mode
/// frequency. Slot 4 is retained with zero coupling when n1 = 0 or n2 = 0.
CMatrix build_subspace_hamiltonian(const ModelParams& params);

/// Basis of the truncated product space {0..cutoff1} x {0..cutoff2} x
/// {up,down}; index = (m1*(cutoff2+1) + m2)*2 + (level == down).
std::vector<BasisLabel> truncated_basis(int cutoff1, int cutoff2);

/// Full Hamiltonian on the truncated product space, built from ladder-operator
/// matrix elements. Throws CutoffError unless cutoff1 >= n1+2 and
/// cutoff2 >= n2+2 (the invariant subspace must be strictly interior).
CMatrix build_truncated_hamiltonian(const ModelParams& params, int cutoff1,
                                    int cutoff2);

/// psi(T) = exp(-i H T) psi0 via full Hermitian eigendecomposition (not
/// step-wise integration). Throws ValidationError on dimension mismatch and
/// EigensolverError if h is not Hermitian.
StateVector evolve(const CMatrix& h, const StateVector& psi0, double t_scaled);

/// Ground truth for the closed form: the initial superposition evolved in the
/// four-state subspace by eigendecomposition.
AmplitudeSet amplitudes_oracle(const ModelParams& params, double t_scaled);

/// Probability outside the four-state subspace after evolving in the full
/// truncated space; analytically zero. Large spaces are evolved exactly on
/// the connected component of the initial support (the Hamiltonian's sparsity
/// graph decomposes the evolution; amplitudes off the component stay zero),
/// small ones by dense full-space eigendecomposition.
double subspace_leakage(const ModelParams& params, double t_scaled, int cutoff1,
                        int cutoff2);

}  // namespace kerrneg
