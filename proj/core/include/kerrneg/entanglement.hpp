#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "kerrneg/model.hpp"

namespace kerrneg {

using Matrix9 = Eigen::Matrix<cxd, 9, 9>;

/// Reduced state of the two modes on the 3x3 Fock window around (n1, n2).
/// Flattened index k = 3*alpha + beta with alpha, beta in {0,1,2} maps to the
/// Fock pair (n1-1+alpha, n2-1+beta); k = 4 is the center state |n1,n2>.
/// When n1 = 0 or n2 = 0 the rows/columns for Fock value -1 are retained and
/// guaranteed zero.
struct ModeDensityMatrix {
    Matrix9 entries = Matrix9::Zero();
    int n1 = 0;
    int n2 = 0;
};

/// Atom-traced density matrix of the two modes for a unit-norm amplitude set.
/// Nonzero entries sit only at (0,0), (4,4), (8,8), (0,4), (4,0), (4,8), (8,4).
ModeDensityMatrix mode_density(const AmplitudeSet& amps, int n1, int n2);

enum class Mode { one, two };

/// Transpose of one mode's indices in the flattened qutrit x qutrit basis.
Matrix9 partial_transpose(const Matrix9& m, Mode mode = Mode::one);
Matrix9 partial_transpose(const ModeDensityMatrix& rho, Mode mode = Mode::one);

/// In-house eigensolver for dense complex Hermitian matrices: cyclic Jacobi
/// rotations, row-major upper-triangle sweep order, off-diagonal Frobenius
/// norm threshold 1e-13, sweep cap 100. Returns ascending eigenvalues.
/// Throws EigensolverError on non-Hermitian input (defect > 1e-10) or
/// non-convergence at the sweep cap.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m);

struct NegativityResult {
    /// Sum of |negative eigenvalues| of the partial transpose.
    double value = 0.0;
    /// Ascending spectrum of the partial transpose.
    std::array<double, 9> pt_eigenvalues{};
    /// Analytic shortcut |rho(0,4)| + |rho(4,8)| = |a d| + |b c|.
    double closed_form_value = 0.0;
    /// |value - closed_form_value|.
    double eigen_closed_gap = 0.0;
};

/// Negativity of the two-mode state via partial transpose + eigensolver,
/// together with the analytic shortcut read off the coherences.
NegativityResult negativity(const ModeDensityMatrix& rho);

/// |a d| + |b c| directly from the amplitudes.
double negativity_closed_form(const AmplitudeSet& amps);

}  // namespace kerrneg
