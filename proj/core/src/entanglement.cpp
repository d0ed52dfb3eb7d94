#include "kerrneg/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "kerrneg/errors.hpp"

namespace kerrneg {

ModeDensityMatrix mode_density(const AmplitudeSet& amps, int n1, int n2) {
    ModeDensityMatrix rho;
    rho.n1 = n1;
    rho.n2 = n2;
    // Tracing the atom leaves |phi_up><phi_up| + |phi_down><phi_down| with
    // phi_up = a|n1,n2> + d|n1-1,n2-1> and phi_down = b|n1,n2> + c|n1+1,n2+1>;
    // the up/down cross terms vanish.
    rho.entries(0, 0) = std::norm(amps.d);
    rho.entries(4, 4) = std::norm(amps.a) + std::norm(amps.b);
    rho.entries(8, 8) = std::norm(amps.c);
    rho.entries(0, 4) = amps.d * std::conj(amps.a);
    rho.entries(4, 0) = amps.a * std::conj(amps.d);
    rho.entries(4, 8) = amps.b * std::conj(amps.c);
    rho.entries(8, 4) = amps.c * std::conj(amps.b);
    return rho;
}

Matrix9 partial_transpose(const Matrix9& m, Mode mode) {
    Matrix9 out;
    for (int a1 = 0; a1 < 3; ++a1)
        for (int b1 = 0; b1 < 3; ++b1)
            for (int a2 = 0; a2 < 3; ++a2)
                for (int b2 = 0; b2 < 3; ++b2) {
                    const cxd v = m(3 * a1 + b1, 3 * a2 + b2);
                    if (mode == Mode::one) {
                        out(3 * a2 + b1, 3 * a1 + b2) = v;
                    } else {
                        out(3 * a1 + b2, 3 * a2 + b1) = v;
                    }
                }
    return out;
}

Matrix9 partial_transpose(const ModeDensityMatrix& rho, Mode mode) {
    return partial_transpose(rho.entries, mode);
}

namespace {

constexpr double kOffNormThreshold = 1e-13;
constexpr int kMaxSweeps = 100;
// Pivots below this magnitude are skipped; n^2 of them contribute far less
// than the convergence threshold to the off-diagonal norm.
constexpr double kPivotSkip = 1e-30;

double offdiagonal_norm(const Eigen::MatrixXcd& a) {
    double sum = 0.0;
    for (Eigen::Index p = 0; p < a.rows(); ++p)
        for (Eigen::Index q = p + 1; q < a.cols(); ++q) sum += std::norm(a(p, q));
    return std::sqrt(2.0 * sum);
}

// One complex Jacobi rotation zeroing a(p,q). The pivot's phase is absorbed
// into column q, reducing the 2x2 block to the real symmetric case.
void jacobi_rotate(Eigen::MatrixXcd& a, Eigen::Index p, Eigen::Index q) {
    const cxd apq = a(p, q);
    const double r = std::abs(apq);
    if (r < kPivotSkip) return;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t =
        (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const cxd phase = apq / r;
    const cxd phase_conj = std::conj(phase);

    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const cxd akp = a(k, p);
        const cxd akq = a(k, q);
        const cxd new_kp = c * akp - s * phase_conj * akq;
        const cxd new_kq = s * akp + c * phase_conj * akq;
        a(k, p) = new_kp;
        a(p, k) = std::conj(new_kp);
        a(k, q) = new_kq;
        a(q, k) = std::conj(new_kq);
    }
    a(p, p) = c * c * app + s * s * aqq - 2.0 * c * s * r;
    a(q, q) = s * s * app + c * c * aqq + 2.0 * c * s * r;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols())
        throw EigensolverError("hermitian_eigenvalues: matrix must be square");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw EigensolverError(
            "hermitian_eigenvalues: input not Hermitian within 1e-10");

    // Exactly Hermitian working copy.
    Eigen::MatrixXcd a = (m + m.adjoint()) / 2.0;
    const Eigen::Index n = a.rows();

    bool converged = offdiagonal_norm(a) <= kOffNormThreshold;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (Eigen::Index p = 0; p + 1 < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) jacobi_rotate(a, p, q);
        converged = offdiagonal_norm(a) <= kOffNormThreshold;
    }
    if (!converged)
        throw EigensolverError("hermitian_eigenvalues: no convergence after " +
                               std::to_string(kMaxSweeps) + " sweeps");

    std::vector<double> eigenvalues(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) eigenvalues[i] = a(i, i).real();
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return eigenvalues;
}

NegativityResult negativity(const ModeDensityMatrix& rho) {
    const Matrix9 pt = partial_transpose(rho);
    const std::vector<double> eigs = hermitian_eigenvalues(pt);

    NegativityResult result;
    std::copy(eigs.begin(), eigs.end(), result.pt_eigenvalues.begin());
    for (double lambda : eigs) result.value += std::max(0.0, -lambda);
    result.closed_form_value =
        std::abs(rho.entries(0, 4)) + std::abs(rho.entries(4, 8));
    result.eigen_closed_gap = std::abs(result.value - result.closed_form_value);
    return result;
}

double negativity_closed_form(const AmplitudeSet& amps) {
    return std::abs(amps.a * amps.d) + std::abs(amps.b * amps.c);
}

}  // namespace kerrneg
