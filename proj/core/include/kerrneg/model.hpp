#pragma once

#include <complex>

namespace kerrneg {

using cxd = std::complex<double>;

/// Dimensionless configuration of the two-mode cavity + two-level atom, in
/// units of the common mode frequency (both modes share one frequency and the
/// atomic transition sits at twice that, so no frequency fields appear here).
///
///   n1, n2  initial photon numbers of the two modes
///   theta   atomic superposition angle (radians): cos(theta) excited,
///           sin(theta) ground
///   eta     atom-field coupling over mode frequency, >= 0
///   zeta    Kerr coefficient over mode frequency (sign is physical)
struct ModelParams {
    int n1 = 0;
    int n2 = 0;
    double theta = 0.0;
    double eta = 0.0;
    double zeta = 0.0;
};

/// Throws ValidationError naming the offending field.
void validate(const ModelParams& params);

/// Rabi data of one two-state branch: mean phase rate, half-detuning,
/// coupling, and effective Rabi frequency omega_r = sqrt(delta^2 + g^2).
struct BranchParams {
    double gamma = 0.0;
    double delta = 0.0;
    double g = 0.0;
    double omega_r = 0.0;
};

/// Branch coupling |n1,n2,up> <-> |n1+1,n2+1,down>.
BranchParams branch_excited(const ModelParams& params);

/// Branch coupling |n1,n2,down> <-> |n1-1,n2-1,up>. Decoupled (g = 0) when
/// either mode starts in the vacuum.
BranchParams branch_ground(const ModelParams& params);

/// The four amplitudes of the invariant subspace at scaled time T, ordered as
/// {|n1,n2,up>, |n1,n2,down>, |n1+1,n2+1,down>, |n1-1,n2-1,up>}.
struct AmplitudeSet {
    cxd a{};  ///< on |n1,n2,up>
    cxd b{};  ///< on |n1,n2,down>
    cxd c{};  ///< on |n1+1,n2+1,down>
    cxd d{};  ///< on |n1-1,n2-1,up>
    double t_scaled = 0.0;

    double norm_sq() const {
        return std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    }
};

/// Closed-form time evolution of the initial superposition
/// cos(theta)|n1,n2,up> + sin(theta)|n1,n2,down>. Unit norm by construction;
/// d is exactly zero when n1 = 0 or n2 = 0.
AmplitudeSet amplitudes(const ModelParams& params, double t_scaled);

/// Test-of-tests fault injection: deliberately corrupt the closed form so the
/// cross-check against the brute-force engine must fail.
enum class FaultInjection { none, flip_g2_sign };

AmplitudeSet amplitudes_faulted(const ModelParams& params, double t_scaled,
                                FaultInjection fault);

/// The published closed form evaluated literally, kept for auditing. Its c
/// component has constant magnitude (the oscillatory factor present in d is
/// missing from the published c), so the norm is generally not 1;
/// norm_defect records |norm^2 - 1|.
struct PrintedAmplitudes {
    cxd a{}, b{}, c{}, d{};
    double t_scaled = 0.0;
    double norm_defect = 0.0;
    /// True when the branch divisor vanished and the value is the continuous
    /// limit of the published expression instead of a literal evaluation.
    bool branch1_degenerate = false;
    bool branch2_degenerate = false;
};

/// Total evaluator: degenerate branches are evaluated by their continuous
/// limit and flagged.
PrintedAmplitudes printed_amplitudes(const ModelParams& params, double t_scaled);

/// Literal evaluator: throws DegenerateBranchError when either branch's
/// effective Rabi frequency vanishes (the published form divides by it).
PrintedAmplitudes printed_amplitudes_strict(const ModelParams& params,
                                            double t_scaled);

}  // namespace kerrneg
