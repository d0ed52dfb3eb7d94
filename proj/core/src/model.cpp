#include "kerrneg/model.hpp"

#include <cmath>
#include <string>

#include "kerrneg/errors.hpp"

namespace kerrneg {

namespace {

constexpr cxd kImag{0.0, 1.0};

// sin(omega*t)/omega with the removable singularity handled exactly: the
// branch invariant forces delta = g = 0 whenever omega = 0, so the limit
// value t is exact there. Near zero a short series keeps full precision.
double sin_over_omega(double omega, double t) {
    if (omega == 0.0) return t;
    const double x = omega * t;
    if (std::abs(x) < 1e-8) {
        return t * (1.0 - x * x / 6.0);
    }
    return std::sin(x) / omega;
}

}  // namespace

void validate(const ModelParams& params) {
    if (params.n1 < 0) throw ValidationError("n1 must be a non-negative integer");
    if (params.n2 < 0) throw ValidationError("n2 must be a non-negative integer");
    if (!std::isfinite(params.theta)) throw ValidationError("theta must be finite");
    if (!std::isfinite(params.eta) || params.eta < 0.0)
        throw ValidationError("eta must be finite and >= 0");
    if (!std::isfinite(params.zeta)) throw ValidationError("zeta must be finite");
}

BranchParams branch_excited(const ModelParams& params) {
    validate(params);
    const double n1 = params.n1;
    const double n2 = params.n2;
    BranchParams br;
    br.gamma = 1.0 + n1 + n2 + params.zeta * (n1 * n1 + n2 * n2);
    br.delta = -params.zeta * (n1 + n2);
    br.g = params.eta * std::sqrt((1.0 + n1) * (1.0 + n2));
    br.omega_r = std::hypot(br.delta, br.g);
    return br;
}

BranchParams branch_ground(const ModelParams& params) {
    validate(params);
    const double n1 = params.n1;
    const double n2 = params.n2;
    BranchParams br;
    br.gamma = n1 + n2 - 1.0 +
               params.zeta * ((n1 - 1.0) * (n1 - 1.0) + (n2 - 1.0) * (n2 - 1.0));
    br.delta = params.zeta * (n1 + n2 - 2.0);
    br.g = params.eta * std::sqrt(n1 * n2);
    br.omega_r = std::hypot(br.delta, br.g);
    return br;
}

namespace {

// One branch of the closed form: amplitude staying on the initial basis state
// and amplitude transferred to the partner state, without the theta weight.
struct BranchFactors {
    cxd stay;
    cxd transfer;
};

BranchFactors evolve_branch(const BranchParams& br, double t) {
    const cxd phase = std::exp(-kImag * br.gamma * t);
    if (br.omega_r == 0.0) {
        // Decoupled branch: pure phase rotation.
        return {phase, cxd{0.0, 0.0}};
    }
    const double cosv = std::cos(br.omega_r * t);
    const double s = sin_over_omega(br.omega_r, t);
    return {phase * (cosv - kImag * br.delta * s), phase * (-kImag * br.g * s)};
}

}  // namespace

AmplitudeSet amplitudes_faulted(const ModelParams& params, double t_scaled,
                                FaultInjection fault) {
    validate(params);
    if (!std::isfinite(t_scaled)) throw ValidationError("t must be finite");

    const BranchParams b1 = branch_excited(params);
    BranchParams b2 = branch_ground(params);
    if (fault == FaultInjection::flip_g2_sign) b2.g = -b2.g;

    const BranchFactors f1 = evolve_branch(b1, t_scaled);
    const BranchFactors f2 = evolve_branch(b2, t_scaled);
    const double ct = std::cos(params.theta);
    const double st = std::sin(params.theta);

    AmplitudeSet amps;
    amps.a = ct * f1.stay;
    amps.c = ct * f1.transfer;
    amps.b = st * f2.stay;
    amps.d = st * f2.transfer;
    amps.t_scaled = t_scaled;
    return amps;
}

AmplitudeSet amplitudes(const ModelParams& params, double t_scaled) {
    return amplitudes_faulted(params, t_scaled, FaultInjection::none);
}

namespace {

// Radicands of the published xi symbols, negated (both are <= 0 as printed,
// so xi = i * sqrt(-radicand)). xi1 is kept verbatim, including its cubic
// n2 term; the corrected reading replaces n2^3 by n2^2.
double printed_omega1(const ModelParams& p) {
    const double n1 = p.n1, n2 = p.n2;
    const double e2 = p.eta * p.eta, z2 = p.zeta * p.zeta;
    const double r = e2 + z2 * n1 * n1 + n2 * (e2 + z2 * n2 * n2) +
                     n1 * (e2 * (1.0 + n2) + 2.0 * z2 * n2);
    return std::sqrt(r);
}

PrintedAmplitudes printed_impl(const ModelParams& params, double t,
                               bool strict) {
    validate(params);
    if (!std::isfinite(t)) throw ValidationError("t must be finite");

    const BranchParams b1 = branch_excited(params);
    const BranchParams b2 = branch_ground(params);
    const double n1 = params.n1, n2 = params.n2;
    const double ct = std::cos(params.theta);
    const double st = std::sin(params.theta);

    PrintedAmplitudes out;
    out.t_scaled = t;
    out.branch1_degenerate = printed_omega1(params) == 0.0;
    out.branch2_degenerate = b2.omega_r == 0.0;
    if (strict && (out.branch1_degenerate || out.branch2_degenerate)) {
        throw DegenerateBranchError(
            "published closed form divides by a vanishing branch frequency");
    }

    // Branch 1 carries a and c.
    if (!out.branch1_degenerate) {
        const cxd xi1 = kImag * printed_omega1(params);
        const cxd pre1 = std::exp(-t * (kImag * b1.gamma + xi1));
        const cxd grow1 = std::exp(2.0 * t * xi1);
        out.a = (pre1 * ct *
                 (kImag * (grow1 - 1.0) * params.zeta * (n1 + n2) +
                  xi1 * (grow1 + 1.0))) /
                (2.0 * xi1);
        out.c = -(kImag * pre1 * params.eta * ct *
                  std::sqrt((1.0 + n1) * (1.0 + n2))) /
                (2.0 * xi1);
    } else {
        // Continuous limit: (e^{2t xi}-1)/(2 xi) -> t. The degenerate branch
        // forces eta = 0, so the c numerator vanishes identically.
        const cxd pre1 = std::exp(-kImag * b1.gamma * t);
        out.a = pre1 * ct * (1.0 + kImag * t * params.zeta * (n1 + n2));
        out.c = 0.0;
    }

    // Branch 2 carries b and d.
    if (!out.branch2_degenerate) {
        const cxd xi2 = kImag * b2.omega_r;
        const cxd pre2 = std::exp(-t * (kImag * b2.gamma + xi2));
        const cxd grow2 = std::exp(2.0 * t * xi2);
        out.b = (pre2 * st *
                 (-kImag * (grow2 - 1.0) * params.zeta * (n1 + n2 - 2.0) +
                  xi2 * (grow2 + 1.0))) /
                (2.0 * xi2);
        out.d = -(kImag * pre2 * params.eta * st * (grow2 - 1.0) *
                  std::sqrt(n1 * n2)) /
                (2.0 * xi2);
    } else {
        const cxd pre2 = std::exp(-kImag * b2.gamma * t);
        out.b = pre2 * st * (1.0 - kImag * t * params.zeta * (n1 + n2 - 2.0));
        out.d = -kImag * pre2 * params.eta * st * t * std::sqrt(n1 * n2);
    }

    const double norm_sq = std::norm(out.a) + std::norm(out.b) +
                           std::norm(out.c) + std::norm(out.d);
    out.norm_defect = std::abs(norm_sq - 1.0);
    return out;
}

}  // namespace

PrintedAmplitudes printed_amplitudes(const ModelParams& params, double t_scaled) {
    return printed_impl(params, t_scaled, /*strict=*/false);
}

PrintedAmplitudes printed_amplitudes_strict(const ModelParams& params,
                                            double t_scaled) {
    return printed_impl(params, t_scaled, /*strict=*/true);
}

}  // namespace kerrneg
