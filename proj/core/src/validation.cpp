#include "kerrneg/validation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "kerrneg/entanglement.hpp"
#include "kerrneg/errors.hpp"
#include "kerrneg/oracle.hpp"

namespace kerrneg {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }

    // Draw ranges of the cross-check suite.
    ModelParams params() {
        return {uniform_int(0, 100), uniform_int(0, 100), uniform(0.0, kPi),
                uniform(0.0, 5.0), uniform(-20.0, 20.0)};
    }

    AmplitudeSet unit_vector4() {
        std::normal_distribution<double> normal;
        AmplitudeSet amps;
        amps.a = {normal(gen), normal(gen)};
        amps.b = {normal(gen), normal(gen)};
        amps.c = {normal(gen), normal(gen)};
        amps.d = {normal(gen), normal(gen)};
        const double n = std::sqrt(amps.norm_sq());
        amps.a /= n; amps.b /= n; amps.c /= n; amps.d /= n;
        return amps;
    }

    Eigen::MatrixXcd hermitian(int dim) {
        std::normal_distribution<double> normal;
        Eigen::MatrixXcd m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m(i, j) = cxd{normal(gen), normal(gen)};
        return (m + m.adjoint()).eval() / 2.0;
    }
};

double component_distance(const AmplitudeSet& x, const AmplitudeSet& y) {
    return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b),
                     std::abs(x.c - y.c), std::abs(x.d - y.d)});
}

using Check = double (*)(Rng&, const ValidationOptions&);

PropertyResult run_property(const std::string& name, double threshold,
                            const ValidationOptions& options,
                            double (*check)(Rng&, const ValidationOptions&)) {
    // Every property draws from its own stream so adding or reordering
    // properties never changes another one's samples.
    Rng rng(options.seed ^ std::hash<std::string>{}(name));
    PropertyResult result{name, check(rng, options), threshold, false};
    result.passed = result.max_violation <= threshold;
    return result;
}

// --- model ------------------------------------------------------------------

double check_normalization(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.normalization_draws; ++i) {
        const AmplitudeSet amps =
            amplitudes_faulted(rng.params(), rng.uniform(0.0, 20.0), options.fault);
        worst = std::max(worst, std::abs(amps.norm_sq() - 1.0));
    }
    return worst;
}

double check_initial_condition(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.draws; ++i) {
        const ModelParams p = rng.params();
        const AmplitudeSet amps = amplitudes_faulted(p, 0.0, options.fault);
        worst = std::max({worst, std::abs(amps.a - std::cos(p.theta)),
                          std::abs(amps.b - std::sin(p.theta)), std::abs(amps.c),
                          std::abs(amps.d)});
    }
    return worst;
}

double check_decoupling(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.draws; ++i) {
        ModelParams p = rng.params();
        p.eta = 0.0;
        const AmplitudeSet amps =
            amplitudes_faulted(p, rng.uniform(0.0, 20.0), options.fault);
        worst = std::max({worst, std::abs(amps.c), std::abs(amps.d),
                          std::abs(std::abs(amps.a) - std::abs(std::cos(p.theta))),
                          std::abs(std::abs(amps.b) - std::abs(std::sin(p.theta)))});
    }
    return worst;
}

double check_theta_factorization(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.draws; ++i) {
        ModelParams p = rng.params();
        const double t = rng.uniform(0.0, 10.0);
        p.theta = 0.4;
        const AmplitudeSet lhs = amplitudes_faulted(p, t, options.fault);
        p.theta = 1.1;
        const AmplitudeSet rhs = amplitudes_faulted(p, t, options.fault);
        // |a|, |c| scale with |cos theta|; |b|, |d| with |sin theta|.
        worst = std::max(
            {worst,
             std::abs(std::abs(lhs.a) / std::cos(0.4) - std::abs(rhs.a) / std::cos(1.1)),
             std::abs(std::abs(lhs.c) / std::cos(0.4) - std::abs(rhs.c) / std::cos(1.1)),
             std::abs(std::abs(lhs.b) / std::sin(0.4) - std::abs(rhs.b) / std::sin(1.1)),
             std::abs(std::abs(lhs.d) / std::sin(0.4) - std::abs(rhs.d) / std::sin(1.1))});
    }
    return worst;
}

// --- model vs oracle ---------------------------------------------------------

double check_oracle_equivalence(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.draws; ++i) {
        const ModelParams p = rng.params();
        const double t = rng.uniform(0.0, 10.0);
        worst = std::max(worst,
                         component_distance(amplitudes_faulted(p, t, options.fault),
                                            amplitudes_oracle(p, t)));
    }
    return worst;
}

double check_branch_block_gap(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.draws; ++i) {
        const ModelParams p = rng.params();
        const CMatrix h = build_subspace_hamiltonian(p);
        auto half_gap = [&](int i1, int i2) {
            Eigen::Matrix2cd block;
            block << h(i1, i1), h(i1, i2), h(i2, i1), h(i2, i2);
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(block);
            return (es.eigenvalues()(1) - es.eigenvalues()(0)) / 2.0;
        };
        const BranchParams b1 = branch_excited(p);
        const BranchParams b2 = branch_ground(p);
        worst = std::max({worst,
                          std::abs(half_gap(0, 2) - b1.omega_r) /
                              std::max(1.0, b1.omega_r),
                          std::abs(half_gap(1, 3) - b2.omega_r) /
                              std::max(1.0, b2.omega_r)});
    }
    return worst;
}

double check_excited_block_spectrum(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.draws; ++i) {
        const ModelParams p = rng.params();
        const CMatrix h = build_subspace_hamiltonian(p);
        Eigen::Matrix2cd block;
        block << h(0, 0), h(0, 2), h(2, 0), h(2, 2);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(block);
        const BranchParams b1 = branch_excited(p);
        const double scale = std::max(1.0, std::abs(b1.gamma) + b1.omega_r);
        worst = std::max(
            {worst,
             std::abs(es.eigenvalues()(0) - (b1.gamma - b1.omega_r)) / scale,
             std::abs(es.eigenvalues()(1) - (b1.gamma + b1.omega_r)) / scale});
    }
    return worst;
}

// --- oracle -----------------------------------------------------------------

double check_unitarity(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    const int reps = std::max(10, options.draws / 4);
    for (int i = 0; i < reps; ++i) {
        const int dim = rng.uniform_int(2, 12);
        const Eigen::MatrixXcd h = rng.hermitian(dim);
        StateVector psi;
        psi.amplitudes = CVector::Zero(dim);
        for (int k = 0; k < dim; ++k)
            psi.amplitudes(k) = cxd{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        psi.amplitudes.normalize();
        psi.labels.resize(dim);
        const StateVector evolved = evolve(h, psi, rng.uniform(0.0, 10.0));
        worst = std::max(worst, std::abs(evolved.norm() - 1.0));
    }
    return worst;
}

double check_composition(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    const int reps = std::max(10, options.draws / 4);
    for (int i = 0; i < reps; ++i) {
        const int dim = rng.uniform_int(2, 10);
        const Eigen::MatrixXcd h = rng.hermitian(dim);
        StateVector psi;
        psi.amplitudes = CVector::Zero(dim);
        for (int k = 0; k < dim; ++k)
            psi.amplitudes(k) = cxd{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        psi.amplitudes.normalize();
        psi.labels.resize(dim);
        const double t1 = rng.uniform(0.0, 5.0);
        const double t2 = rng.uniform(0.0, 5.0);
        const StateVector two_step = evolve(h, evolve(h, psi, t1), t2);
        const StateVector one_step = evolve(h, psi, t1 + t2);
        worst = std::max(worst, (two_step.amplitudes - one_step.amplitudes)
                                    .cwiseAbs()
                                    .maxCoeff());
    }
    return worst;
}

double check_truncated_restriction(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    const int reps = std::max(10, options.draws / 4);
    for (int i = 0; i < reps; ++i) {
        ModelParams p = rng.params();
        p.n1 = rng.uniform_int(0, 4);
        p.n2 = rng.uniform_int(0, 4);
        const int c1 = p.n1 + 2 + rng.uniform_int(0, 2);
        const int c2 = p.n2 + 2 + rng.uniform_int(0, 2);
        const CMatrix full = build_truncated_hamiltonian(p, c1, c2);
        const CMatrix sub = build_subspace_hamiltonian(p);
        const auto basis = subspace_basis(p);
        auto index_of = [&](const BasisLabel& label) {
            return (label.m1 * (c2 + 1) + label.m2) * 2 +
                   (label.level == Atom::down ? 1 : 0);
        };
        for (int r = 0; r < 4; ++r) {
            if (basis[r].m1 < 0 || basis[r].m2 < 0) continue;  // placeholder
            for (int c = 0; c < 4; ++c) {
                if (basis[c].m1 < 0 || basis[c].m2 < 0) continue;
                worst = std::max(worst, std::abs(full(index_of(basis[r]),
                                                      index_of(basis[c])) -
                                                 sub(r, c)));
            }
        }
        worst = std::max(worst, hermiticity_defect(full));
    }
    return worst;
}

double check_leakage(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.draws; ++i) {
        const ModelParams p = rng.params();
        const double t = rng.uniform(0.0, 10.0);
        worst = std::max(worst, subspace_leakage(p, t, p.n1 + 3, p.n2 + 3));
    }
    return worst;
}

// --- entanglement ------------------------------------------------------------

double check_density_structure(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.draws; ++i) {
        const ModelParams p = rng.params();
        const AmplitudeSet amps =
            amplitudes_faulted(p, rng.uniform(0.0, 10.0), options.fault);
        const ModeDensityMatrix rho = mode_density(amps, p.n1, p.n2);
        const Eigen::MatrixXcd m = rho.entries;
        worst = std::max(worst, (m - m.adjoint()).cwiseAbs().maxCoeff());
        worst = std::max(worst, std::abs(m.trace().real() - 1.0));
        // Off-pattern entries must be identically zero.
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 9; ++c) {
                const bool allowed =
                    (r == c && (r == 0 || r == 4 || r == 8)) ||
                    (r == 0 && c == 4) || (r == 4 && c == 0) ||
                    (r == 4 && c == 8) || (r == 8 && c == 4);
                if (!allowed) worst = std::max(worst, std::abs(m(r, c)));
            }
    }
    return worst;
}

double check_density_spectrum(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.draws; ++i) {
        const ModelParams p = rng.params();
        const AmplitudeSet amps =
            amplitudes_faulted(p, rng.uniform(0.0, 10.0), options.fault);
        const ModeDensityMatrix rho = mode_density(amps, p.n1, p.n2);
        const std::vector<double> eigs = hermitian_eigenvalues(rho.entries);
        worst = std::max(worst, std::max(0.0, -eigs.front()));  // PSD
        worst = std::max(worst, std::abs(eigs[6]));  // rank <= 2: third largest ~ 0
    }
    return worst;
}

double check_partial_transpose_structure(Rng& rng,
                                         const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.draws; ++i) {
        const AmplitudeSet amps = rng.unit_vector4();
        const ModeDensityMatrix rho = mode_density(amps, 1, 1);
        const Matrix9 pt = partial_transpose(rho);
        worst = std::max(worst,
                         (partial_transpose(pt, Mode::one) - rho.entries)
                             .cwiseAbs()
                             .maxCoeff());
        worst = std::max(worst, std::abs((pt.trace() - rho.entries.trace())));
        worst = std::max(
            worst, (Eigen::MatrixXcd(pt) - Eigen::MatrixXcd(pt).adjoint())
                       .cwiseAbs()
                       .maxCoeff());
        // Swapping which mode is transposed must not change the negativity.
        auto neg_of = [](const Eigen::MatrixXcd& m) {
            double neg = 0.0;
            for (double lambda : hermitian_eigenvalues(m))
                neg += std::max(0.0, -lambda);
            return neg;
        };
        worst = std::max(worst, std::abs(neg_of(pt) -
                                         neg_of(partial_transpose(rho, Mode::two))));
    }
    return worst;
}

double check_eigensolver_sum_rules(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.draws; ++i) {
        const Eigen::MatrixXcd m = rng.hermitian(9);
        const std::vector<double> eigs = hermitian_eigenvalues(m);
        double sum = 0.0, sum_sq = 0.0;
        for (double lambda : eigs) {
            sum += lambda;
            sum_sq += lambda * lambda;
        }
        worst = std::max(worst, std::abs(sum - m.trace().real()));
        worst = std::max(worst, std::abs(sum_sq - m.squaredNorm()));
    }
    return worst;
}

double check_negativity_dual_route(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.unit_vector_draws; ++i) {
        const AmplitudeSet amps = rng.unit_vector4();
        const NegativityResult res = negativity(mode_density(amps, 1, 1));
        worst = std::max(worst, std::abs(res.value - negativity_closed_form(amps)));
        worst = std::max(worst, res.eigen_closed_gap);
    }
    return worst;
}

double check_negativity_bound(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.unit_vector_draws; ++i) {
        const AmplitudeSet amps = rng.unit_vector4();
        worst = std::max(worst, negativity_closed_form(amps) - 0.5);
    }
    return std::max(0.0, worst);
}

double check_theta_structure(Rng& rng, const ValidationOptions& options) {
    double worst = 0.0;
    for (int i = 0; i < options.draws; ++i) {
        ModelParams p = rng.params();
        const double t = rng.uniform(0.0, 10.0);
        auto neg_at = [&](double theta) {
            ModelParams q = p;
            q.theta = theta;
            return negativity_closed_form(amplitudes_faulted(q, t, options.fault));
        };
        worst = std::max(worst, std::abs(neg_at(p.theta) - neg_at(p.theta + kPi / 2)));
        worst = std::max(worst, neg_at(0.0));
        worst = std::max(worst, neg_at(kPi / 2));
        ModelParams q = p;
        q.eta = 0.0;
        worst = std::max(worst,
                         negativity_closed_form(amplitudes_faulted(q, t, options.fault)));
    }
    return worst;
}

}  // namespace

std::vector<PropertyResult> run_validation_suite(const ValidationOptions& options) {
    if (options.draws < 1)
        throw ValidationError("samples: validation needs at least 1 draw");
    if (options.normalization_draws < 1 || options.unit_vector_draws < 1)
        throw ValidationError("samples: validation needs at least 1 draw");

    std::vector<PropertyResult> results;
    auto run = [&](const std::string& name, double threshold, Check check) {
        results.push_back(run_property(name, threshold, options, check));
    };

    run("amplitude normalization", 1e-12, check_normalization);
    run("initial condition", 1e-15, check_initial_condition);
    run("eta=0 decoupling", 1e-12, check_decoupling);
    run("theta factorization", 1e-12, check_theta_factorization);
    run("closed form vs brute force", 1e-8, check_oracle_equivalence);
    run("branch rabi vs block gap", 1e-10, check_branch_block_gap);
    run("excited block spectrum", 1e-10, check_excited_block_spectrum);
    run("evolution unitarity", 1e-12, check_unitarity);
    run("evolution composition", 1e-10, check_composition);
    run("truncated restriction", 1e-12, check_truncated_restriction);
    run("subspace leakage", 1e-10, check_leakage);
    run("density hermiticity/trace/pattern", 1e-12, check_density_structure);
    run("density PSD and rank", 1e-10, check_density_spectrum);
    run("partial transpose structure", 1e-10, check_partial_transpose_structure);
    run("eigensolver sum rules", 1e-10, check_eigensolver_sum_rules);
    run("negativity dual route", 1e-10, check_negativity_dual_route);
    run("negativity bound", 1e-10, check_negativity_bound);
    run("theta periodicity and zeros", 1e-12, check_theta_structure);
    return results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const PropertyResult& r) { return r.passed; });
}

}  // namespace kerrneg
