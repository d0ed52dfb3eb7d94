#include "kerrneg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kerrneg/errors.hpp"

namespace kerrneg {

namespace {

constexpr cxd kImag{0.0, 1.0};

// Diagonal matrix element of the scaled Hamiltonian at |m1, m2, level>:
// photon energies, atomic term (+1 up / -1 down at twice the mode frequency),
// and the Kerr self-interaction m(m-1) per mode. Evaluated as a polynomial so
// the placeholder slot (Fock value -1) gets the analytic continuation.
double diagonal_energy(const ModelParams& p, int m1, int m2, Atom level) {
    const double f1 = m1, f2 = m2;
    const double atom = (level == Atom::up) ? 1.0 : -1.0;
    return f1 + f2 + atom + p.zeta * (f1 * (f1 - 1.0) + f2 * (f2 - 1.0));
}

// Coupling <m1-1, m2-1, up| H |m1, m2, down> = eta * sqrt(m1 m2).
double pair_coupling(const ModelParams& p, int m1, int m2) {
    if (m1 < 1 || m2 < 1) return 0.0;
    return p.eta * std::sqrt(static_cast<double>(m1) * static_cast<double>(m2));
}

}  // namespace

double hermiticity_defect(const CMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::vector<BasisLabel> subspace_basis(const ModelParams& params) {
    const int n1 = params.n1, n2 = params.n2;
    return {
        {n1, n2, Atom::up},
        {n1, n2, Atom::down},
        {n1 + 1, n2 + 1, Atom::down},
        {n1 - 1, n2 - 1, Atom::up},
    };
}

CMatrix build_subspace_hamiltonian(const ModelParams& params) {
    validate(params);
    const auto basis = subspace_basis(params);
    CMatrix h = CMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        h(i, i) = diagonal_energy(params, basis[i].m1, basis[i].m2, basis[i].level);
    }
    // |n1,n2,up> <-> |n1+1,n2+1,down> and |n1,n2,down> <-> |n1-1,n2-1,up>.
    h(0, 2) = h(2, 0) = pair_coupling(params, params.n1 + 1, params.n2 + 1);
    h(1, 3) = h(3, 1) = pair_coupling(params, params.n1, params.n2);
    return h;
}

std::vector<BasisLabel> truncated_basis(int cutoff1, int cutoff2) {
    std::vector<BasisLabel> basis;
    basis.reserve(2 * (cutoff1 + 1) * (cutoff2 + 1));
    for (int m1 = 0; m1 <= cutoff1; ++m1) {
        for (int m2 = 0; m2 <= cutoff2; ++m2) {
            basis.push_back({m1, m2, Atom::up});
            basis.push_back({m1, m2, Atom::down});
        }
    }
    return basis;
}

namespace {

int truncated_index(int m1, int m2, Atom level, int cutoff2) {
    return (m1 * (cutoff2 + 1) + m2) * 2 + (level == Atom::down ? 1 : 0);
}

void check_cutoffs(const ModelParams& params, int cutoff1, int cutoff2) {
    if (cutoff1 < params.n1 + 2) {
        throw CutoffError("cutoff1 too small: need cutoff1 >= n1 + 2 (got " +
                          std::to_string(cutoff1) + " for n1 = " +
                          std::to_string(params.n1) + ")");
    }
    if (cutoff2 < params.n2 + 2) {
        throw CutoffError("cutoff2 too small: need cutoff2 >= n2 + 2 (got " +
                          std::to_string(cutoff2) + " for n2 = " +
                          std::to_string(params.n2) + ")");
    }
}

}  // namespace

CMatrix build_truncated_hamiltonian(const ModelParams& params, int cutoff1,
                                    int cutoff2) {
    validate(params);
    check_cutoffs(params, cutoff1, cutoff2);
    const int dim = 2 * (cutoff1 + 1) * (cutoff2 + 1);
    CMatrix h = CMatrix::Zero(dim, dim);
    for (int m1 = 0; m1 <= cutoff1; ++m1) {
        for (int m2 = 0; m2 <= cutoff2; ++m2) {
            const int iu = truncated_index(m1, m2, Atom::up, cutoff2);
            const int id = truncated_index(m1, m2, Atom::down, cutoff2);
            h(iu, iu) = diagonal_energy(params, m1, m2, Atom::up);
            h(id, id) = diagonal_energy(params, m1, m2, Atom::down);
            if (m1 >= 1 && m2 >= 1) {
                const int ju = truncated_index(m1 - 1, m2 - 1, Atom::up, cutoff2);
                h(id, ju) = h(ju, id) = pair_coupling(params, m1, m2);
            }
        }
    }
    return h;
}

StateVector evolve(const CMatrix& h, const StateVector& psi0, double t_scaled) {
    if (h.rows() != h.cols()) throw ValidationError("h must be square");
    if (h.rows() != psi0.amplitudes.size()) {
        throw ValidationError("dimension mismatch: h is " +
                              std::to_string(h.rows()) + "x" +
                              std::to_string(h.cols()) + ", psi0 has dim " +
                              std::to_string(psi0.amplitudes.size()));
    }
    if (hermiticity_defect(h) > 1e-10) {
        throw EigensolverError("evolve: h is not Hermitian within 1e-10");
    }

    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const CVector projected = es.eigenvectors().adjoint() * psi0.amplitudes;
    CVector rotated(projected.size());
    for (Eigen::Index k = 0; k < projected.size(); ++k) {
        rotated(k) = std::exp(-kImag * es.eigenvalues()(k) * t_scaled) * projected(k);
    }
    StateVector out;
    out.amplitudes = es.eigenvectors() * rotated;
    out.labels = psi0.labels;
    return out;
}

AmplitudeSet amplitudes_oracle(const ModelParams& params, double t_scaled) {
    validate(params);
    const CMatrix h = build_subspace_hamiltonian(params);
    StateVector psi0;
    psi0.amplitudes = CVector::Zero(4);
    psi0.amplitudes(0) = std::cos(params.theta);
    psi0.amplitudes(1) = std::sin(params.theta);
    psi0.labels = subspace_basis(params);

    const StateVector psi = evolve(h, psi0, t_scaled);
    AmplitudeSet amps;
    amps.a = psi.amplitudes(0);
    amps.b = psi.amplitudes(1);
    amps.c = psi.amplitudes(2);
    amps.d = psi.amplitudes(3);
    amps.t_scaled = t_scaled;
    return amps;
}

namespace {

// Above this dimension the dense full-space eigendecomposition stops being
// practical; the evolution then runs exactly on the connected component of
// the initial support instead.
constexpr int kDenseLeakageLimit = 512;

double leakage_dense(const ModelParams& params, double t_scaled, int cutoff1,
                     int cutoff2) {
    const CMatrix h = build_truncated_hamiltonian(params, cutoff1, cutoff2);
    StateVector psi0;
    psi0.amplitudes = CVector::Zero(h.rows());
    psi0.labels = truncated_basis(cutoff1, cutoff2);
    const int iu = truncated_index(params.n1, params.n2, Atom::up, cutoff2);
    const int id = truncated_index(params.n1, params.n2, Atom::down, cutoff2);
    psi0.amplitudes(iu) = std::cos(params.theta);
    psi0.amplitudes(id) = std::sin(params.theta);

    const StateVector psi = evolve(h, psi0, t_scaled);
    const auto ansatz = subspace_basis(params);
    double outside = 0.0;
    for (int k = 0; k < psi.dim(); ++k) {
        const bool inside =
            std::find(ansatz.begin(), ansatz.end(), psi.labels[k]) != ansatz.end();
        if (!inside) outside += std::norm(psi.amplitudes(k));
    }
    return outside;
}

// The interaction pairs |m1,m2,down> with |m1-1,m2-1,up> and nothing else, so
// connected components of the sparsity graph have at most two states. The
// component is discovered by graph reachability from the built matrix
// elements, not assumed from the ansatz.
double leakage_by_component(const ModelParams& params, double t_scaled,
                            int cutoff1, int cutoff2) {
    std::vector<BasisLabel> component;
    auto add_reachable = [&](BasisLabel seed) {
        std::vector<BasisLabel> frontier{seed};
        while (!frontier.empty()) {
            const BasisLabel cur = frontier.back();
            frontier.pop_back();
            if (std::find(component.begin(), component.end(), cur) !=
                component.end())
                continue;
            component.push_back(cur);
            if (cur.level == Atom::down && pair_coupling(params, cur.m1, cur.m2) != 0.0) {
                frontier.push_back({cur.m1 - 1, cur.m2 - 1, Atom::up});
            }
            if (cur.level == Atom::up && cur.m1 + 1 <= cutoff1 && cur.m2 + 1 <= cutoff2 &&
                pair_coupling(params, cur.m1 + 1, cur.m2 + 1) != 0.0) {
                frontier.push_back({cur.m1 + 1, cur.m2 + 1, Atom::down});
            }
        }
    };
    add_reachable({params.n1, params.n2, Atom::up});
    add_reachable({params.n1, params.n2, Atom::down});
    std::sort(component.begin(), component.end(), [&](const BasisLabel& x, const BasisLabel& y) {
        return truncated_index(x.m1, x.m2, x.level, cutoff2) <
               truncated_index(y.m1, y.m2, y.level, cutoff2);
    });

    const int dim = static_cast<int>(component.size());
    CMatrix h = CMatrix::Zero(dim, dim);
    StateVector psi0;
    psi0.amplitudes = CVector::Zero(dim);
    psi0.labels = component;
    for (int i = 0; i < dim; ++i) {
        h(i, i) = diagonal_energy(params, component[i].m1, component[i].m2,
                                  component[i].level);
        for (int j = i + 1; j < dim; ++j) {
            const BasisLabel& down = component[i].level == Atom::down ? component[i] : component[j];
            const BasisLabel& up = component[i].level == Atom::down ? component[j] : component[i];
            if (down.level == Atom::down && up.level == Atom::up &&
                up.m1 == down.m1 - 1 && up.m2 == down.m2 - 1) {
                h(i, j) = h(j, i) = pair_coupling(params, down.m1, down.m2);
            }
        }
        if (component[i] == BasisLabel{params.n1, params.n2, Atom::up})
            psi0.amplitudes(i) = std::cos(params.theta);
        if (component[i] == BasisLabel{params.n1, params.n2, Atom::down})
            psi0.amplitudes(i) = std::sin(params.theta);
    }

    const StateVector psi = evolve(h, psi0, t_scaled);
    const auto ansatz = subspace_basis(params);
    double outside = 0.0;
    for (int k = 0; k < psi.dim(); ++k) {
        const bool inside =
            std::find(ansatz.begin(), ansatz.end(), psi.labels[k]) != ansatz.end();
        if (!inside) outside += std::norm(psi.amplitudes(k));
    }
    // Everything off the component has exactly zero amplitude.
    return outside;
}

}  // namespace

double subspace_leakage(const ModelParams& params, double t_scaled, int cutoff1,
                        int cutoff2) {
    validate(params);
    check_cutoffs(params, cutoff1, cutoff2);
    const int dim = 2 * (cutoff1 + 1) * (cutoff2 + 1);
    if (dim <= kDenseLeakageLimit) {
        return leakage_dense(params, t_scaled, cutoff1, cutoff2);
    }
    return leakage_by_component(params, t_scaled, cutoff1, cutoff2);
}

}  // namespace kerrneg
