#include "kerrneg/figures.hpp"

#include <cmath>

namespace kerrneg {

const char* figure_name(FigureId id) {
    switch (id) {
        case FigureId::fig1a: return "fig1a";
        case FigureId::fig1b: return "fig1b";
        case FigureId::fig1c: return "fig1c";
        case FigureId::fig2a: return "fig2a";
        case FigureId::fig2b: return "fig2b";
        case FigureId::fig2c: return "fig2c";
        case FigureId::fig3: return "fig3";
        case FigureId::fig4a: return "fig4a";
        case FigureId::fig4b: return "fig4b";
        case FigureId::fig4c: return "fig4c";
    }
    return "?";
}

std::optional<FigureId> figure_from_name(std::string_view name) {
    for (FigureId id : {FigureId::fig1a, FigureId::fig1b, FigureId::fig1c,
                        FigureId::fig2a, FigureId::fig2b, FigureId::fig2c,
                        FigureId::fig3, FigureId::fig4a, FigureId::fig4b,
                        FigureId::fig4c}) {
        if (name == figure_name(id)) return id;
    }
    return std::nullopt;
}

SweepSpec figure_spec(FigureId id) {
    const double pi = M_PI;
    SweepSpec spec;
    switch (id) {
        case FigureId::fig1a:
            spec.fixed = {0, 0, pi / 4, 1.0, 0.0};
            spec.axis1 = {SweepParameter::t, 0.0, 2.0 * pi, 2001};
            break;
        case FigureId::fig1b:
            spec.fixed = {100, 100, pi / 4, 1.0, 0.0};
            spec.axis1 = {SweepParameter::t, 0.0, 0.5, 5001};
            break;
        case FigureId::fig1c:
            spec.fixed = {0, 100, pi / 4, 1.0, 0.0};
            spec.axis1 = {SweepParameter::t, 0.0, 0.5, 5001};
            break;
        case FigureId::fig2a:
        case FigureId::fig2b:
        case FigureId::fig2c: {
            const int n = (id == FigureId::fig2b) ? 100 : 0;
            const int n2 = (id == FigureId::fig2a) ? 0 : 100;
            spec.fixed = {n, n2, pi / 4, 0.0, 10.0};
            spec.fixed_t = 1.0;
            spec.axis1 = {SweepParameter::eta, 0.0, 10.0, 1001};
            break;
        }
        case FigureId::fig3:
            spec.fixed = {100, 100, 0.0, 1.0, 0.0};
            spec.fixed_t = 1.0;
            spec.axis1 = {SweepParameter::zeta, 0.0, 20.0, 101};
            spec.axis2 = AxisSpec{SweepParameter::theta, 0.0, pi, 181};
            break;
        case FigureId::fig4a:
        case FigureId::fig4b:
        case FigureId::fig4c: {
            const int n = (id == FigureId::fig4b) ? 100 : 0;
            const int n2 = (id == FigureId::fig4a) ? 0 : 100;
            spec.fixed = {n, n2, 0.0, 1.0, 10.0};
            spec.axis1 = {SweepParameter::t, 0.0, 0.5, 501};
            spec.axis2 = AxisSpec{SweepParameter::theta, 0.0, pi, 181};
            break;
        }
    }
    return spec;
}

}  // namespace kerrneg
