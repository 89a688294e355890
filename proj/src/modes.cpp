#include "cdos/modes.hpp"

#include <cmath>
#include <string_view>

namespace cdos {

const char* to_string(Mode m) {
    switch (m) {
        case Mode::Local: return "local";
        case Mode::Global: return "global";
        case Mode::Multimodal: return "multimodal";
        case Mode::Mixed: return "mixed";
    }
    return "?";
}

std::optional<Mode> mode_from_string(std::string_view s) {
    if (s == "local") return Mode::Local;
    if (s == "global") return Mode::Global;
    if (s == "multimodal") return Mode::Multimodal;
    if (s == "mixed") return Mode::Mixed;
    return std::nullopt;
}

double adapt_step(Mode mode, double lambda, double delta_x_norm, std::optional<double> d_min,
                  double tol) {
    bool local_rule = (mode == Mode::Local || mode == Mode::Multimodal);
    if (!local_rule && d_min && lambda <= *d_min / 2.0) local_rule = true;

    double next;
    if (local_rule)
        next = 0.3 * delta_x_norm + 0.091 * lambda;
    else if (mode == Mode::Global)
        next = delta_x_norm + 0.82 * lambda;
    else
        next = delta_x_norm + 0.51 * lambda;
    if (next == 0.0) next = tol;
    return next;
}

GridMask GridMask::integers(std::size_t n) {
    GridMask m;
    m.coords.assign(n, GridSpec{1.0, 0.0});
    return m;
}

Vector round_to_grid(const Vector& x, const GridMask& mask) {
    Vector out = x;
    const std::size_t n = std::min(x.size(), mask.coords.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (!mask.coords[i]) continue;
        const double step = mask.coords[i]->step;
        const double offset = mask.coords[i]->offset;
        out[i] = offset + step * std::round((x[i] - offset) / step);
    }
    return out;
}

PointTransform grid_transform(GridMask mask) {
    return [mask = std::move(mask)](const Vector& x) { return round_to_grid(x, mask); };
}

double default_lambda0(Mode m) {
    switch (m) {
        case Mode::Global:
        case Mode::Mixed: return 100.0;
        case Mode::Multimodal: return 0.005;
        case Mode::Local: break;
    }
    return 1.0;
}

int default_starts(Mode m) {
    switch (m) {
        case Mode::Global: return 50;
        case Mode::Mixed: return 50;
        case Mode::Multimodal: return 100;
        case Mode::Local: break;
    }
    return 1;
}

}  // namespace cdos
