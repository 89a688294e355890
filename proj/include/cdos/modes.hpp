#pragma once

#include <optional>
#include <vector>

#include "cdos/trial.hpp"

namespace cdos {

enum class Mode { Local, Global, Multimodal, Mixed };

const char* to_string(Mode m);
std::optional<Mode> mode_from_string(std::string_view s);

// Step adaptation for the next iteration, per operating mode:
//   Local      0.3*||dx|| + 0.091*lambda
//   Global     ||dx|| + 0.82*lambda
//   Mixed      ||dx|| + 0.51*lambda
//   Multimodal same as Local
// When d_min is known and lambda <= d_min/2, Global and Mixed fall back to
// the Local rule. A zero result is replaced by tol.
double adapt_step(Mode mode, double lambda, double delta_x_norm, std::optional<double> d_min,
                  double tol);

struct GridSpec {
    double step = 1.0;
    double offset = 0.0;
};

// Per-coordinate discretization; coordinates without a spec stay continuous.
struct GridMask {
    std::vector<std::optional<GridSpec>> coords;

    bool any() const {
        for (const auto& g : coords)
            if (g) return true;
        return false;
    }
    static GridMask integers(std::size_t n);
};

// Snaps every discrete coordinate to its nearest grid point (halfway rounds
// away from zero); continuous coordinates pass through.
Vector round_to_grid(const Vector& x, const GridMask& mask);

// round_to_grid as a trial transform, applied to every trial point before
// feasibility and objective evaluation in mixed mode.
PointTransform grid_transform(GridMask mask);

double default_lambda0(Mode m);  // 1 / 100 / 0.005 / 100
int default_starts(Mode m);      // 1 / 50 / 100 / 50

}  // namespace cdos
