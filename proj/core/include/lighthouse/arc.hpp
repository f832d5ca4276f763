#pragma once

#include <utility>
#include <vector>

#include "lighthouse/darkness.hpp"
#include "lighthouse/geom.hpp"
#include "lighthouse/scene.hpp"

namespace lighthouse::arc {

/// The illuminated arc of one lighthouse: the minor arc intercepted by the
/// illumination angle, facing the placement center.
struct ArcSpan {
    int lighthouse_index = 0;
    Point endpoint_a;            // at facing angle - half-width
    Point endpoint_b;            // at facing angle + half-width
    double center_angle = 0.0;   // angular half-width, alpha/2
};

enum class RayFamily { endpoint_tangent, common_tangent };

/// One candidate governing light ray: emitted on the source arc, tangent to
/// the target circle, crossing the symmetry axis behind the target.
struct TangentSolution {
    int source_k = 0;   // 1 = closest neighbor
    Point emission;     // on the source arc
    Point tangency;     // on the target circle
    Point apex;         // on the positive x-axis, beyond the target
    double x = 0.0;     // tangent length from apex, |tangency - apex|
    RayFamily family = RayFamily::endpoint_tangent;
};

ArcSpan illuminated_arc(const Scene& scene, int i);

/// Geometric candidates from source k: rays from the arc endpoints tangent to
/// the target circle, plus common tangents whose source tangency lies on the
/// illuminated arc. Only rays whose extension crosses the positive x-axis
/// beyond the target are kept; admissibility is not checked here.
std::vector<TangentSolution> candidate_rays(const Scene& scene, int k);

/// True iff the segment from emission to apex stays out of every lighthouse
/// disk interior, the source's own body included. Grazing is allowed.
bool is_admissible(const Scene& scene, const TangentSolution& sol, double graze_tol = 1e-9);

/// The governing ray: minimal-x admissible candidate over all k, ties to the
/// smaller k. Throws NoIlluminator when no admissible candidate exists.
std::pair<int, TangentSolution> find_illuminator(const Scene& scene);

double apex_x_arc(int n);

/// Root of the explicit per-n tangency equation, n in {3, 4, 5}.
double solve_tangency_equation(int n);

DarknessResult total_dark_area(int n);

struct IlluminatorRow {
    int n = 0;
    int k = 0;
    double x = 0.0;
};

/// k(n) and x(n) for n = 3..n_max.
std::vector<IlluminatorRow> illuminator_scan(int n_max);

}  // namespace lighthouse::arc
