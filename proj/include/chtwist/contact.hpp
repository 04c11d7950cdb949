#pragma once

// The primitive α = λ + β of ω, its Liouville field X (i_X ω = α), and the
// contact-type verdict for the boundary {‖v‖² = a} ∪ {‖v‖² = b}.
//
// "Outward" is read off the sign of dH(X) relative to {a <= ‖v‖² <= b}:
// H must increase along X at the outer wall and decrease at the inner wall.

#include <cstdint>
#include <string>
#include <vector>

#include "chtwist/sasaki.hpp"

namespace chtwist {

double alpha(const PhaseGeometry& geom, const TangentTT& xi);

/// α on the coordinate basis.
Vec alpha_components(const PhaseGeometry& geom);

/// Unique solution of i_X ω = α; throws ConditioningError if ω is singular at the point.
TangentTT liouville_field(const PhaseGeometry& geom);

/// max |dα_fd - ω| / (1 + max |ω|), coordinate basis.
double primitive_fd_residual(const ModelParams& params, const PhasePoint& p);

enum class Wall { inner, outer };

const char* to_string(Wall wall);

struct TransversalityResult {
    double level = 0.0;  ///< ‖v‖²_g at the point
    double dh_x = 0.0;   ///< dH(X)
    bool singular = false;   ///< ω singular here; X taken as the minimum-norm solution
    bool ambiguous = false;  ///< |dH(X)| below tol_exact

    /// X leaves {a <= ‖v‖² <= b} through this wall.
    bool outward(Wall wall) const {
        if (ambiguous) return false;
        return wall == Wall::outer ? dh_x > 0.0 : dh_x < 0.0;
    }
};

TransversalityResult transversality_check(const PhaseGeometry& geom);

enum class Verdict { contact_disconnected, degenerate, fails };

const char* to_string(Verdict verdict);

struct LevelRecord {
    Wall wall = Wall::inner;
    double level = 0.0;
    std::vector<double> dh_x;
    double max_identity_residual = 0.0;  ///< max |dH(X) - (‖v‖² - c)|
    int singular = 0;
    int ambiguous = 0;
    bool outward = false;  ///< every sample points outward through this wall
};

struct ContactReport {
    int n = 1;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    std::vector<LevelRecord> levels;
    double primitive_max_residual = 0.0;
    double primitive_tolerance = 0.0;
    Verdict verdict = Verdict::fails;
    std::string explanation;

    int boundary_components() const { return verdict == Verdict::contact_disconnected ? 2 : 0; }
};

/// Samples `sample_count` phase points on each of the levels ‖v‖² = a and ‖v‖² = b.
/// Throws DomainError unless a, b > 0 and sample_count >= 1; a >= c or b <= c yield
/// a non-contact verdict, not an error.
ContactReport contact_report(const ModelParams& params, double a, double b, int sample_count, std::uint64_t seed);

}  // namespace chtwist
