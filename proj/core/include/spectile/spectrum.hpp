#ifndef SPECTILE_SPECTRUM_HPP
#define SPECTILE_SPECTRUM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spectile/lattice.hpp"
#include "spectile/polytope.hpp"

namespace spectile {

/**
 * Finite set of candidate spectrum points.
 *
 * Points are exact rationals.  Decimal or floating-point input is converted
 * exactly (doubles are dyadic) and the patch is marked inexact, which switches
 * membership tests from exact to a 1e-9 tolerance.
 */
struct SpectrumPatch {
    int dim = 0;
    std::vector<Vec> points;
    double window_radius = 0;
    /// Minimum pairwise distance (0 for fewer than two points).
    double separation = 0;
    bool exact = true;
    /// Translation applied after enumeration; the window is centred here.
    Vec center;

    /// Recomputes `separation`.
    void update_separation();
};

/// Patch translated by v (irrational translations enter as their double value).
SpectrumPatch translated(const SpectrumPatch& s, const Vec& v, bool exact = true);

/// Basis (B^{-1})^T; covolume 1 / covolume(L).
Lattice dual_lattice(const Lattice& l);

struct SpectralVerdict {
    bool spectral = false;
    /// Empty when spectral, else the failing tiling condition.
    std::string reason;
    std::optional<Lattice> tiling_lattice;
    std::optional<Lattice> spectrum;
};

/// spectral iff the body tiles (d = 2, 3); the spectrum is the dual of T.
SpectralVerdict decide_spectral(const Polytope& p);

/// All points of L in the closed ball of radius r, exactly.
SpectrumPatch patch(const Lattice& l, double r);

struct OrthogonalityReport {
    bool pass = false;
    std::size_t pairs = 0;
    /// Distinct differences evaluated (one of each +/- pair).
    std::size_t frequencies = 0;
    double max_abs = 0;
    double tolerance = 0;
    std::optional<Vec> worst;
    /// First difference above tolerance.
    std::optional<Vec> witness;
};

/// |ft(l' - l)| <= tol * volume for every distinct pair.
OrthogonalityReport verify_orthogonality(const Polytope& p, const SpectrumPatch& s, double tol = 1e-10);

struct DensityReport {
    bool pass = false;
    std::size_t count = 0;
    double ball_volume = 0;
    double density = 0;
    double target = 0;
    double relative_error = 0;
};

/// count / vol(B_R) within 5% of volume(P), the density of the dual of T.
/// Throws WindowTooSmall unless vol(B_R) >= 100 / volume(P).
DensityReport verify_density(const Polytope& p, const SpectrumPatch& s, double rel_tol = 0.05);

struct C2Report {
    bool pass = false;
    /// max over tau and pairs of the distance of <l' - l, tau> to Z.
    double max_deviation = 0;
    double tolerance = 0;
};

/// <l' - l, tau> in Z (within tol) for every pair and every tau.
C2Report condition_C2_check(const SpectrumPatch& s, const std::vector<Vec>& taus, double tol = 1e-9);

enum class UniquenessOutcome { Pass, Fail, PrismExcluded };
std::string to_string(UniquenessOutcome o);

struct UniquenessReport {
    UniquenessOutcome outcome = UniquenessOutcome::Fail;
    std::size_t checked = 0;
    /// A difference l - l_0 outside the dual of T.
    std::optional<Vec> witness;
};

/// Checks S - l_0 inside the dual of T.  Prisms (and parallelograms) report
/// PrismExcluded instead.  Throws PreconditionFailed for non-spectral bodies.
UniquenessReport uniqueness_check(const Polytope& p, const SpectrumPatch& s);

/// Base spectrum patch Gamma and theta(gamma) in [0, 1) per base point.
struct PrismSpectrumSpec {
    SpectrumPatch base;
    std::vector<Rational> theta;
};

/// {(k + theta(gamma), gamma) : |.| <= r}.  The prism axis is the first
/// coordinate.  Throws ThetaOutOfRange.
SpectrumPatch prism_spectrum(const Polytope& base, const PrismSpectrumSpec& spec, double r);

/// Sorted set of differences l' - l over distinct pairs.
std::vector<Vec> difference_set(const SpectrumPatch& s);

/// The two patches agree up to a translation (same size and same point set
/// after subtracting each patch's lexicographically smallest point).
bool translation_equivalent(const SpectrumPatch& a, const SpectrumPatch& b);

struct ChiEstimate {
    double value = 0;
    Vec direction;
    std::size_t rays = 0;
    std::size_t evaluations = 0;
};

/**
 * Heuristic first zero radius of the transform.
 *
 * Scans rays (axes, facet normals, edge directions, pairwise normal sums and
 * differences, and a Fibonacci sphere) for sign changes of the phase-corrected
 * real transform (centrally symmetric bodies) or near-zero local minima of its
 * modulus, then bisects.  An upper bound on the true first zero radius.
 */
ChiEstimate chi_estimate(const Polytope& p);

}  // namespace spectile

#endif  // SPECTILE_SPECTRUM_HPP
