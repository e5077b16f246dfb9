#ifndef SPECTILE_FOURIER_HPP
#define SPECTILE_FOURIER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "spectile/hifloat.hpp"
#include "spectile/polytope.hpp"

namespace spectile {

/// |ft| <= kZeroTolerance * volume counts as a zero of the transform.
inline constexpr double kZeroTolerance = 1e-10;

/// Largest denominator used when a floating-point frequency is snapped to Q^d.
inline constexpr long long kFrequencySnapDenominator = 1000000;

/**
 * Fourier transform of the indicator, f(xi) = int_P exp(-2 pi i <xi, x>) dx.
 *
 * Evaluated by the divergence-theorem recursion over the face lattice: a face
 * whose direction space is orthogonal to xi contributes measure times a single
 * phase; otherwise its transform is the sum over its relative facets weighted
 * by <w, xi> / (|w| (-2 pi i) |xi_par|^2).  The branch is decided exactly.
 */
ComplexValue ft_indicator(const Polytope& p, const Vec& xi);

/// Frequency-independent geometry (edge lengths, relative normals and their
/// norms) for repeated evaluation on one polytope.  Keeps a copy of the polytope.
class FourierPlan {
public:
    explicit FourierPlan(Polytope p);

    const Polytope& polytope() const { return p_; }
    ComplexValue indicator(const Vec& xi) const;
    ComplexValue surface(std::size_t facet, const Vec& xi) const;
    ComplexValue face(FaceId face, const Vec& xi) const;

    struct FacetEdge {
        std::size_t edge;
        Vec w;  // in-plane outward normal of the edge
        HighFloat inv_norm;
    };
    struct FacetData {
        Rational normal_norm2;
        HighFloat inv_normal_norm;
        HighFloat measure;
        Vec centroid;
        std::vector<FacetEdge> edges;
    };
    struct EdgeData {
        Vec e;
        Vec midpoint;
        HighFloat length;
    };

private:
    friend class FourierEvaluator;
    Polytope p_;
    std::vector<EdgeData> edges_;
    std::vector<FacetData> facets_;
    HighFloat inv_two_pi_;
    /// Set for centrally symmetric bodies: the facet 2c - F for each F.
    std::optional<Vec> center_;
    std::vector<std::size_t> partner_;
};

/// Transform of the surface measure on one facet.
ComplexValue ft_surface(const Polytope& p, std::size_t facet, const Vec& xi);

/// Transform of the k-dimensional measure on an arbitrary face.
ComplexValue ft_face(const Polytope& p, FaceId face, const Vec& xi);

/// Throws ZeroFrequency for xi = 0.
bool ft_zero(const Polytope& p, const Vec& xi, double tol = kZeroTolerance);

/// Rational frequency closest to a floating-point one, denominators <= 10^6.
Vec snap_frequency(const std::vector<double>& xi);

/// Upper bound (rounded up) on the total surface measure.
double surface_measure_upper(const Polytope& p);

struct DecayCheck {
    bool pass = true;
    std::size_t samples = 0;
    std::size_t violations = 0;
    /// max over samples of |ft(xi)| / (|dP| / (2 pi |xi|)).
    double worst_ratio = 0;
};

/// |ft(xi)| <= |dP| / (2 pi |xi|) at every sample.
DecayCheck decay_bound_check(const Polytope& p, const std::vector<Vec>& samples);

/// Right-hand side of the facet transform bound |dF| / (2 pi |xi| |sin theta|);
/// infinity when xi is parallel to the facet normal.
double facet_decay_bound(const Polytope& p, std::size_t facet, const Vec& xi);

/// max_k | -2 pi i xi_k ft(xi) - sum_F (n_F)_k / |n_F| ft_surface(F, xi) |.
double divergence_identity_residual(const Polytope& p, const Vec& xi);

struct ConeSample {
    Vec xi;
    double residual = 0;         // |pi xi_1 ft_P(xi) - sin(pi xi_1) ft_Sigma(xi')|
    double scaled_residual = 0;  // residual * |xi_1|
};

struct ConeReport {
    double alpha = 0;
    std::vector<ConeSample> samples;
    /// Per entry of xi1_values: the max scaled residual over its cone samples.
    std::vector<double> max_scaled_by_xi1;
    double max_scaled = 0;
};

/**
 * Residual of the leading-order asymptotics along the x_1 axis.
 *
 * Requires P = -P and a facet {1/2} x Sigma with outward normal e_1, Sigma
 * given as a (d-1)-polytope; throws NotStandardPosition otherwise.  For each
 * xi_1, samples xi' = c * alpha * xi_1 with c ranging over {-1, -1/2, 0, 1/2, 1}
 * per transverse coordinate, so every sample lies in the cone |xi_j| <= alpha |xi_1|.
 */
ConeReport asymptotic_cone_check(const Polytope& p, const Polytope& sigma, const Rational& alpha,
                                 const std::vector<Rational>& xi1_values);

}  // namespace spectile

#endif  // SPECTILE_FOURIER_HPP
