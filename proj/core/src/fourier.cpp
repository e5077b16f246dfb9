#include "spectile/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "spectile/error.hpp"
#include "spectile/symmetry.hpp"

namespace spectile {

namespace {

// Multiplies by 1 / (-2 pi i) = i / (2 pi).
ComplexValue over_minus_two_pi_i(const ComplexValue& z, const HighFloat& inv_two_pi) {
    ComplexValue r;
    r.re = -z.im * inv_two_pi;
    r.im = z.re * inv_two_pi;
    r.err_bound = (z.err_bound + 2.0 * working_epsilon() * z.abs()) * inv_two_pi.convert_to<double>();
    return r;
}

double high_norm(const Vec& v) { return std::sqrt(v.norm2().convert_to<double>()); }

}  // namespace

FourierPlan::FourierPlan(Polytope p) : p_(std::move(p)) {
    inv_two_pi_ = 1 / (2 * high_pi());
    for (const auto& e : p_.edges()) {
        const Vec& a = p_.vertex(e.a);
        const Vec& b = p_.vertex(e.b);
        edges_.push_back(EdgeData{b - a, (a + b) / Rational(2), high_sqrt((b - a).norm2())});
    }
    for (std::size_t f = 0; f < p_.facets().size(); ++f) {
        const Facet& F = p_.facets()[f];
        FacetData fd;
        fd.normal_norm2 = F.normal.norm2();
        fd.inv_normal_norm = 1 / high_sqrt(fd.normal_norm2);
        if (p_.dim() == 3) {
            fd.measure = high_sqrt(p_.face_measure_squared({2, f}));
            fd.centroid = p_.face_centroid({2, f});
            const std::size_t k = F.vertices.size();
            for (std::size_t i = 0; i < k; ++i) {
                const Vec e = p_.vertex(F.vertices[(i + 1) % k]) - p_.vertex(F.vertices[i]);
                const Vec w = cross(e, F.normal);
                fd.edges.push_back(FacetEdge{F.edges[i], w, 1 / high_sqrt(w.norm2())});
            }
        }
        facets_.push_back(std::move(fd));
    }
    if ((center_ = center_of_symmetry(p_))) {
        partner_.resize(p_.facets().size());
        for (std::size_t f = 0; f < partner_.size(); ++f) partner_[f] = *opposite_facet(p_, f);
    }
}

class FourierEvaluator {
public:
    FourierEvaluator(const FourierPlan& plan, const Vec& xi)
        : plan_(plan),
          p_(plan.p_),
          xi_(xi),
          phase_(p_.vertices().size()),
          edge_(p_.edges().size()),
          facet_(p_.facets().size()) {
        if (xi.dim() != p_.dim()) throw Error(ErrorCode::DimensionMismatch, "frequency dimension");
    }

    const ComplexValue& vertex(std::size_t i) {
        if (!phase_[i]) phase_[i] = unit_phase(dot(xi_, p_.vertex(i)));
        return *phase_[i];
    }

    ComplexValue segment(std::size_t a, std::size_t b, const Vec& e, const Vec& mid, const HighFloat& len) {
        const Rational s = dot(xi_, e);
        if (s == 0) return unit_phase(dot(xi_, mid)) * len;
        return over_minus_two_pi_i(vertex(b) - vertex(a), plan_.inv_two_pi_) * HighFloat(len / to_high(s));
    }

    const ComplexValue& edge(std::size_t e) {
        if (!edge_[e]) {
            const auto& ed = plan_.edges_[e];
            edge_[e] = segment(p_.edges()[e].a, p_.edges()[e].b, ed.e, ed.midpoint, ed.length);
        }
        return *edge_[e];
    }

    const ComplexValue& facet(std::size_t f) {
        if (facet_[f]) return *facet_[f];
        const Facet& F = p_.facets()[f];
        const auto& fd = plan_.facets_[f];
        ComplexValue v;
        if (p_.dim() == 1) {
            v = vertex(F.vertices[0]);
        } else if (p_.dim() == 2) {
            v = edge(f);
        } else {
            const Vec& n = F.normal;
            const Rational xn = dot(xi_, n);
            const Rational par2 = xi_.norm2() - xn * xn / fd.normal_norm2;
            if (par2 == 0) {
                v = unit_phase(dot(xi_, fd.centroid)) * fd.measure;
            } else {
                for (const auto& fe : fd.edges) {
                    const Rational c = dot(fe.w, xi_) / par2;
                    if (c == 0) continue;
                    v += edge(fe.edge) * HighFloat(to_high(c) * fe.inv_norm);
                }
                v = over_minus_two_pi_i(v, plan_.inv_two_pi_);
            }
        }
        facet_[f] = v;
        return *facet_[f];
    }

    ComplexValue body() {
        if (xi_.is_zero()) {
            ComplexValue v;
            v.re = to_high(p_.volume());
            return v;
        }
        if (p_.dim() == 1) {
            const Vec e = p_.vertex(1) - p_.vertex(0);
            return segment(0, 1, e, (p_.vertex(0) + p_.vertex(1)) / Rational(2), high_sqrt(e.norm2()));
        }
        const Rational xi2 = xi_.norm2();
        ComplexValue v;
        if (plan_.center_) {
            // F' = 2c - F has normal -n and transform e(<xi, 2c>) conj(f_F).
            const ComplexValue shift = unit_phase(2 * dot(xi_, *plan_.center_));
            for (std::size_t f = 0; f < p_.facets().size(); ++f) {
                if (plan_.partner_[f] < f) continue;
                const Rational c = dot(p_.facets()[f].normal, xi_) / xi2;
                if (c == 0) continue;
                const ComplexValue& a = facet(f);
                v += (a - shift * conj(a)) * HighFloat(to_high(c) * plan_.facets_[f].inv_normal_norm);
            }
        } else {
            for (std::size_t f = 0; f < p_.facets().size(); ++f) {
                const Rational c = dot(p_.facets()[f].normal, xi_) / xi2;
                if (c == 0) continue;
                v += facet(f) * HighFloat(to_high(c) * plan_.facets_[f].inv_normal_norm);
            }
        }
        return over_minus_two_pi_i(v, plan_.inv_two_pi_);
    }

private:
    const FourierPlan& plan_;
    const Polytope& p_;
    const Vec& xi_;
    std::vector<std::optional<ComplexValue>> phase_;
    std::vector<std::optional<ComplexValue>> edge_;
    std::vector<std::optional<ComplexValue>> facet_;
};

ComplexValue FourierPlan::indicator(const Vec& xi) const { return FourierEvaluator(*this, xi).body(); }

ComplexValue FourierPlan::surface(std::size_t facet, const Vec& xi) const {
    if (facet >= p_.facets().size()) throw Error(ErrorCode::PreconditionFailed, "facet index out of range");
    return FourierEvaluator(*this, xi).facet(facet);
}

ComplexValue FourierPlan::face(FaceId face, const Vec& xi) const {
    FourierEvaluator ev(*this, xi);
    if (face.dim == p_.dim()) return ev.body();
    if (face.dim == p_.dim() - 1) return ev.facet(face.index);
    if (face.dim == 0) return ev.vertex(face.index);
    return ev.edge(face.index);
}

ComplexValue ft_indicator(const Polytope& p, const Vec& xi) { return FourierPlan(p).indicator(xi); }

ComplexValue ft_surface(const Polytope& p, std::size_t facet, const Vec& xi) { return FourierPlan(p).surface(facet, xi); }

ComplexValue ft_face(const Polytope& p, FaceId face, const Vec& xi) { return FourierPlan(p).face(face, xi); }

bool ft_zero(const Polytope& p, const Vec& xi, double tol) {
    if (xi.is_zero()) throw Error(ErrorCode::ZeroFrequency, "the transform at 0 is the volume");
    return ft_indicator(p, xi).abs() <= tol * p.volume().convert_to<double>();
}

Vec snap_frequency(const std::vector<double>& xi) {
    std::vector<Rational> q;
    for (double x : xi) q.push_back(snap_rational(x, kFrequencySnapDenominator));
    return Vec(q);
}

double surface_measure_upper(const Polytope& p) {
    const double up = std::numeric_limits<double>::infinity();
    double total = 0;
    for (const auto& m2 : p.facet_measures_squared()) {
        double m = std::nextafter(std::sqrt(std::nextafter(m2.convert_to<double>(), up)), up);
        total = std::nextafter(total + m, up);
    }
    return total;
}

DecayCheck decay_bound_check(const Polytope& p, const std::vector<Vec>& samples) {
    DecayCheck r;
    const double surface = surface_measure_upper(p);
    const FourierPlan plan(p);
    for (const auto& xi : samples) {
        if (xi.is_zero()) throw Error(ErrorCode::ZeroFrequency, "decay bound needs xi != 0");
        const double bound = surface / (2 * M_PI * high_norm(xi)) * (1 + 1e-12);
        const double ratio = plan.indicator(xi).abs() / bound;
        ++r.samples;
        r.worst_ratio = std::max(r.worst_ratio, ratio);
        if (ratio > 1) {
            ++r.violations;
            r.pass = false;
        }
    }
    return r;
}

double facet_decay_bound(const Polytope& p, std::size_t facet, const Vec& xi) {
    if (xi.is_zero()) throw Error(ErrorCode::ZeroFrequency, "facet bound needs xi != 0");
    const Facet& F = p.facets()[facet];
    const Vec& n = F.normal;
    double boundary = 0;
    Rational sin_num2;  // |xi|^2 |n|^2 sin^2
    if (p.dim() == 3) {
        const std::size_t k = F.vertices.size();
        for (std::size_t i = 0; i < k; ++i)
            boundary += high_norm(p.vertex(F.vertices[(i + 1) % k]) - p.vertex(F.vertices[i]));
        sin_num2 = cross(xi, n).norm2();
    } else if (p.dim() == 2) {
        boundary = 2;
        Rational det = xi[0] * n[1] - xi[1] * n[0];
        sin_num2 = det * det;
    } else {
        return std::numeric_limits<double>::infinity();
    }
    if (sin_num2 == 0) return std::numeric_limits<double>::infinity();
    // |xi| |sin theta| = |xi x n| / |n|
    const double xi_sin = std::sqrt(sin_num2.convert_to<double>()) / high_norm(n);
    return boundary / (2 * M_PI * xi_sin) * (1 + 1e-12);
}

double divergence_identity_residual(const Polytope& p, const Vec& xi) {
    const FourierPlan plan(p);
    FourierEvaluator ev(plan, xi);
    const ComplexValue body = ev.body();
    double worst = 0;
    for (int k = 0; k < p.dim(); ++k) {
        ComplexValue lhs;
        // -2 pi i xi_k f  ->  (2 pi xi_k im, -2 pi xi_k re)
        HighFloat s = 2 * high_pi() * to_high(xi[k]);
        lhs.re = body.im * s;
        lhs.im = -body.re * s;
        ComplexValue rhs;
        for (std::size_t f = 0; f < p.facets().size(); ++f) {
            const Vec& n = p.facets()[f].normal;
            if (n[k] == 0) continue;
            rhs += ev.facet(f) * HighFloat(to_high(n[k]) / high_sqrt(n.norm2()));
        }
        worst = std::max(worst, (lhs - rhs).abs());
    }
    return worst;
}

namespace {

void require_standard_position(const Polytope& p, const Polytope& sigma) {
    const int d = p.dim();
    if (sigma.dim() != d - 1) throw Error(ErrorCode::NotStandardPosition, "Sigma must have dimension d - 1");
    for (const auto& v : p.vertices())
        if (!std::binary_search(p.vertices().begin(), p.vertices().end(), -v))
            throw Error(ErrorCode::NotStandardPosition, "P is not symmetric about the origin");
    const Vec e1 = Vec::unit(d, 0);
    const Facet* top = nullptr;
    for (const auto& f : p.facets())
        if (f.normal == e1) top = &f;
    if (!top || top->offset != Rational(1, 2))
        throw Error(ErrorCode::NotStandardPosition, "no facet {x_1 = 1/2} with outward normal e_1");
    std::vector<Vec> projected;
    for (std::size_t i : top->vertices) {
        std::vector<Rational> c;
        for (int k = 1; k < d; ++k) c.push_back(p.vertex(i)[k]);
        projected.push_back(Vec(c));
    }
    std::sort(projected.begin(), projected.end());
    if (projected != sigma.vertices()) throw Error(ErrorCode::NotStandardPosition, "facet at x_1 = 1/2 is not {1/2} x Sigma");
}

}  // namespace

ConeReport asymptotic_cone_check(const Polytope& p, const Polytope& sigma, const Rational& alpha,
                                 const std::vector<Rational>& xi1_values) {
    if (p.dim() < 2) throw Error(ErrorCode::NotStandardPosition, "cone check needs d >= 2");
    require_standard_position(p, sigma);
    const int d = p.dim();
    const std::vector<Rational> fractions{Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)};

    const FourierPlan plan_p(p), plan_s(sigma);
    ConeReport report;
    report.alpha = alpha.convert_to<double>();
    for (const Rational& x1 : xi1_values) {
        double worst = 0;
        std::vector<std::size_t> idx(d - 1, 0);
        while (true) {
            std::vector<Rational> full{x1}, trans;
            for (int j = 0; j < d - 1; ++j) {
                Rational c = fractions[idx[j]] * alpha * x1;
                full.push_back(c);
                trans.push_back(c);
            }
            const Vec xi(full);
            const Vec xt(trans);
            ComplexValue a = plan_p.indicator(xi) * HighFloat(high_pi() * to_high(x1));
            ComplexValue b = plan_s.indicator(xt) * HighFloat(boost::multiprecision::sin(high_pi() * to_high(frac(x1))) *
                                                                  (floor(x1) % 2 == 0 ? 1 : -1));
            ConeSample s{xi, (a - b).abs(), 0};
            s.scaled_residual = s.residual * std::fabs(x1.convert_to<double>());
            worst = std::max(worst, s.scaled_residual);
            report.samples.push_back(s);

            int j = 0;
            while (j < d - 1 && ++idx[j] == fractions.size()) idx[j++] = 0;
            if (j == d - 1) break;
        }
        report.max_scaled_by_xi1.push_back(worst);
        report.max_scaled = std::max(report.max_scaled, worst);
    }
    return report;
}

}  // namespace spectile
