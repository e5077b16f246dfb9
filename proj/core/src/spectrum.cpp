#include "spectile/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_set>

#include "spectile/error.hpp"
#include "spectile/fourier.hpp"
#include "spectile/symmetry.hpp"
#include "spectile/tiling.hpp"

namespace spectile {

namespace {

Rational squared_radius(double r) {
    Rational q = rational_from_double(r);
    return q * q;
}

double ball_volume(int d, double r) {
    switch (d) {
        case 1: return 2 * r;
        case 2: return M_PI * r * r;
        default: return 4.0 / 3.0 * M_PI * r * r * r;
    }
}

// Distance of q to the nearest integer, signed, in [-1/2, 1/2].
Rational integer_offset(const Rational& q) {
    Rational f = frac(q);
    return f > Rational(1, 2) ? f - 1 : f;
}

bool lex_positive(const Vec& v) {
    for (int i = 0; i < v.dim(); ++i)
        if (v[i] != 0) return v[i] > 0;
    return false;
}

struct Key {
    std::int64_t c[3];
    friend bool operator==(const Key& a, const Key& b) {
        return a.c[0] == b.c[0] && a.c[1] == b.c[1] && a.c[2] == b.c[2];
    }
    friend bool operator<(const Key& a, const Key& b) {
        return std::lexicographical_compare(a.c, a.c + 3, b.c, b.c + 3);
    }
    bool positive() const { return c[0] > 0 || (c[0] == 0 && (c[1] > 0 || (c[1] == 0 && c[2] > 0))); }
};

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : k.c) h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Distinct differences l_j - l_i, one of each +/- pair (lexicographically
// positive), in lexicographic order.
std::vector<Vec> positive_differences(const SpectrumPatch& s) {
    const std::size_t n = s.points.size();
    std::vector<Vec> out;
    if (n < 2) return out;
    const int d = s.dim;
    std::vector<Vec> rel;
    rel.reserve(n);
    for (const auto& p : s.points) rel.push_back(p - s.points[0]);

    // Scaled to a common denominator, small patches reduce to int64 keys.
    Integer den = 1;
    for (const auto& v : rel)
        for (int k = 0; k < d; ++k) den = lcm(den, boost::multiprecision::denominator(v[k]));
    const Integer limit = Integer(1) << 40;
    bool small = den < limit;
    std::vector<Key> keys;
    if (small) {
        keys.reserve(n);
        for (const auto& v : rel) {
            Key key{{0, 0, 0}};
            for (int k = 0; k < d && small; ++k) {
                Integer num = boost::multiprecision::numerator(Rational(v[k] * Rational(den)));
                if (abs(Rational(num)) >= Rational(limit)) small = false;
                else key.c[k] = num.convert_to<std::int64_t>();
            }
            keys.push_back(key);
        }
    }

    if (!small) {
        std::unordered_set<Vec, VecHash> seen;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Vec v = rel[j] - rel[i];
                seen.insert(lex_positive(v) ? v : -v);
            }
        out.assign(seen.begin(), seen.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    auto emit = [&](const Key& k) {
        Vec v(d);
        for (int c = 0; c < d; ++c) v[c] = Rational(k.c[c]) / Rational(den);
        out.push_back(std::move(v));
    };
    auto diff = [&](std::size_t i, std::size_t j) {
        Key k{{keys[j].c[0] - keys[i].c[0], keys[j].c[1] - keys[i].c[1], keys[j].c[2] - keys[i].c[2]}};
        if (!k.positive())
            for (auto& x : k.c) x = -x;
        return k;
    };

    std::int64_t span[3] = {0, 0, 0};
    for (int c = 0; c < 3; ++c) {
        std::int64_t lo = keys[0].c[c], hi = lo;
        for (const auto& k : keys) {
            lo = std::min(lo, k.c[c]);
            hi = std::max(hi, k.c[c]);
        }
        span[c] = hi - lo;
    }
    // Dense bitmap over the difference box when it is small enough.
    const double cells = double(span[0] + 1) * double(2 * span[1] + 1) * double(2 * span[2] + 1);
    if (cells <= double(1 << 28)) {
        const std::int64_t ny = 2 * span[1] + 1, nz = 2 * span[2] + 1;
        std::vector<bool> bits(static_cast<std::size_t>(cells));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Key k = diff(i, j);
                bits[static_cast<std::size_t>((k.c[0] * ny + k.c[1] + span[1]) * nz + k.c[2] + span[2])] = true;
            }
        for (std::size_t idx = 0; idx < bits.size(); ++idx) {
            if (!bits[idx]) continue;
            const auto q = static_cast<std::int64_t>(idx);
            emit(Key{{q / (ny * nz), (q / nz) % ny - span[1], q % nz - span[2]}});
        }
        return out;
    }
    std::unordered_set<Key, KeyHash> seen;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) seen.insert(diff(i, j));
    std::vector<Key> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& k : sorted) emit(k);
    return out;
}

}  // namespace

void SpectrumPatch::update_separation() {
    separation = 0;
    if (points.size() < 2) return;
    std::vector<std::array<double, 3>> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back(p.to_double());
    std::sort(pts.begin(), pts.end());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size() && pts[j][0] - pts[i][0] < best; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += (pts[j][k] - pts[i][k]) * (pts[j][k] - pts[i][k]);
            best = std::min(best, std::sqrt(s));
        }
    separation = best;
}

SpectrumPatch translated(const SpectrumPatch& s, const Vec& v, bool exact) {
    SpectrumPatch out = s;
    for (auto& p : out.points) p += v;
    std::sort(out.points.begin(), out.points.end());
    out.center = (s.center.dim() ? s.center : Vec(s.dim)) + v;
    out.exact = s.exact && exact;
    return out;
}

Lattice dual_lattice(const Lattice& l) { return Lattice::from_basis(l.basis().inverse().transpose()); }

SpectralVerdict decide_spectral(const Polytope& p) {
    if (p.dim() != 2 && p.dim() != 3) throw Error(ErrorCode::UnsupportedDimension, "spectral decisions need d = 2 or 3");
    SpectralVerdict v;
    auto vm = venkov_mcmullen(p);
    v.spectral = vm.tiles;
    v.reason = vm.reason;
    if (v.spectral) {
        v.tiling_lattice = lattice_T(p);
        v.spectrum = dual_lattice(*v.tiling_lattice);
    }
    return v;
}

SpectrumPatch patch(const Lattice& l, double r) {
    if (!(r > 0)) throw Error(ErrorCode::PreconditionFailed, "patch radius must be positive");
    SpectrumPatch s;
    s.dim = l.dim();
    s.points = l.points_in_ball(squared_radius(r));
    s.window_radius = r;
    s.center = Vec(s.dim);
    s.update_separation();
    return s;
}

OrthogonalityReport verify_orthogonality(const Polytope& p, const SpectrumPatch& s, double tol) {
    if (s.points.empty()) throw Error(ErrorCode::PreconditionFailed, "empty patch");
    if (s.dim != p.dim()) throw Error(ErrorCode::DimensionMismatch, "patch dimension");
    OrthogonalityReport r;
    r.pairs = s.points.size() * (s.points.size() - 1) / 2;
    r.tolerance = tol * p.volume().convert_to<double>();
    r.pass = true;
    const FourierPlan plan(p);
    for (const auto& xi : positive_differences(s)) {
        ++r.frequencies;
        const double a = plan.indicator(xi).abs();
        if (a > r.max_abs || !r.worst) {
            r.max_abs = std::max(r.max_abs, a);
            r.worst = xi;
        }
        if (a > r.tolerance && r.pass) {
            r.pass = false;
            r.witness = xi;
        }
    }
    return r;
}

DensityReport verify_density(const Polytope& p, const SpectrumPatch& s, double rel_tol) {
    DensityReport r;
    const double vol = p.volume().convert_to<double>();
    r.ball_volume = ball_volume(s.dim, s.window_radius);
    if (r.ball_volume * vol < 100) throw Error(ErrorCode::WindowTooSmall, "ball volume below 100 covolumes");
    r.count = s.points.size();
    r.density = static_cast<double>(r.count) / r.ball_volume;
    r.target = vol;
    r.relative_error = std::fabs(r.density - vol) / vol;
    r.pass = r.relative_error <= rel_tol;
    return r;
}

C2Report condition_C2_check(const SpectrumPatch& s, const std::vector<Vec>& taus, double tol) {
    C2Report r;
    r.tolerance = tol;
    r.pass = true;
    if (s.points.size() < 2) return r;
    for (const auto& tau : taus) {
        const Rational base = dot(s.points[0], tau);
        Rational lo = 0, hi = 0;
        for (const auto& pt : s.points) {
            Rational dev = integer_offset(dot(pt, tau) - base);
            lo = std::min(lo, dev);
            hi = std::max(hi, dev);
        }
        r.max_deviation = std::max(r.max_deviation, Rational(hi - lo).convert_to<double>());
    }
    r.pass = r.max_deviation <= tol;
    return r;
}

std::string to_string(UniquenessOutcome o) {
    switch (o) {
        case UniquenessOutcome::Pass: return "pass";
        case UniquenessOutcome::Fail: return "fail";
        case UniquenessOutcome::PrismExcluded: return "prism-excluded";
    }
    return "unknown";
}

UniquenessReport uniqueness_check(const Polytope& p, const SpectrumPatch& s) {
    UniquenessReport r;
    if (is_prism(p)) {
        r.outcome = UniquenessOutcome::PrismExcluded;
        return r;
    }
    auto verdict = decide_spectral(p);
    if (!verdict.spectral) throw Error(ErrorCode::PreconditionFailed, "uniqueness needs a spectral body");
    if (s.points.empty()) throw Error(ErrorCode::PreconditionFailed, "empty patch");
    const Lattice& dual = *verdict.spectrum;
    const Matrix inv = dual.basis().inverse();
    r.outcome = UniquenessOutcome::Pass;
    for (const auto& pt : s.points) {
        const Vec diff = pt - s.points[0];
        ++r.checked;
        bool member;
        if (s.exact) {
            member = dual.contains(diff);
        } else {
            const Vec c = inv * diff;
            member = true;
            for (int k = 0; k < c.dim(); ++k)
                if (std::fabs(integer_offset(c[k]).convert_to<double>()) > 1e-9) member = false;
        }
        if (!member) {
            r.outcome = UniquenessOutcome::Fail;
            r.witness = diff;
            break;
        }
    }
    return r;
}

SpectrumPatch prism_spectrum(const Polytope& base, const PrismSpectrumSpec& spec, double r) {
    const int d = spec.base.dim + 1;
    if (base.dim() != spec.base.dim) throw Error(ErrorCode::DimensionMismatch, "base patch dimension");
    if (d > Vec::kMaxDim) throw Error(ErrorCode::UnsupportedDimension, "prism dimension");
    if (spec.theta.size() != spec.base.points.size())
        throw Error(ErrorCode::PreconditionFailed, "one theta value per base point");
    for (const auto& t : spec.theta)
        if (t < 0 || t >= 1) throw Error(ErrorCode::ThetaOutOfRange, "theta " + to_string(t) + " outside [0, 1)");
    const Rational r2 = squared_radius(r);
    SpectrumPatch s;
    s.dim = d;
    s.window_radius = r;
    s.center = Vec(d);
    s.exact = spec.base.exact;
    for (std::size_t i = 0; i < spec.base.points.size(); ++i) {
        const Vec& g = spec.base.points[i];
        const Rational rest = r2 - g.norm2();
        if (rest < 0) continue;
        const long long span = static_cast<long long>(std::ceil(r)) + 1;
        for (long long k = -span; k <= span; ++k) {
            Rational t = Rational(k) + spec.theta[i];
            if (t * t > rest) continue;
            Vec v(d);
            v[0] = t;
            for (int c = 1; c < d; ++c) v[c] = g[c - 1];
            s.points.push_back(v);
        }
    }
    std::sort(s.points.begin(), s.points.end());
    s.update_separation();
    return s;
}

std::vector<Vec> difference_set(const SpectrumPatch& s) {
    const std::vector<Vec> pos = positive_differences(s);
    std::vector<Vec> out;
    out.reserve(2 * pos.size());
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(-*it);
    out.insert(out.end(), pos.begin(), pos.end());
    return out;
}

bool translation_equivalent(const SpectrumPatch& a, const SpectrumPatch& b) {
    if (a.dim != b.dim || a.points.size() != b.points.size()) return false;
    if (a.points.empty()) return true;
    auto normalise = [](std::vector<Vec> pts) {
        std::sort(pts.begin(), pts.end());
        const Vec first = pts.front();
        for (auto& p : pts) p -= first;
        return pts;
    };
    return normalise(a.points) == normalise(b.points);
}

namespace {

std::vector<Vec> ray_directions(const Polytope& p) {
    const int d = p.dim();
    std::vector<Vec> dirs;
    for (int k = 0; k < d; ++k) dirs.push_back(Vec::unit(d, k));
    for (const auto& f : p.facets()) dirs.push_back(f.normal);
    if (d == 3)
        for (const auto& e : p.edges()) dirs.push_back(p.vertex(e.b) - p.vertex(e.a));
    const auto& fs = p.facets();
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            dirs.push_back(fs[i].normal + fs[j].normal);
            dirs.push_back(fs[i].normal - fs[j].normal);
        }
    if (d >= 2) {
        const int n = 24;
        const double golden = M_PI * (3 - std::sqrt(5.0));
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> c;
            if (d == 2) {
                double a = M_PI * (i + 0.5) / n;
                c = {snap_rational(std::cos(a), 1000), snap_rational(std::sin(a), 1000)};
            } else {
                double z = 1 - 2 * (i + 0.5) / n;
                double rr = std::sqrt(1 - z * z);
                c = {snap_rational(rr * std::cos(golden * i), 1000), snap_rational(rr * std::sin(golden * i), 1000),
                     snap_rational(z, 1000)};
            }
            dirs.push_back(Vec(c));
        }
    }
    std::vector<Vec> out;
    for (auto& v : dirs) {
        if (v.is_zero()) continue;
        Vec u = primitive_direction(v);
        if (!lex_positive(u)) u = -u;
        out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double min_width(const Polytope& p) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : p.facets()) {
        Rational lo = dot(f.normal, p.vertex(0)), hi = lo;
        for (const auto& v : p.vertices()) {
            Rational x = dot(f.normal, v);
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        best = std::min(best, Rational(hi - lo).convert_to<double>() / std::sqrt(f.normal.norm2().convert_to<double>()));
    }
    return best;
}

}  // namespace

ChiEstimate chi_estimate(const Polytope& p) {
    ChiEstimate est;
    est.value = std::numeric_limits<double>::infinity();
    const auto center = center_of_symmetry(p);
    const double vol = p.volume().convert_to<double>();
    const double diam = std::sqrt(p.diameter_squared().convert_to<double>());
    const double h = 1 / (8 * diam);
    const double t_max = 3 / min_width(p);

    const FourierPlan plan(p);
    const auto dirs = ray_directions(p);
    est.rays = dirs.size();
    for (const auto& u : dirs) {
        const double len = std::sqrt(u.norm2().convert_to<double>());
        auto g = [&](double t) {
            ++est.evaluations;
            const Vec xi = u * rational_from_double(t / len);
            ComplexValue f = plan.indicator(xi);
            if (!center) return f.abs();
            f = f * conj(unit_phase(dot(xi, *center)));
            return f.re.convert_to<double>();
        };
        auto bisect = [&](double a, double b, double ga) {
            while (b - a > 1e-11) {
                double m = 0.5 * (a + b);
                double gm = g(m);
                if ((gm < 0) == (ga < 0)) {
                    a = m;
                    ga = gm;
                } else {
                    b = m;
                }
            }
            return 0.5 * (a + b);
        };
        auto golden_min = [&](double a, double b) {
            const double phi = (std::sqrt(5.0) - 1) / 2;
            double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
            double f1 = std::fabs(g(x1)), f2 = std::fabs(g(x2));
            while (b - a > 1e-11) {
                if (f1 < f2) {
                    b = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = b - phi * (b - a);
                    f1 = std::fabs(g(x1));
                } else {
                    a = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = a + phi * (b - a);
                    f2 = std::fabs(g(x2));
                }
            }
            return std::pair{0.5 * (a + b), std::min(f1, f2)};
        };

        const double limit = std::min(t_max, est.value);
        double t0 = 0, g0 = vol;
        double tm = -1, gm_prev = 0;
        for (double t = h; t <= limit + h; t += h) {
            double gt = g(t);
            std::optional<double> zero;
            if (gt == 0) {
                zero = t;
            } else if (center && (gt < 0) != (g0 < 0)) {
                zero = bisect(t0, t, g0);
            } else if (tm >= 0 && std::fabs(g0) < std::fabs(gm_prev) && std::fabs(g0) < std::fabs(gt)) {
                auto [x, fx] = golden_min(tm, t);
                if (fx <= 1e-8 * vol) zero = x;
            }
            if (zero) {
                if (*zero < est.value) {
                    est.value = *zero;
                    est.direction = u;
                }
                break;
            }
            tm = t0;
            gm_prev = g0;
            t0 = t;
            g0 = gt;
        }
    }
    return est;
}

}  // namespace spectile
