#include "spectile/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <unordered_set>

namespace spectile::oracle {

namespace {

// 53 random bits mapped to [0, 1); fixed across standard libraries.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct DoubleHalfspace {
    Point3 n{};
    double offset = 0;
};

std::vector<DoubleHalfspace> double_halfspaces(const Polytope& p) {
    std::vector<DoubleHalfspace> out;
    for (const auto& f : p.facets()) {
        DoubleHalfspace h;
        for (int i = 0; i < p.dim(); ++i) h.n[static_cast<std::size_t>(i)] = f.normal[i].convert_to<double>();
        h.offset = f.offset.convert_to<double>();
        out.push_back(h);
    }
    return out;
}

bool inside(const std::vector<DoubleHalfspace>& hs, const Point3& x, int d) {
    for (const auto& h : hs) {
        double s = 0;
        for (int i = 0; i < d; ++i) s += h.n[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
        if (s > h.offset) return false;
    }
    return true;
}

Point3 sample_point(std::mt19937_64& rng, const SampleConfig& cfg, int d) {
    Point3 x{};
    for (int i = 0; i < d; ++i) {
        auto k = static_cast<std::size_t>(i);
        x[k] = cfg.box_lo[k] + (cfg.box_hi[k] - cfg.box_lo[k]) * uniform01(rng);
    }
    return x;
}

double box_volume(const SampleConfig& cfg, int d) {
    double v = 1;
    for (int i = 0; i < d; ++i) v *= cfg.box_hi[static_cast<std::size_t>(i)] - cfg.box_lo[static_cast<std::size_t>(i)];
    return v;
}

}  // namespace

SampleConfig bounding_config(const Polytope& p, long long count, std::uint64_t seed) {
    SampleConfig cfg;
    cfg.count = count;
    cfg.seed = seed;
    for (int i = 0; i < p.dim(); ++i) {
        auto k = static_cast<std::size_t>(i);
        cfg.box_lo[k] = cfg.box_hi[k] = p.vertex(0)[i].convert_to<double>();
        for (const auto& v : p.vertices()) {
            double x = v[i].convert_to<double>();
            cfg.box_lo[k] = std::min(cfg.box_lo[k], x);
            cfg.box_hi[k] = std::max(cfg.box_hi[k], x);
        }
    }
    return cfg;
}

VolumeEstimate mc_volume(const Polytope& p, const SampleConfig& cfg) {
    const int d = p.dim();
    const auto hs = double_halfspaces(p);
    std::mt19937_64 rng(cfg.seed);
    long long hits = 0;
    for (long long s = 0; s < cfg.count; ++s)
        if (inside(hs, sample_point(rng, cfg, d), d)) ++hits;
    const double bv = box_volume(cfg, d);
    const double frac = static_cast<double>(hits) / static_cast<double>(cfg.count);
    VolumeEstimate e;
    e.value = bv * frac;
    e.stderr_ = bv * std::sqrt(frac * (1 - frac) / static_cast<double>(cfg.count));
    e.count = cfg.count;
    e.seed = cfg.seed;
    return e;
}

std::vector<Vec> group_elements(const std::vector<Vec>& generators, const Rational& radius_squared) {
    if (generators.empty()) return {};
    const int d = generators.front().dim();
    Rational step2 = 0;
    for (const auto& g : generators) step2 = std::max(step2, g.norm2());
    // Walks may leave the target ball; allow two extra generator lengths.
    const double reach = std::sqrt(radius_squared.convert_to<double>()) + 2 * std::sqrt(step2.convert_to<double>());
    const Rational reach2 = rational_from_double(reach * reach);

    std::unordered_set<Vec, VecHash> seen{Vec(d)};
    std::deque<Vec> queue{Vec(d)};
    while (!queue.empty()) {
        Vec x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators)
            for (int s : {1, -1}) {
                Vec y = s > 0 ? x + g : x - g;
                if (y.norm2() > reach2 || seen.count(y)) continue;
                seen.insert(y);
                queue.push_back(std::move(y));
            }
    }
    std::vector<Vec> out;
    for (const auto& x : seen)
        if (x.norm2() <= radius_squared) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

Multiplicity multiplicity_sample(const Polytope& p, const std::vector<Vec>& generators, const SampleConfig& cfg) {
    const int d = p.dim();
    {
        std::vector<Vec> span{Vec(d)};
        span.insert(span.end(), generators.begin(), generators.end());
        if (affine_dimension(span) < d) throw Error(ErrorCode::RankDeficient, "generators do not span R^d");
    }
    double box_diam2 = 0;
    for (int i = 0; i < d; ++i) {
        double w = cfg.box_hi[static_cast<std::size_t>(i)] - cfg.box_lo[static_cast<std::size_t>(i)];
        box_diam2 += w * w;
    }
    const double radius = std::sqrt(p.diameter_squared().convert_to<double>()) + std::sqrt(box_diam2);
    const auto elems_exact = group_elements(generators, rational_from_double(radius * radius));

    struct Elem {
        Point3 t{};
    };
    std::vector<Elem> elems;
    for (const auto& e : elems_exact) {
        Elem el;
        for (int i = 0; i < d; ++i) el.t[static_cast<std::size_t>(i)] = e[i].convert_to<double>();
        elems.push_back(el);
    }
    std::sort(elems.begin(), elems.end(), [](const Elem& a, const Elem& b) { return a.t[0] < b.t[0]; });
    std::vector<double> keys;
    for (const auto& e : elems) keys.push_back(e.t[0]);

    const auto hs = double_halfspaces(p);
    const SampleConfig body = bounding_config(p, 0, 0);

    Multiplicity m;
    m.count = cfg.count;
    m.seed = cfg.seed;
    m.group_elements = elems.size();
    m.min = std::numeric_limits<int>::max();
    std::mt19937_64 rng(cfg.seed);
    for (long long s = 0; s < cfg.count; ++s) {
        const Point3 x = sample_point(rng, cfg, d);
        // x in P + t  <=>  x - t in P, so t lies in x - bbox(P).
        const double lo0 = x[0] - body.box_hi[0], hi0 = x[0] - body.box_lo[0];
        auto first = std::lower_bound(keys.begin(), keys.end(), lo0);
        int count = 0;
        for (auto it = first; it != keys.end() && *it <= hi0; ++it) {
            const Point3& t = elems[static_cast<std::size_t>(it - keys.begin())].t;
            Point3 y{};
            bool in_box = true;
            for (int i = 0; i < d; ++i) {
                auto k = static_cast<std::size_t>(i);
                y[k] = x[k] - t[k];
                if (y[k] < body.box_lo[k] || y[k] > body.box_hi[k]) { in_box = false; break; }
            }
            if (in_box && inside(hs, y, d)) ++count;
        }
        ++m.histogram[count];
        m.min = std::min(m.min, count);
        m.max = std::max(m.max, count);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Simplex Fourier transform

namespace {

Rational binom(long n, long k) {
    Rational r = 1;
    for (long i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
    return r;
}

// (-2 pi i)^k for any integer k.
ComplexValue z_power(long k) {
    HighFloat two_pi = 2 * high_pi();
    HighFloat mag = boost::multiprecision::pow(two_pi, static_cast<int>(k < 0 ? -k : k));
    if (k < 0) mag = 1 / mag;
    // (-i)^k, and (-2 pi i)^-1 = i / (2 pi)
    long r = ((k % 4) + 4) % 4;
    ComplexValue c;
    switch (r) {
        case 0: c.re = mag; break;
        case 1: c.im = -mag; break;
        case 2: c.re = -mag; break;
        default: c.im = mag; break;
    }
    c.err_bound = 4 * working_epsilon() * mag.convert_to<double>();
    return c;
}

}  // namespace

ComplexValue simplex_ft(const std::vector<Vec>& simplex, const Vec& xi) {
    const int d = xi.dim();
    if (static_cast<int>(simplex.size()) != d + 1) throw Error(ErrorCode::DimensionMismatch, "simplex needs d+1 vertices");
    Matrix edges(d);
    for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) edges(r, c) = simplex[static_cast<std::size_t>(c + 1)][r] - simplex[0][r];
    const Rational jac = abs(edges.determinant());  // d! * volume

    // Group the exponents a_j = <xi, w_j> by exact value.
    std::map<Rational, long> mult;
    for (const auto& w : simplex) ++mult[dot(xi, w)];

    // Divided difference of e^{zt} at the nodes, z = -2 pi i, as a sum of
    // residues of e^{zt} / prod (t - a_j).
    ComplexValue dd;
    for (const auto& [b, m] : mult) {
        // H(s) = prod_{c != b} (b - c + s)^{-m_c}, Taylor coefficients up to s^{m-1}.
        std::vector<Rational> h(static_cast<std::size_t>(m), Rational(0));
        h[0] = 1;
        for (const auto& [c, mc] : mult) {
            if (c == b) continue;
            const Rational delta = b - c;
            std::vector<Rational> f(static_cast<std::size_t>(m));
            Rational dpow = 1;
            for (long i = 0; i < mc; ++i) dpow /= delta;
            for (long k = 0; k < m; ++k) {
                Rational coeff = binom(mc + k - 1, k) * dpow;
                if (k % 2) coeff = -coeff;
                f[static_cast<std::size_t>(k)] = coeff;
                dpow /= delta;
            }
            std::vector<Rational> prod(static_cast<std::size_t>(m), Rational(0));
            for (long i = 0; i < m; ++i)
                for (long j = 0; i + j < m; ++j)
                    prod[static_cast<std::size_t>(i + j)] += h[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)];
            h = std::move(prod);
        }
        // [s^{m-1}] e^{zs} H(s) = sum_n z^n / n! * H_{m-1-n}; the overall
        // factor jac / z^d is folded into each term.
        ComplexValue residue;
        Rational fact = 1;
        for (long n = 0; n < m; ++n) {
            if (n > 0) fact *= n;
            const Rational coeff = h[static_cast<std::size_t>(m - 1 - n)] * jac / fact;
            if (coeff == 0) continue;
            residue += z_power(n - d) * to_high(coeff);
        }
        dd += unit_phase(b) * residue;
    }
    return dd;
}

std::vector<std::vector<Vec>> fan_simplices(const Polytope& p) {
    const auto& v = p.vertices();
    std::vector<std::vector<Vec>> out;
    if (p.dim() == 1) {
        out.push_back({v[0], v[1]});
        return out;
    }
    for (const auto& f : p.facets()) {
        if (std::find(f.vertices.begin(), f.vertices.end(), 0) != f.vertices.end()) continue;
        if (p.dim() == 2) {
            out.push_back({v[0], v[f.vertices[0]], v[f.vertices[1]]});
        } else {
            for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i)
                out.push_back({v[0], v[f.vertices[0]], v[f.vertices[i]], v[f.vertices[i + 1]]});
        }
    }
    return out;
}

ComplexValue simplex_ft(const Polytope& p, const Vec& xi) {
    if (xi.dim() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "frequency dimension");
    if (xi.is_zero()) {
        ComplexValue v;
        v.re = to_high(simplex_volume(p));
        return v;
    }
    ComplexValue total;
    for (const auto& s : fan_simplices(p)) total += simplex_ft(s, xi);
    return total;
}

Rational simplex_volume(const Polytope& p) {
    Rational total = 0;
    Rational dfact = p.dim() == 3 ? 6 : (p.dim() == 2 ? 2 : 1);
    for (const auto& s : fan_simplices(p)) {
        const int d = p.dim();
        Matrix m(d);
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < d; ++r) m(r, c) = s[static_cast<std::size_t>(c + 1)][r] - s[0][r];
        total += abs(m.determinant());
    }
    return total / dfact;
}

Rational shoelace_area(const std::vector<Vec>& cycle) {
    Rational twice = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Vec& a = cycle[i];
        const Vec& b = cycle[(i + 1) % cycle.size()];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return abs(twice) / 2;
}

// ---------------------------------------------------------------------------
// Combinatorial isomorphism

namespace {

struct Incidence {
    std::vector<std::vector<std::size_t>> facets;  // cyclic (d = 3) vertex lists
    std::size_t vertices = 0;
};

bool extend(const Incidence& a, const Incidence& b, const std::vector<std::size_t>& order, std::size_t k,
            std::vector<long>& vmap, std::vector<long>& vinv, std::vector<bool>& used) {
    if (k == order.size()) return true;
    const auto& fa = a.facets[order[k]];
    const std::size_t n = fa.size();
    for (std::size_t g = 0; g < b.facets.size(); ++g) {
        if (used[g] || b.facets[g].size() != n) continue;
        const auto& fb = b.facets[g];
        for (std::size_t rot = 0; rot < n; ++rot)
            for (int dir : {1, -1}) {
                std::vector<std::pair<std::size_t, std::size_t>> added;
                bool ok = true;
                for (std::size_t i = 0; i < n && ok; ++i) {
                    const std::size_t j = dir > 0 ? (rot + i) % n : (rot + n - i) % n;
                    const std::size_t u = fa[i], w = fb[j];
                    if (vmap[u] >= 0) {
                        ok = vmap[u] == static_cast<long>(w);
                    } else if (vinv[w] >= 0) {
                        ok = false;
                    } else {
                        vmap[u] = static_cast<long>(w);
                        vinv[w] = static_cast<long>(u);
                        added.emplace_back(u, w);
                    }
                }
                if (ok) {
                    used[g] = true;
                    if (extend(a, b, order, k + 1, vmap, vinv, used)) return true;
                    used[g] = false;
                }
                for (auto [u, w] : added) {
                    vmap[u] = -1;
                    vinv[w] = -1;
                }
            }
    }
    return false;
}

}  // namespace

bool combinatorially_isomorphic(const Polytope& a, const Polytope& b) {
    if (a.dim() != b.dim()) return false;
    if (a.vertices().size() != b.vertices().size() || a.facets().size() != b.facets().size()) return false;
    if (a.dim() < 3) return true;  // polygons and intervals: equal counts suffice
    Incidence ia{{}, a.vertices().size()}, ib{{}, b.vertices().size()};
    for (const auto& f : a.facets()) ia.facets.push_back(f.vertices);
    for (const auto& f : b.facets()) ib.facets.push_back(f.vertices);

    // Order facets so each one meets an earlier one, which prunes early.
    std::vector<std::size_t> order{0};
    std::vector<bool> placed(ia.facets.size(), false);
    placed[0] = true;
    while (order.size() < ia.facets.size()) {
        bool grew = false;
        for (std::size_t f = 0; f < ia.facets.size() && !grew; ++f) {
            if (placed[f]) continue;
            for (std::size_t g : order) {
                const auto& x = ia.facets[f];
                const auto& y = ia.facets[g];
                if (std::any_of(x.begin(), x.end(), [&](std::size_t v) { return std::find(y.begin(), y.end(), v) != y.end(); })) {
                    order.push_back(f);
                    placed[f] = true;
                    grew = true;
                    break;
                }
            }
        }
        if (!grew) return false;
    }
    std::vector<long> vmap(ia.vertices, -1), vinv(ib.vertices, -1);
    std::vector<bool> used(ib.facets.size(), false);
    return extend(ia, ib, order, 0, vmap, vinv, used);
}

}  // namespace spectile::oracle
