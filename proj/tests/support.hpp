#ifndef SPECTILE_TESTS_SUPPORT_HPP
#define SPECTILE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spectile/rational.hpp"

namespace spectile::test {

inline Rational q(long long p, long long d = 1) { return Rational(p, d); }

inline Vec v2(Rational a, Rational b) { return Vec{a, b}; }
inline Vec v3(Rational a, Rational b, Rational c) { return Vec{a, b, c}; }

/// Frozen values from tests/fixtures/oracles.py.
inline const nlohmann::json& derived() {
    static const nlohmann::json j = [] {
        std::ifstream in(std::string(SPECTILE_FIXTURE_DIR) + "/derived.json");
        std::stringstream ss;
        ss << in.rdbuf();
        return nlohmann::json::parse(ss.str());
    }();
    return j;
}

inline Rational random_rational(std::mt19937_64& rng, long long lo, long long hi, long long max_den) {
    std::uniform_int_distribution<long long> den(1, max_den);
    long long d = den(rng);
    std::uniform_int_distribution<long long> num(lo * d, hi * d);
    return Rational(num(rng), d);
}

inline Vec random_vec(std::mt19937_64& rng, int dim, long long lo, long long hi, long long max_den) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = random_rational(rng, lo, hi, max_den);
    return v;
}

/// Random invertible rational matrix with small entries.
inline Matrix random_invertible(std::mt19937_64& rng, int dim) {
    for (;;) {
        Matrix a(dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) a(r, c) = random_rational(rng, -2, 2, 3);
        if (a.determinant() != 0) return a;
    }
}

inline std::set<Vec> as_set(const std::vector<Vec>& pts) { return {pts.begin(), pts.end()}; }

}  // namespace spectile::test

#endif  // SPECTILE_TESTS_SUPPORT_HPP
