#pragma once

// Hand-checked amplitude tables for the square- and cubic-lattice walks.
// These are frozen oracle values: tests compare computed results against
// them, never the other way around.

#include "qwalk/stationary.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace fixtures {

struct TableEntry2 {
    std::array<std::int32_t, 2> c;
    // Components 0 and 1 are plain integers; components 2 and 3 carry an
    // extra factor r = sqrt(pq)/q (r = 1 for the symmetric coin).
    std::array<int, 4> v;
};

inline const std::vector<TableEntry2>& square_table() {
    static const std::vector<TableEntry2> t = {
        {{0, 0}, {2, 2, 2, 2}},   {{0, 1}, {1, 1, 0, 2}},   {{1, 0}, {0, 2, 1, 1}},
        {{0, -1}, {1, 1, 2, 0}},  {{-1, 0}, {2, 0, 1, 1}},  {{1, 1}, {0, 1, 0, 1}},
        {{1, -1}, {0, 1, 1, 0}},  {{-1, -1}, {1, 0, 1, 0}}, {{-1, 1}, {1, 0, 0, 1}},
    };
    return t;
}

struct TableEntry3 {
    std::array<std::int32_t, 3> c;
    std::array<int, 6> v;
};

inline const std::vector<TableEntry3>& cubic_table() {
    static const std::vector<TableEntry3> t = {
        {{0, 0, 0}, {4, 4, 4, 4, 4, 4}},    {{0, 1, 0}, {2, 2, 0, 4, 2, 2}},
        {{1, 0, 0}, {0, 4, 2, 2, 2, 2}},    {{0, -1, 0}, {2, 2, 4, 0, 2, 2}},
        {{-1, 0, 0}, {4, 0, 2, 2, 2, 2}},   {{1, 1, 0}, {0, 2, 0, 2, 1, 1}},
        {{1, -1, 0}, {0, 2, 2, 0, 1, 1}},   {{-1, -1, 0}, {2, 0, 2, 0, 1, 1}},
        {{-1, 1, 0}, {2, 0, 0, 2, 1, 1}},   {{0, 0, -1}, {2, 2, 2, 2, 4, 0}},
        {{0, 1, -1}, {1, 1, 0, 2, 2, 0}},   {{1, 0, -1}, {0, 2, 1, 1, 2, 0}},
        {{0, -1, -1}, {1, 1, 2, 0, 2, 0}},  {{-1, 0, -1}, {2, 0, 1, 1, 2, 0}},
        {{1, 1, -1}, {0, 1, 0, 1, 1, 0}},   {{1, -1, -1}, {0, 1, 1, 0, 1, 0}},
        {{-1, -1, -1}, {1, 0, 1, 0, 1, 0}}, {{-1, 1, -1}, {1, 0, 0, 1, 1, 0}},
        {{0, 0, 1}, {2, 2, 2, 2, 0, 4}},    {{0, 1, 1}, {1, 1, 0, 2, 0, 2}},
        {{1, 0, 1}, {0, 2, 1, 1, 0, 2}},    {{0, -1, 1}, {1, 1, 2, 0, 0, 2}},
        {{-1, 0, 1}, {2, 0, 1, 1, 0, 2}},   {{1, 1, 1}, {0, 1, 0, 1, 0, 1}},
        {{1, -1, 1}, {0, 1, 1, 0, 0, 1}},   {{-1, -1, 1}, {1, 0, 1, 0, 0, 1}},
        {{-1, 1, 1}, {1, 0, 0, 1, 0, 1}},
    };
    return t;
}

// The r-scaled square-lattice table as an atom; r must carry the backend of
// the atom being checked.
inline qwalk::StationaryAtom square_atom(const qwalk::Scalar& r) {
    const qwalk::Backend b = r.backend();
    auto lit = [&](int n) {
        return b == qwalk::Backend::Exact ? qwalk::Scalar::exact(qwalk::Rational(n))
                                          : qwalk::Scalar::floating(static_cast<double>(n));
    };
    std::unordered_map<qwalk::LatticePoint, qwalk::ChiralVector, qwalk::PointHash> amps;
    for (const TableEntry2& e : square_table()) {
        std::vector<qwalk::Scalar> v = {lit(e.v[0]), lit(e.v[1]), lit(e.v[2]) * r,
                                        lit(e.v[3]) * r};
        amps.emplace(qwalk::LatticePoint{e.c[0], e.c[1]}, qwalk::ChiralVector(std::move(v)));
    }
    return qwalk::StationaryAtom(2, b, std::move(amps));
}

inline qwalk::StationaryAtom cubic_atom() {
    std::unordered_map<qwalk::LatticePoint, qwalk::ChiralVector, qwalk::PointHash> amps;
    for (const TableEntry3& e : cubic_table()) {
        std::vector<qwalk::Scalar> v;
        v.reserve(6);
        for (int comp : e.v) {
            v.push_back(qwalk::Scalar::exact(qwalk::Rational(comp)));
        }
        amps.emplace(qwalk::LatticePoint{e.c[0], e.c[1], e.c[2]},
                     qwalk::ChiralVector(std::move(v)));
    }
    return qwalk::StationaryAtom(3, qwalk::Backend::Exact, std::move(amps));
}

// The three-point chain atom: a_0 = [1,1], a_{-1} = [1,0], a_{+1} = [0,1].
inline qwalk::StationaryAtom chain_atom() {
    using qwalk::Rational;
    using qwalk::Scalar;
    auto one = Scalar::exact(Rational(1));
    auto zero = Scalar::exact(Rational(0));
    std::unordered_map<qwalk::LatticePoint, qwalk::ChiralVector, qwalk::PointHash> amps;
    amps.emplace(qwalk::LatticePoint{0}, qwalk::ChiralVector({one, one}));
    amps.emplace(qwalk::LatticePoint{-1}, qwalk::ChiralVector({one, zero}));
    amps.emplace(qwalk::LatticePoint{1}, qwalk::ChiralVector({zero, one}));
    return qwalk::StationaryAtom(1, qwalk::Backend::Exact, std::move(amps));
}

}  // namespace fixtures
