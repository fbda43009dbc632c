#pragma once

// The four fans used throughout the tests, plus small synthetic ones.

#include <tkring/fan.hpp>

namespace fixtures {

using tkring::Fan;
using tkring::Vec;

inline Vec vec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// Three singular 2-cones covering a proper sector; cellular for v=(5,1).
inline Fan ex36() {
    return tkring::make_fan(
        2,
        {vec({1, 0}), vec({4, 1}), vec({2, 1}), vec({0, 1})},
        {{0, 1}, {2, 1}, {3, 2}});
}

// Completion of ex36 by two smooth cones through -e1-e2.
inline Fan ex6() {
    return tkring::make_fan(
        2,
        {vec({1, 0}), vec({4, 1}), vec({2, 1}), vec({0, 1}), vec({-1, -1})},
        {{0, 1}, {2, 1}, {3, 2}, {0, 4}, {3, 4}});
}

// The complete 3-dimensional fan with nine maximal cones, one of which
// (sigma_4) is not simplicial; cellular for v=(4,3,1).
inline Fan ex38() {
    std::vector<Vec> rays = {
        vec({1, 0, 0}),    // 0: e1
        vec({0, 1, 0}),    // 1: e2
        vec({0, 0, 1}),    // 2: e3
        vec({1, 0, 1}),    // 3: e1+e3
        vec({0, 1, 1}),    // 4: e2+e3
        vec({1, 1, 1}),    // 5: e1+e2+e3
        vec({-1, -1, -1})  // 6: -e1-e2-e3
    };
    std::vector<std::vector<std::size_t>> cones = {
        {0, 1, 5}, {4, 5, 1}, {3, 5, 0}, {2, 4, 3, 5}, {0, 1, 6},
        {0, 3, 6}, {2, 3, 6}, {4, 1, 6}, {2, 4, 6}};
    return tkring::make_fan(3, rays, cones);
}

inline Fan quadrants() {
    return tkring::make_fan(
        2,
        {vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0, -1})},
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

inline Fan opposite_quadrants() {
    return tkring::make_fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0, -1})},
                            {{0, 1}, {2, 3}});
}

inline Fan overlapping() {
    return tkring::make_fan(2, {vec({1, 0}), vec({1, 1}), vec({0, 1})},
                            {{0, 1}, {0, 2}});
}

}  // namespace fixtures
