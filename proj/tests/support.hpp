// Shared helpers for the test suites: seeded random words and graphs.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "thue/word.hpp"

namespace testsupport {

inline thue::Word random_word(std::mt19937& rng, std::size_t len, int alphabet) {
    std::uniform_int_distribution<int> pick(0, alphabet - 1);
    std::vector<thue::Letter> v(len);
    for (auto& a : v) a = pick(rng);
    return thue::Word(std::move(v));
}

// Random square-free ternary word built letter by letter; restarts on dead ends.
inline thue::Word random_squarefree(std::mt19937& rng, std::size_t len) {
    while (true) {
        thue::SquareScanner scan;
        bool dead = false;
        for (std::size_t i = 0; i < len && !dead; ++i) {
            int order[3] = {0, 1, 2};
            std::shuffle(order, order + 3, rng);
            bool placed = false;
            for (int c : order) {
                if (scan.push(c) == 0) { placed = true; break; }
                scan.pop();
            }
            if (!placed) dead = true;
        }
        if (!dead) return scan.word();
    }
}

} // namespace testsupport
