#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsgraph/errors.hpp"

namespace fsg {

// A bijection V(X) -> V(Y), stored as map[x] = y. One vertex of FS(X,Y).
struct Configuration {
    std::vector<uint16_t> map;

    Configuration() = default;
    explicit Configuration(std::vector<uint16_t> m) : map(std::move(m)) {}

    int size() const { return static_cast<int>(map.size()); }
    uint16_t operator()(int x) const { return map[x]; }
    bool operator==(const Configuration& o) const { return map == o.map; }
    bool operator<(const Configuration& o) const { return map < o.map; }

    std::vector<uint16_t> inverse() const;
    bool is_permutation() const;
};

Configuration identity_configuration(int n);

struct ConfigHash {
    std::size_t operator()(const Configuration& c) const {
        std::size_t h = 1469598103934665603ull;
        for (uint16_t v : c.map) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

enum class Parity { even, odd };

// Permutation sign; adjacent FS configurations always have opposite class.
Parity parity_class(const Configuration& c);

// Lehmer-code rank in [0, n!) for dense visited tables; inverse of unrank.
// Usable up to n=20 (n! fits in 64 bits), tables practical up to n ~ 10.
uint64_t perm_rank(const Configuration& c);
Configuration perm_unrank(int n, uint64_t rank);
uint64_t factorial(int n);

// One-line word "s(0) s(1) ... s(n-1)".
std::string configuration_word(const Configuration& c);
Configuration configuration_from_word(const std::string& word);

}  // namespace fsg
