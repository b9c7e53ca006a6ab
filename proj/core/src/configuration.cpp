#include "fsgraph/configuration.hpp"

#include <numeric>
#include <sstream>

namespace fsg {

std::vector<uint16_t> Configuration::inverse() const {
    std::vector<uint16_t> inv(map.size());
    for (std::size_t x = 0; x < map.size(); ++x) inv[map[x]] = static_cast<uint16_t>(x);
    return inv;
}

bool Configuration::is_permutation() const {
    std::vector<bool> seen(map.size(), false);
    for (uint16_t v : map) {
        if (v >= map.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Configuration identity_configuration(int n) {
    std::vector<uint16_t> m(n);
    std::iota(m.begin(), m.end(), 0);
    return Configuration(std::move(m));
}

Parity parity_class(const Configuration& c) {
    // count cycles of the permutation
    int n = c.size();
    std::vector<bool> seen(n, false);
    int transpositions = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = c.map[j];
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw input_error("factorial out of 64-bit range");
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

uint64_t perm_rank(const Configuration& c) {
    int n = c.size();
    if (n > 20) throw input_error("perm_rank: n too large");
    uint64_t rank = 0;
    // O(n^2) Lehmer code; fine at table scale
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (c.map[j] < c.map[i]) ++smaller;
        rank += smaller * factorial(n - 1 - i);
    }
    return rank;
}

Configuration perm_unrank(int n, uint64_t rank) {
    std::vector<uint16_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<uint16_t> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        uint64_t f = factorial(n - 1 - i);
        auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + idx);
    }
    return Configuration(std::move(out));
}

std::string configuration_word(const Configuration& c) {
    std::ostringstream os;
    for (int i = 0; i < c.size(); ++i) {
        if (i) os << ' ';
        os << c.map[i];
    }
    return os.str();
}

Configuration configuration_from_word(const std::string& word) {
    std::istringstream is(word);
    std::vector<uint16_t> m;
    int v;
    while (is >> v) {
        if (v < 0 || v > 0xffff) throw input_error("configuration word value out of range");
        m.push_back(static_cast<uint16_t>(v));
    }
    Configuration c(std::move(m));
    if (!c.is_permutation()) throw input_error("configuration word is not a permutation");
    return c;
}

}  // namespace fsg
