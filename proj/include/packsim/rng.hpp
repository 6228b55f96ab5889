// Per-(node, purpose) random streams split off one master seed.
// Streams are independent by construction: each is keyed by
// (master, node, purpose) through splitmix64, so adding a node or a new
// draw site never perturbs the draws of any other stream.
#ifndef PACKSIM_RNG_HPP
#define PACKSIM_RNG_HPP

#include <cstdint>

namespace packsim {

namespace detail {
inline uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
inline uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
} // namespace detail

// Stream purposes; the tag is part of the stream key.
enum class RngUse : uint64_t {
    MacBackoff = 1,
    RouteJitter = 2,
    Mobility = 3,
    Placement = 4,
    Traffic = 5,
};

class RngStream {
public:
    RngStream() : RngStream(0, 0, RngUse::Traffic) {}
    RngStream(uint64_t master_seed, int64_t node, RngUse purpose) {
        uint64_t k = master_seed;
        (void)detail::splitmix64(k);
        k ^= 0x6a09e667f3bcc909ull + uint64_t(node);
        (void)detail::splitmix64(k);
        k ^= 0xbb67ae8584caa73bull + uint64_t(purpose);
        for (auto& w : _s) w = detail::splitmix64(k);
    }

    // xoshiro256++
    uint64_t next_u64() {
        uint64_t r = detail::rotl(_s[0] + _s[3], 23) + _s[0];
        uint64_t t = _s[1] << 17;
        _s[2] ^= _s[0];
        _s[3] ^= _s[1];
        _s[1] ^= _s[2];
        _s[0] ^= _s[3];
        _s[2] ^= t;
        _s[3] = detail::rotl(_s[3], 45);
        return r;
    }

    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // inclusive bounds; modulo bias is irrelevant at simulation scales
    int64_t uniform_int(int64_t lo, int64_t hi) {
        if (hi <= lo) return lo;
        return lo + int64_t(next_u64() % uint64_t(hi - lo + 1));
    }

private:
    uint64_t _s[4];
};

} // namespace packsim

#endif
