#ifndef RIGIDITY_RATIONAL_HPP
#define RIGIDITY_RATIONAL_HPP

#include <array>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "rigidity/errors.hpp"

namespace rigidity {

// Exact scalar used throughout the exact-arithmetic path.
using Rat = mpq_class;

using RatVec3 = std::array<Rat, 3>;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalisation).
Rat parse_rational(const std::string& text);

// Canonical form, "p" or "p/q".
std::string rational_to_string(const Rat& value);

inline double to_double(const Rat& value) { return value.get_d(); }

inline Rat dot(const RatVec3& a, const RatVec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// splitmix64: tiny deterministic generator, identical on every platform.
// Standard library distributions are not bit-reproducible across
// implementations, so seeded sampling goes through this instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    // Random rational with numerator in [-range, range] and denominator in [1, range].
    Rat rational(std::int64_t range) {
        Rat r(uniform(-range, range), uniform(1, range));
        r.canonicalize();
        return r;
    }

    // Derives an independent stream; used to give parallel work items
    // schedule-independent randomness.
    Rng spawn(std::uint64_t salt) {
        Rng mixer(state_ ^ (salt * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
        return Rng(mixer.next());
    }

private:
    std::uint64_t state_;
};

} // namespace rigidity

#endif
