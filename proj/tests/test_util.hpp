#pragma once

#include "gammalgo/qfield.hpp"

#include <random>

namespace gammalgo::testutil {

inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5eed5eed5eedULL)
{
    return std::mt19937_64(seed);
}

inline Integer rand_integer(std::mt19937_64 &rng, unsigned bits, bool allow_negative = true)
{
    Integer x = 0;
    unsigned filled = 0;
    while (filled < bits) {
        x <<= 64;
        x += rng();
        filled += 64;
    }
    x >>= (filled - bits);
    if (allow_negative && (rng() & 1)) {
        x = -x;
    }
    return x;
}

inline Rational rand_rational(std::mt19937_64 &rng, unsigned bits)
{
    Integer num = rand_integer(rng, bits);
    Integer den = rand_integer(rng, bits, false) + 1;
    return Rational(num, den);
}

inline QuadElem rand_quad(std::mt19937_64 &rng, const Integer &d, unsigned bits)
{
    return QuadElem(rand_rational(rng, bits), rand_rational(rng, bits), d);
}

} // namespace gammalgo::testutil
