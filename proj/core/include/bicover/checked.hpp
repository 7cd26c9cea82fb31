#ifndef BICOVER_CHECKED_HPP
#define BICOVER_CHECKED_HPP

#include <stdexcept>

namespace bicover
{
    // All counting in this library is exact. Overflow throws instead of
    // wrapping; callers that need more range use big integers explicitly.

    inline long long checked_add(long long a, long long b)
    {
        long long r;
        if (__builtin_add_overflow(a, b, &r))
            throw std::overflow_error("integer overflow in addition");
        return r;
    }

    inline long long checked_sub(long long a, long long b)
    {
        long long r;
        if (__builtin_sub_overflow(a, b, &r))
            throw std::overflow_error("integer overflow in subtraction");
        return r;
    }

    inline long long checked_mul(long long a, long long b)
    {
        long long r;
        if (__builtin_mul_overflow(a, b, &r))
            throw std::overflow_error("integer overflow in multiplication");
        return r;
    }
}

#endif
