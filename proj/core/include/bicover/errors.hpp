#ifndef BICOVER_ERRORS_HPP
#define BICOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bicover
{
    // Malformed or out-of-contract input: bad vertex ranges, overlapping
    // biclique sides, unparseable files, length mismatches.
    class InputError : public std::runtime_error
    {
    public:
        explicit InputError(const std::string & message) :
            std::runtime_error(message)
        {
        }
    };

    // A search exhausted its budget before finding an object that theory
    // guarantees to exist. Distinct from a rejection: it signals that the
    // budget was too small, never that the object does not exist.
    class ResourceError : public std::runtime_error
    {
    public:
        explicit ResourceError(const std::string & message) :
            std::runtime_error(message)
        {
        }
    };
}

#endif
