#ifndef ANYTIME_CORE_CHECK_HPP
#define ANYTIME_CORE_CHECK_HPP

#include <stdexcept>
#include <string>

// Always-on invariant check; cheap enough to keep in release builds.
#define ANYTIME_CHECK(cond, msg)                                                                       \
    do {                                                                                               \
        if (!(cond))                                                                                   \
            throw std::logic_error(std::string("invariant violated: ") + (msg) + " [" #cond "]");     \
    } while (false)

#endif
