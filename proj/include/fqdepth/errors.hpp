#pragma once

#include <stdexcept>
#include <string>

namespace fqdepth {

struct NonPrimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotIrreducibleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CtxMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

struct BOutOfRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RegimeMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

} // namespace fqdepth
