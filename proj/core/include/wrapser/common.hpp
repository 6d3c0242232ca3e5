// wrapser: shared typedefs and error types
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wrapser {

typedef std::int64_t index_t;
typedef std::uint32_t coeff_t;
typedef int vertex_t;

// input that cannot be parsed or fails validation (duplicate points, bad header, ...)
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// exact predicate returned zero: the point set violates general position
struct DegeneracyError : std::runtime_error {
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// the given function is not generalized-discrete-Morse (carries a witness)
struct NotMorseError : std::runtime_error {
    explicit NotMorseError(const std::string& what) : std::runtime_error(what) {}
};

// a claimed invariant of the mathematics failed (these indicate bugs, not bad input)
struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wrapser
