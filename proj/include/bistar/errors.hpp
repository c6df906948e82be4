#pragma once

#include <stdexcept>
#include <string>

namespace bistar {

/// Invalid vertex, color, or parameter passed to a library call.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input: witness files, pattern strings, DIMACS, solver transcripts.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A solver model that cannot be mapped back onto a coloring.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Construction parameters for which no object of the required kind exists.
class InfeasibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace bistar
