#pragma once

#include <stdexcept>
#include <string>

namespace narayana {

// Root of every domain error raised by the library. Argument-contract
// violations (n < 1, bad distribution parameters) use std::invalid_argument.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A term or an input value would leave the supported integer range.
class CapacityExceeded : public Error {
public:
    using Error::Error;
};

// The cubic root solver ran out of iterations.
class NonConvergence : public Error {
public:
    using Error::Error;
};

// Exhaustive decomposition search visited more nodes than its budget allows.
class SearchBudgetExceeded : public Error {
public:
    using Error::Error;
};

// A bit string violates the structure of the code it is decoded as.
class MalformedCodeword : public Error {
public:
    using Error::Error;
};

// Strict stream decoding found bits after the last codeword that are not padding.
class TrailingGarbage : public Error {
public:
    using Error::Error;
};

} // namespace narayana
