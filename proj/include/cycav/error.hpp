#pragma once

#include <stdexcept>

namespace cycav {

// Base type for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input sequence is not a permutation of {1,...,n}.
class InvalidPermutation : public Error {
public:
    using Error::Error;
};

// A value occurs more than once in a would-be permutation.
class DuplicateValue : public InvalidPermutation {
public:
    using InvalidPermutation::InvalidPermutation;
};

// The permutation is not a single n-cycle.
class NotCyclic : public Error {
public:
    using Error::Error;
};

// A word lies outside the domain of a structured map.
class DomainViolation : public Error {
public:
    using Error::Error;
};

// A position or size argument is outside its allowed range.
class InvalidPosition : public Error {
public:
    using Error::Error;
};

// Requested size exceeds a configured search cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// n lies below the first index where a sequence family is defined.
class BelowRange : public Error {
public:
    using Error::Error;
};

// Theorem id missing from the verification registry.
class UnknownTheorem : public Error {
public:
    using Error::Error;
};

// Malformed textual input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace cycav
