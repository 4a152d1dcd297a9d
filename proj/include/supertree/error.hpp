#pragma once

#include <stdexcept>
#include <string>

namespace supertree {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidHypergraph : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SizeGuardError : public Error {
public:
    using Error::Error;
};

class NotASupertree : public Error {
public:
    using Error::Error;
};

class MultipleEdgeError : public Error {
public:
    using Error::Error;
};

class DisconnectedInput : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, double bracket_width)
        : Error(what), bracket_width_(bracket_width) {}
    double bracket_width() const noexcept { return bracket_width_; }

private:
    double bracket_width_;
};

class PositivityError : public Error {
public:
    using Error::Error;
};

class IncidenceMismatch : public Error {
public:
    using Error::Error;
};

class BracketFailure : public Error {
public:
    BracketFailure(const std::string& what, double alpha) : Error(what), alpha_(alpha) {}
    double alpha() const noexcept { return alpha_; }

private:
    double alpha_;
};

class LimitExceeded : public Error {
public:
    using Error::Error;
};

class CounterexampleFound : public Error {
public:
    using Error::Error;
};

class SearchExhausted : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace supertree
