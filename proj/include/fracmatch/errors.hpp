#pragma once

#include <stdexcept>
#include <string>

namespace fracmatch {

class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, edge list, CLI values).
class ParseError : public Error {
public:
	using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
	using Error::Error;
};

/// A fractional matching handed to a routine that requires an optimum is not one.
class NotOptimalError : public Error {
public:
	using Error::Error;
};

/// A structure that the theory guarantees was not found. Always a bug upstream.
class InternalError : public Error {
public:
	using Error::Error;
};

} // namespace fracmatch
