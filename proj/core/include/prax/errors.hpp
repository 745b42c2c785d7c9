#pragma once

#include <stdexcept>
#include <string>

namespace prax {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad symbol, bad parameter, unparsable file, ...
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// A reachable cycle prevents an acyclicity certificate.
class NotAcyclicError : public Error {
public:
    explicit NotAcyclicError(const std::string& what) : Error(what) {}
};

/// The automaton accepts words of more than one length.
class NotBlockError : public Error {
public:
    explicit NotBlockError(const std::string& what) : Error(what) {}
};

/// The automaton accepts no word at all.
class EmptyLanguageError : public Error {
public:
    explicit EmptyLanguageError(const std::string& what) : Error(what) {}
};

/// Dirichlet expectation with exponent t <= 2 diverges.
class InfiniteExpectationError : public Error {
public:
    explicit InfiniteExpectationError(const std::string& what) : Error(what) {}
};

/// An exact computation exceeded its configured space/size budget.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

} // namespace prax
