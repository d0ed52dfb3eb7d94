#pragma once

#include <stdexcept>
#include <string>

namespace kerrneg {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid user-supplied parameter, grid, or configuration. The message
/// names the offending field.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Fock-space truncation too small to keep the invariant subspace interior.
class CutoffError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Literal evaluation of the published amplitude formulas requested on a
/// branch whose effective Rabi frequency vanishes (the formulas divide by it).
class DegenerateBranchError : public Error {
public:
    using Error::Error;
};

/// Eigensolver rejected its input or failed to converge.
class EigensolverError : public Error {
public:
    using Error::Error;
};

}  // namespace kerrneg
