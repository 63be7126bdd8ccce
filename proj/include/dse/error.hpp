#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dse {

// Base of every error this library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

class GridError : public Error {
public:
    using Error::Error;
};

class DegeneratePairError : public Error {
public:
    using Error::Error;
};

class KinematicError : public Error {
public:
    using Error::Error;
};

/// A non-finite value appeared while summing the gap-equation integrals.
/// Indices are 0-based: external node, radial node, angular node.
class NumericalFailure : public Error {
public:
    NumericalFailure(std::size_t ext, std::size_t rad, std::size_t ang, const std::string& what)
        : Error(what + " at (i=" + std::to_string(ext) + ", j=" + std::to_string(rad) +
                ", k=" + std::to_string(ang) + ")"),
          ext_index(ext), rad_index(rad), ang_index(ang) {}

    std::size_t ext_index;
    std::size_t rad_index;
    std::size_t ang_index;
};

class ExecutionError : public Error {
public:
    using Error::Error;
};

class ConsistencyError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace dse
