#pragma once

#include <stdexcept>
#include <string>

namespace localhom {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A facet line repeats a vertex label.
class MalformedFacet : public Error {
public:
    using Error::Error;
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(const std::string& label)
        : Error("unknown vertex '" + label + "'"), label_(label) {}
    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

class LabelCollision : public Error {
public:
    using Error::Error;
};

/// Caller violated a documented precondition (non-bijective map, adjacent
/// vertex set, subcomplex not contained in ambient, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Internal invariant broken, e.g. a boundary operator with nonzero square.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// A builtin facet list failed its load-time self check, or is missing.
class CorpusError : public Error {
public:
    using Error::Error;
};

}  // namespace localhom
