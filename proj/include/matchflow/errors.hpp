#pragma once

#include <stdexcept>
#include <string>

namespace matchflow {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotFoundError : Error {
    explicit NotFoundError(const std::string& what) : Error(what) {}
};

struct InvalidPairError : Error {
    explicit InvalidPairError(const std::string& what) : Error(what) {}
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(what) {}
};

struct TooLargeError : Error {
    explicit TooLargeError(const std::string& what) : Error(what) {}
};

struct IllegalCrossEdgeError : Error {
    explicit IllegalCrossEdgeError(const std::string& what) : Error(what) {}
};

struct InvalidSetsError : Error {
    explicit InvalidSetsError(const std::string& what) : Error(what) {}
};

struct InvalidProfileError : Error {
    explicit InvalidProfileError(const std::string& what) : Error(what) {}
};

struct BadParameterError : Error {
    explicit BadParameterError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace matchflow
