#pragma once

#include <stdexcept>
#include <string>

namespace ct {

// Base for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input files / grammar violations. CLI exit code 2.
struct FormatError : Error {
    explicit FormatError(const std::string& what) : Error(what) {}
};

// Semantically invalid structures (failed preconditions, failed certification).
// CLI exit code 1.
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// Two distinct corners of a cell complex joined by both a red and a blue path;
// such a complex is not the midsection of any slice.
struct ObstructionError : ValidationError {
    explicit ObstructionError(const std::string& what) : ValidationError(what) {}
};

// Vertex identification collapsed a cell: an emitted simplex would have fewer
// than D+1 distinct vertices.
struct CollisionError : ValidationError {
    explicit CollisionError(const std::string& what) : ValidationError(what) {}
};

// Configurable search/state caps exceeded. CLI exit code 3.
struct ResourceCapError : Error {
    explicit ResourceCapError(const std::string& what) : Error(what) {}
};

}  // namespace ct
