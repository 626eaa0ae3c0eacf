#pragma once

#include <stdexcept>
#include <string>

namespace stokesmini {

// Base class for all library failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DegenerateTriangleError : public Error {
public:
    explicit DegenerateTriangleError(const std::string& what) : Error(what) {}
};

class UnsupportedDegreeError : public Error {
public:
    explicit UnsupportedDegreeError(const std::string& what) : Error(what) {}
};

// Point-relaxation did not settle below the displacement tolerance.
class MeshGenerationError : public Error {
public:
    MeshGenerationError(const std::string& what, int iterations, double last_displacement)
        : Error(what), iterations(iterations), last_displacement(last_displacement) {}
    int iterations;
    double last_displacement;
};

// Corner-triangle repair cannot proceed (flip would invert, or repair cycles).
class MeshRepairError : public Error {
public:
    MeshRepairError(const std::string& what, int triangle_index)
        : Error(what), triangle_index(triangle_index) {}
    int triangle_index;
};

class PivotFailureError : public Error {
public:
    PivotFailureError(const std::string& what, int row) : Error(what), row(row) {}
    int row;
};

class SingularMatrixError : public Error {
public:
    explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

}  // namespace stokesmini
