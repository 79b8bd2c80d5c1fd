#ifndef GTB_ERRORS_HPP
#define GTB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gtb {

// Base class for every domain error raised by the kernel.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZeroField : public Error {
public:
    DivisionByZeroField() : Error("division by the zero rational function") {}
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error("syntax error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class UnknownVariable : public Error {
public:
    UnknownVariable(const std::string& name, std::size_t nvars)
        : Error("unknown variable '" + name + "' on a chart with " +
                std::to_string(nvars) + " variables") {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what)
        : Error("dimension mismatch: " + what) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& what = "determinant is identically zero")
        : Error(what) {}
};

class DegreeError : public Error {
public:
    explicit DegreeError(const std::string& what) : Error(what) {}
};

class FrameNotIsotropic : public Error {
public:
    explicit FrameNotIsotropic(const std::string& what) : Error(what) {}
};

class RankMismatch : public Error {
public:
    explicit RankMismatch(const std::string& what) : Error(what) {}
};

class DegenerateB : public Error {
public:
    DegenerateB() : Error("the 2-form b is degenerate as a rational-function matrix") {}
};

class DimensionOdd : public Error {
public:
    DimensionOdd() : Error("a nondegenerate 2-form requires even chart dimension") {}
};

class NotCompatible : public Error {
public:
    explicit NotCompatible(const std::string& what) : Error(what) {}
};

class NotHermitianInput : public Error {
public:
    explicit NotHermitianInput(const std::string& what) : Error(what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

class SchemaError : public Error {
public:
    SchemaError(const std::string& field, const std::string& reason)
        : Error("scenario field '" + field + "': " + reason), field_(field), reason_(reason) {}
    const std::string& field() const { return field_; }
    const std::string& reason() const { return reason_; }

private:
    std::string field_;
    std::string reason_;
};

class DegenerateMetric : public Error {
public:
    DegenerateMetric() : Error("metric determinant is identically zero") {}
};

}  // namespace gtb

#endif
