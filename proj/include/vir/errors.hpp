#pragma once

#include <stdexcept>
#include <string>

namespace vir {

// Typed domain errors.  The `name` is a stable identifier: the CLI reports it
// verbatim as the envelope status and exits with code 1.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(msg), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& msg) : Error("PoleAtPoint", msg) {}
};
struct LevelTooLarge : Error {
    explicit LevelTooLarge(const std::string& msg) : Error("LevelTooLarge", msg) {}
};
struct NoSingularVector : Error {
    explicit NoSingularVector(const std::string& msg) : Error("NoSingularVector", msg) {}
};
struct AmbiguousKernel : Error {
    explicit AmbiguousKernel(const std::string& msg) : Error("AmbiguousKernel", msg) {}
};
struct NonGenericMode : Error {
    explicit NonGenericMode(const std::string& msg) : Error("NonGenericMode", msg) {}
};
struct InvalidT : Error {
    explicit InvalidT(const std::string& msg) : Error("InvalidT", msg) {}
};
struct OrderTooLarge : Error {
    explicit OrderTooLarge(const std::string& msg) : Error("OrderTooLarge", msg) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

}  // namespace vir
