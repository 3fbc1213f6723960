#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rl {

// Base class for the library's domain errors. `name()` is the stable
// identifier reported on the CLI error stream.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(msg.empty() ? name : name + ": " + msg), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& m = "") : Error("NotInvertible", m) {}
};
struct ZeroPowerZero : Error {
    explicit ZeroPowerZero(const std::string& m = "") : Error("ZeroPowerZero", m) {}
};
struct Undetermined : Error {
    explicit Undetermined(const std::string& m = "") : Error("Undetermined", m) {}
};
struct NoRootInField : Error {
    explicit NoRootInField(const std::string& m = "") : Error("NoRootInField", m) {}
};
struct OrderNotZero : Error {
    explicit OrderNotZero(const std::string& m = "") : Error("OrderNotZero", m) {}
};
struct OrderNotOne : Error {
    explicit OrderNotOne(const std::string& m = "") : Error("OrderNotOne", m) {}
};
struct CompositionUndefined : Error {
    explicit CompositionUndefined(const std::string& m = "") : Error("CompositionUndefined", m) {}
};
struct NotTangentToIdentity : Error {
    explicit NotTangentToIdentity(const std::string& m = "") : Error("NotTangentToIdentity", m) {}
};
struct NotInSubgroup : Error {
    explicit NotInSubgroup(const std::string& m = "") : Error("NotInSubgroup", m) {}
};
struct InvalidGeneratingSeries : Error {
    explicit InvalidGeneratingSeries(const std::string& m = "") : Error("InvalidGeneratingSeries", m) {}
};
struct InvalidF : Error {
    explicit InvalidF(const std::string& m = "") : Error("InvalidF", m) {}
};
struct ZeroLeadingA : Error {
    explicit ZeroLeadingA(const std::string& m = "") : Error("ZeroLeadingA", m) {}
};
struct InvalidTangent : Error {
    explicit InvalidTangent(const std::string& m = "") : Error("InvalidTangent", m) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& m = "") : Error("DivisionByZero", m) {}
};
struct UsageError : Error {
    explicit UsageError(const std::string& m = "") : Error("UsageError", m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m = "") : Error("ParseError", m) {}
};

} // namespace rl
