#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powstruct {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands living in rings with different variable lists.
class ArityError : public Error {
public:
    using Error::Error;
};

class UnboundVariableError : public Error {
public:
    using Error::Error;
};

// A series whose constant term is not 1 where a unit is required.
class NonUnitError : public Error {
public:
    using Error::Error;
};

// A lambda-structure asked to act on an argument outside its domain.
class UnsupportedLambdaError : public Error {
public:
    using Error::Error;
};

// Enumeration would exceed the configured tuple budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), detail_(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }
    // The message without the offset suffix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t offset_;
};

}  // namespace powstruct
