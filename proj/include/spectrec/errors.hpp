#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spectrec {

// Input violates a documented invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input; position is a 0-based character offset.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& msg, std::size_t position)
        : ValidationError(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A size bound was exceeded; `size` is the offending quantity in decimal.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& msg, std::string size)
        : std::runtime_error(msg), size_(std::move(size)) {}
    const std::string& size() const { return size_; }

private:
    std::string size_;
};

class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedTarget : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace spectrec
