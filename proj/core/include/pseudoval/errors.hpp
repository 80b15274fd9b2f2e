#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pseudoval {

// Violated precondition or mathematically undefined request (division by zero,
// field mismatch, unconstructible sequence spec, ...). CLI maps these to exit 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A windowed (Raw-mode) computation failed to stabilize, so no verdict can be
// reported. CLI maps these to exit 2.
class WindowError : public std::runtime_error {
public:
    explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};

// Text-literal parse failure; position is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace pseudoval
