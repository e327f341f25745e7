#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qspectra {

// Malformed textual input (graph6 and friends). `offset` is the byte
// position in the original input line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// An operation was asked to handle an object outside its supported size
// range (graph order caps, flat-index capacity).
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

// A precondition on the mathematical domain was violated (non-monic
// divisor, gcd of two zero polynomials, zero input to a resultant).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace qspectra
