#ifndef SG_ERRORS_HPP
#define SG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sg {

// Graph construction would exceed the vertex capacity (64, one machine
// word per adjacency row).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition (e.g. passed a spectrum
// that is not the spectrum of a regular graph).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression-language syntax error; position is a byte offset into the
// input string.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Malformed graph6 input; offset is the byte where decoding failed.
struct decode_error : std::runtime_error {
    decode_error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (at offset " + std::to_string(off) + ")"),
          offset(off) {}
    std::size_t offset;
};

} // namespace sg

#endif
