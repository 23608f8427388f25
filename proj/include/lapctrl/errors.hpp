#pragma once

#include <stdexcept>
#include <string>

namespace lapctrl {

// Input-text errors carry a 1-based character position.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, int position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    int position;
};

struct empty_input : parse_error {
    explicit empty_input(const std::string& what) : parse_error(what, 1) {}
};

struct illegal_character : parse_error {
    using parse_error::parse_error;
};

struct first_bit_not_zero : parse_error {
    using parse_error::parse_error;
};

struct syntax_error : parse_error {
    using parse_error::parse_error;
};

struct arity_error : parse_error {
    using parse_error::parse_error;
};

struct not_connected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_choice : std::runtime_error {
    invalid_choice(const std::string& what, int cell)
        : std::runtime_error(what), cell(cell) {}
    int cell;
};

struct spectrum_incomplete : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct basis_invalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct too_large : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lapctrl
