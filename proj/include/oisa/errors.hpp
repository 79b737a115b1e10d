#pragma once

#include <stdexcept>
#include <string>

namespace oisa {

// Bad argument or value outside an operation's stated domain.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed file or text input.
struct parse_error : std::runtime_error {
    std::size_t line = 0;
    explicit parse_error(const std::string& what, std::size_t line_no = 0)
        : std::runtime_error(line_no ? what + " (line " + std::to_string(line_no) + ")" : what),
          line(line_no) {}
};

// Malformed self-delimited bit prefix.
struct decode_error : std::runtime_error {
    std::size_t position = 0;
    explicit decode_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (bit position " + std::to_string(pos) + ")"), position(pos) {}
};

// An online algorithm broke the game rules (illegal preemption, answer out of alphabet).
struct protocol_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive search or verification exceeded its configured budget.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural claim of a construction failed; signals a broken fixture, not bad input.
struct soundness_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A shipped property violates the assumptions it was declared with.
struct misconfiguration_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace oisa
