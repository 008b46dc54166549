#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclemod {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_vertex : public error {
public:
    using error::error;
};

class loop_rejected : public error {
public:
    using error::error;
};

/// Malformed textual input. `offset()` is the byte offset of the problem.
class format_error : public error {
public:
    format_error(const std::string& what, std::size_t offset)
        : error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class disconnected_input : public error {
public:
    using error::error;
};

class vertex_not_on_cycle : public error {
public:
    using error::error;
};

class order_violation : public error {
public:
    using error::error;
};

/// A documented precondition of an operation does not hold; the message
/// names the violated clause.
class precondition_failed : public error {
public:
    using error::error;
};

/// An enumeration hit its caller-supplied budget before finishing.
class budget_exceeded : public error {
public:
    budget_exceeded(const std::string& what, std::size_t emitted)
        : error(what), emitted_(emitted) {}

    std::size_t emitted() const noexcept { return emitted_; }

private:
    std::size_t emitted_;
};

/// A search was asked to cover a space beyond its configured ceiling.
class ceiling_exceeded : public error {
public:
    using error::error;
};

class construction_invalid : public error {
public:
    using error::error;
};

class empty_list : public error {
public:
    using error::error;
};

} // namespace cyclemod
