#pragma once

#include <stdexcept>
#include <string>

namespace symq {

enum class Errc {
    invalid_input = 1,
    limit_exceeded = 2,
};

// All recoverable failures in the core throw Error; the C boundary maps
// Errc onto the public status codes.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

    static Error invalid(const std::string& what) { return Error(Errc::invalid_input, what); }
    static Error limit(const std::string& what) { return Error(Errc::limit_exceeded, what); }

private:
    Errc code_;
};

} // namespace symq
