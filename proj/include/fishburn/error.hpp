#ifndef FISHBURN_ERROR_HPP
#define FISHBURN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fishburn {

enum class errc {
    invalid_argument,    // malformed input, contract violation
    guard,               // feasibility guard tripped (message carries the limit)
    unsupported_regime,  // spec outside the regime an operation requires
    internal,            // broken internal invariant
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace fishburn

#endif
