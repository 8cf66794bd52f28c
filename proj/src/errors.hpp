#ifndef PERMTRI_ERRORS_HPP
#define PERMTRI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permtri {

/// Error categories surfaced through both the C++ and the C interfaces.
enum class Errc {
    bad_argument,
    parse_error,
    reducible_modulus,
    degree_mismatch,
    bad_trace,
    division_by_zero,
    degenerate_equation,
    not_on_mu,
    bad_divisor,
    zero_coefficient,
    resource_limit,
    non_terminating,
    inexact_division,
    zero_degree,
    io_error,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace permtri

#endif
