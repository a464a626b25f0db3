#pragma once

#include <stdexcept>
#include <string>

namespace eitsim {

// Failure modes that carry physical meaning (as opposed to plain
// argument errors, which throw std::invalid_argument / std::domain_error).
enum class Errc {
    non_unique_steady_state,  // Liouvillian null space has dimension > 1
    singular_system,          // bordered LU factorization failed
    fit_unstable,             // susceptibility fit ill-conditioned
    no_fixed_point,           // saturation iteration did not converge
    ambiguous_peak,           // more than one local maximum in window
    unresolved_peak,          // peak or half-max crossing outside window
    normalization_undefined,  // all-zero transmission column
};

const char* to_string(Errc code) noexcept;

class SimError : public std::runtime_error {
public:
    SimError(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace eitsim
