#ifndef EXTSHIFT_ERROR_HPP
#define EXTSHIFT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace extshift {

/// Raised when a Las Vegas run exhausts its rounds without a verified sample.
/// Usually means the sampling field is too small to hold a generic enough
/// matrix; sampling from an extension field typically helps.
class field_too_small : public std::runtime_error {
public:
    explicit field_too_small(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a matrix handed to a shifting routine is not invertible.
class singular_matrix : public std::invalid_argument {
public:
    explicit singular_matrix(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace extshift

#endif
