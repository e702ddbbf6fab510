#ifndef CLIFFINV_ERRORS_HPP
#define CLIFFINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cliffinv {

/// A value that should have been rational (all zeta-components zero) was not.
class NotRationalError : public std::domain_error {
public:
    explicit NotRationalError(const std::string& what) : std::domain_error(what) {}
};

/// A configured resource cap (term count, search length, group size, ...) would be exceeded.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix required to be invertible over F_2 was singular.
class SingularMatrixError : public std::invalid_argument {
public:
    explicit SingularMatrixError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two codewords/codes with different (N1,N2) splits were combined.
class SplitMismatchError : public std::invalid_argument {
public:
    explicit SplitMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace cliffinv

#endif
