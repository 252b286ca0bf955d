#ifndef GWIDTH_ERRORS_HPP
#define GWIDTH_ERRORS_HPP

#include <stdexcept>

namespace gwidth {

// Error taxonomy. The CLI maps each class to a distinct process exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed user input or a violated operation precondition.
class InputError : public Error {
public:
    using Error::Error;
};

// A configured cap (vertex count, dimension, candidate budget) was exceeded.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// A claim that must hold by construction failed its re-check. This signals a
// bug, never bad user input.
class InternalInconsistencyError : public Error {
public:
    using Error::Error;
};

// A recession direction satisfies every homogeneous inequality.
class UnboundedSystemError : public InternalInconsistencyError {
public:
    using InternalInconsistencyError::InternalInconsistencyError;
};

// A vertex lies on more facets than the dimension allows.
class SimplicityError : public InternalInconsistencyError {
public:
    using InternalInconsistencyError::InternalInconsistencyError;
};

} // namespace gwidth

#endif // GWIDTH_ERRORS_HPP
