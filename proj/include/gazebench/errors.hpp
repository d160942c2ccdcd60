#pragma once

#include <stdexcept>
#include <string>

namespace gazebench {

/// Base class for all toolkit errors. The CLI maps each subclass to a
/// distinct exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value fell outside its documented range (coordinates, config fields).
class RangeError : public Error {
public:
    using Error::Error;
};

/// Input file or stream does not match the expected schema or format.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// No usable data: zero parseable rows, no detectable fixations.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// A saliency map with zero total mass was selected for sampling.
class DegenerateMapError : public Error {
public:
    using Error::Error;
};

/// Inhibition-of-return suppression drove the whole map to zero.
class SuppressionSaturationError : public Error {
public:
    using Error::Error;
};

} // namespace gazebench
