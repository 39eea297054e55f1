#pragma once

#include <stdexcept>
#include <string>

namespace lierine {

/// Shape or ring mismatch between operands, index out of range, and similar
/// misuse of the algebraic API.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial or expression text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A manifest that does not satisfy the schema. The message names the field.
class ManifestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed (non-flat connection handed to the
/// cohomology solver, primitive requested for a non-closed form, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lierine
