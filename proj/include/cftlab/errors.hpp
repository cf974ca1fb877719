#ifndef CFTLAB_ERRORS_HPP
#define CFTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cftlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Arity/bound mismatch in a magmoid operation.
class DimensionError : public Error { public: using Error::Error; };

/// Unknown symbol, rank mismatch, or symbol outside the expected alphabet.
class AlphabetError : public Error { public: using Error::Error; };

/// Invalid Gorn address.
class PositionError : public Error { public: using Error::Error; };

/// Variable or component index out of range.
class IndexError : public Error { public: using Error::Error; };

/// Text input could not be parsed.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line), column(column) {}
    explicit ParseError(const std::string& msg) : Error(msg), line(0), column(0) {}
    int line, column;
};

/// A required map entry is missing from a homomorphism file.
class CompletenessError : public Error { public: using Error::Error; };

/// Production does not apply at the requested position.
class ProductionError : public Error { public: using Error::Error; };

/// Derivation mode restriction (OI) violated.
class ModeError : public Error { public: using Error::Error; };

/// Input outside the scope of a transformation (e.g. non-spinal alphabet).
class ScopeError : public Error { public: using Error::Error; };

/// Staged transformation applied to a grammar of the wrong stage.
class StageError : public Error { public: using Error::Error; };

/// A documented semantic precondition does not hold.
class PreconditionError : public Error { public: using Error::Error; };

/// A derivation claim handed to a verifier could not be reproduced.
class ClaimError : public Error { public: using Error::Error; };

/// Homomorphism is not in the class required by an operation.
class ClassificationError : public Error { public: using Error::Error; };

/// No chain completion exists within the shape rules.
class CompletionError : public Error { public: using Error::Error; };

/// Pumping preconditions violated.
class PumpError : public Error { public: using Error::Error; };

/// A configured expansion cap was exceeded.
class CapacityError : public Error { public: using Error::Error; };

/// Malformed derivation-tree node; carries the offending position.
class StructuralError : public Error {
public:
    StructuralError(const std::string& msg, std::string position)
        : Error(msg + " (at node " + (position.empty() ? "e" : position) + ")"),
          position(std::move(position)) {}
    std::string position;
};

/// An internal invariant failed; indicates a bug.
class InternalError : public Error { public: using Error::Error; };

} // namespace cftlab

#endif
