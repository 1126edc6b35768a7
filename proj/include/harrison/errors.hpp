/*
   Copyright 2026 The harrison Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace harrison {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inadmissible input. The CLI maps this family to exit code 1.
class InputError : public Error {
   public:
    using Error::Error;
};

class VariableMismatch : public InputError {
   public:
    VariableMismatch() : InputError("polynomials live in different variable lists") {}
};

class DimensionMismatch : public InputError {
   public:
    using InputError::InputError;
};

class ValidationError : public InputError {
   public:
    using InputError::InputError;
};

/// Center and decomposition refuse degenerate forms.
class DegenerateForm : public InputError {
   public:
    using InputError::InputError;
};

class SingularMatrix : public InputError {
   public:
    SingularMatrix() : InputError("matrix is singular") {}
};

/// Expression front-end failure; `offset` is 1-based into the source text.
class ParseError : public InputError {
   public:
    enum class Kind { lexical, syntax, exponent_overflow, undeclared_variable };

    ParseError(Kind kind, std::size_t offset, const std::string& what)
        : InputError(kind_name(kind) + " at offset " + std::to_string(offset) + ": " + what),
          kind_(kind),
          offset_(offset) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t offset() const noexcept { return offset_; }

    static std::string kind_name(Kind k) {
        switch (k) {
            case Kind::lexical: return "lexical error";
            case Kind::syntax: return "syntax error";
            case Kind::exponent_overflow: return "exponent overflow";
            case Kind::undeclared_variable: return "undeclared variable";
        }
        return "parse error";
    }

   private:
    Kind kind_;
    std::size_t offset_;
};

/// Raised by exact division when the divisor does not divide. Distinct from
/// InputError so callers can tell "does not divide" apart from bad input.
class NotDivisible : public Error {
   public:
    NotDivisible() : Error("divisor does not divide exactly") {}
};

/// An algorithm failed to reach its postcondition (retry exhaustion, a broken
/// internal invariant). The CLI maps this family to exit code 2.
class ComputationError : public Error {
   public:
    using Error::Error;
};

/// Algebra construction errors; each indicates an upstream center bug.
class NotClosed : public ComputationError {
   public:
    NotClosed() : ComputationError("matrix span is not closed under multiplication") {}
};

class NotCommutative : public ComputationError {
   public:
    NotCommutative() : ComputationError("matrix span is not commutative") {}
};

class MissingIdentity : public ComputationError {
   public:
    MissingIdentity() : ComputationError("matrix span does not contain the identity") {}
};

}  // namespace harrison
