// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace abc {

// Base of every error raised by the model.
class ModelError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Parameters violate a precondition (c = 0, c > r, l != r, ...).
class ParameterError : public ModelError {
  public:
    using ModelError::ModelError;
};

// A value was requested outside the domain where it is defined.
class DomainError : public ModelError {
  public:
    using ModelError::ModelError;
};

// No tree proves the bound (or none exists within the given limits).
class InfeasibleError : public ModelError {
  public:
    using ModelError::ModelError;
};

// Malformed text input.
class ParseError : public ModelError {
  public:
    using ModelError::ModelError;
};

} // namespace abc
