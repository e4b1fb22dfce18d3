/* Copyright 2026 The boxpat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <stdexcept>
#include <string>

namespace boxpat {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (permutations, words, walls, expressions).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed a configured size bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// An input object violates the precondition of an operation. The subclasses
// name the specific violated property.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class NotMaximal : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class NotAvoider : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class NotStable : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class HasSingleton : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

// Algebraic failures. These indicate either a caller error (asking to expand
// a non-expandable function) or a construction bug.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

class NotExpandable : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class DegreeExceeded : public Error {
 public:
  using Error::Error;
};

class SubstitutionDegenerate : public Error {
 public:
  using Error::Error;
};

}  // namespace boxpat
