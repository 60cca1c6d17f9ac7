// Copyright 2026 The frameaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRAMEAUG_ERRORS_H_
#define FRAMEAUG_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace frameaug {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// LU name lacks a ".pos" suffix.
class MalformedLuName : public Error {
 public:
  using Error::Error;
};

// No feature bundle reproduces a surface token from its lemma.
class FormMismatch : public Error {
 public:
  using Error::Error;
};

// A frame element span partially overlaps the target span.
class SpanConflict : public Error {
 public:
  using Error::Error;
};

// A char span does not sit on whitespace-token boundaries.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateFrame : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateLu : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateId : public Error {
 public:
  using Error::Error;
};

class UnknownFrame : public Error {
 public:
  using Error::Error;
};

class UnknownLu : public Error {
 public:
  using Error::Error;
};

class XmlError : public Error {
 public:
  using Error::Error;
};

// A luXML label lies outside its sentence text.
class OffsetError : public Error {
 public:
  using Error::Error;
};

// Holdout plan references annotation ids absent from the corpus, or
// would strip a full-text set.
class PlanMismatch : public Error {
 public:
  using Error::Error;
};

// Gold and predicted corpora do not align one-to-one.
class ScoreAlignmentError : public Error {
 public:
  ScoreAlignmentError(std::vector<std::string> missing,
                      std::vector<std::string> spurious);
  // Gold keys with no prediction.
  const std::vector<std::string>& missing() const { return missing_; }
  // Predictions with no gold counterpart.
  const std::vector<std::string>& spurious() const { return spurious_; }

 private:
  std::vector<std::string> missing_;
  std::vector<std::string> spurious_;
};

}  // namespace frameaug

#endif  // FRAMEAUG_ERRORS_H_
