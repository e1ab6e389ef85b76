#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ibi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All three landmarks coincide; the triangle has no shape coordinates.
class DegenerateConfiguration : public Error {
 public:
  DegenerateConfiguration()
      : Error("configuration is degenerate: all landmarks coincide") {}
  using Error::Error;
};

/// A shape point lies outside the closed unit disk.
class OutOfDisk : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Argument outside the support of a density or function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Cosine in-betweenness is undefined when side a or side c has length zero.
class UndefinedCosineIbi : public Error {
 public:
  UndefinedCosineIbi()
      : Error("cosine in-betweenness undefined: side a or side c is zero") {}
};

class SingularCovariance : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class InsufficientReplicates : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class FileNotFound : public Error {
 public:
  explicit FileNotFound(const std::string& path)
      : Error("file not found: " + path), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Malformed CSV content. Rows are 1-based and count the header as row 1.
class ParseError : public Error {
 public:
  ParseError(std::size_t row, std::string column, const std::string& what)
      : Error("row " + std::to_string(row) + ", column '" + column +
              "': " + what),
        row_(row),
        column_(std::move(column)) {}
  std::size_t row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::string column_;
};

class UnknownGroupLabel : public Error {
 public:
  using Error::Error;
};

class FewerThanThreeGroups : public Error {
 public:
  using Error::Error;
};

}  // namespace ibi
