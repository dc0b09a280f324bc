#pragma once

#include <stdexcept>
#include <string>

namespace spdiv {

// Error kinds surfaced across the C API as status codes.
enum class ErrorKind {
  BadArgument,
  DimensionMismatch,
  NonFinite,
  DuplicatePoint,
  NotAStaircase,
  NotMonotoneFront,
  BadCardinality,
  SingularMatrix,
  TooLargeForBruteForce,
  UnknownFixture,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error bad_argument(const std::string& w) { return {ErrorKind::BadArgument, w}; }
inline Error dimension_mismatch(const std::string& w) { return {ErrorKind::DimensionMismatch, w}; }
inline Error non_finite(const std::string& w) { return {ErrorKind::NonFinite, w}; }
inline Error duplicate_point(const std::string& w) { return {ErrorKind::DuplicatePoint, w}; }
inline Error not_a_staircase(const std::string& w) { return {ErrorKind::NotAStaircase, w}; }
inline Error not_monotone_front(const std::string& w) { return {ErrorKind::NotMonotoneFront, w}; }
inline Error bad_cardinality(const std::string& w) { return {ErrorKind::BadCardinality, w}; }
inline Error singular_matrix(const std::string& w) { return {ErrorKind::SingularMatrix, w}; }
inline Error too_large_for_brute_force(const std::string& w) { return {ErrorKind::TooLargeForBruteForce, w}; }
inline Error unknown_fixture(const std::string& w) { return {ErrorKind::UnknownFixture, w}; }

}  // namespace spdiv
