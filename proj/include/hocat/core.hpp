#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hocat {

/// Index-backed identifier. The tag keeps object and morphism ids apart.
template <class Tag>
class Id {
 public:
  constexpr Id() = default;
  constexpr explicit Id(std::size_t v) : v_(static_cast<std::uint32_t>(v)) {}
  [[nodiscard]] constexpr std::size_t index() const { return v_; }
  friend constexpr auto operator<=>(Id, Id) = default;

 private:
  std::uint32_t v_ = 0;
};

struct ObjTag;
struct MorTag;
using ObjId = Id<ObjTag>;
using MorId = Id<MorTag>;

/// Base of everything the engine throws. `exit_code` follows the CLI contract.
class Error : public std::runtime_error {
 public:
  Error(const std::string& what, int exit_code) : std::runtime_error(what), exit_code_(exit_code) {}
  [[nodiscard]] int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

/// Malformed input: dangling ids, bad shapes, category mismatches, parse errors.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what, 2) {}
};

/// An operation was called outside its domain (e.g. homotopy on a non-cofibrant source).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what, 2) {}
};

/// A required construction does not exist in the finite category.
class NonexistenceError : public Error {
 public:
  explicit NonexistenceError(const std::string& what) : Error(what, 3) {}
};

class ColimitAbsent : public NonexistenceError {
 public:
  using NonexistenceError::NonexistenceError;
};

class NoFactorization : public NonexistenceError {
 public:
  NoFactorization(const std::string& what, MorId witness) : NonexistenceError(what), witness_(witness) {}
  [[nodiscard]] MorId witness() const { return witness_; }

 private:
  MorId witness_;
};

/// A definitional check that failed, reported as data rather than thrown.
struct Violation {
  std::string kind;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

}  // namespace hocat

template <class Tag>
struct std::hash<hocat::Id<Tag>> {
  std::size_t operator()(hocat::Id<Tag> id) const noexcept { return std::hash<std::size_t>{}(id.index()); }
};
