#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An input graph or factoring lacks the structure a construction needs
/// (for example a factor that is not a disjoint union of cliques).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An exact solver was asked to work above its configured vertex cap.
class CapExceededError : public Error {
 public:
  CapExceededError(std::size_t n, std::size_t cap)
      : Error("exact solver cap exceeded: n = " + std::to_string(n) +
              " > cap " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

/// A hypergraph with an edge no vertex can hit.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace sdom
