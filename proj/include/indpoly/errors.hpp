#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace indpoly {

using Vertex = std::uint32_t;

// Base class for failures caused by bad input. Internal invariant violations
// are reported with std::logic_error instead, so callers can tell the two
// apart (the CLI maps them to exit codes 1 and 2).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

class NotConnectedError : public Error {
public:
  NotConnectedError(Vertex a, Vertex b)
      : Error("graph is not connected: vertices " + std::to_string(a) +
              " and " + std::to_string(b) + " lie in different components"),
        a_(a),
        b_(b) {}

  Vertex first() const noexcept { return a_; }
  Vertex second() const noexcept { return b_; }

private:
  Vertex a_;
  Vertex b_;
};

class HasCycleError : public Error {
public:
  HasCycleError(std::size_t n, std::size_t m)
      : Error("graph has a cycle: " + std::to_string(m) + " edges on " +
              std::to_string(n) + " vertices") {}

  explicit HasCycleError(std::vector<Vertex> component)
      : Error("component {" + join(component) + "} has a cycle"),
        component_(std::move(component)) {}

  // Vertices of the offending component; empty for whole-graph reports.
  const std::vector<Vertex>& component() const noexcept { return component_; }

private:
  static std::string join(const std::vector<Vertex>& vs) {
    std::string s;
    for (Vertex v : vs) {
      if (!s.empty()) s += ", ";
      s += std::to_string(v);
    }
    return s;
  }

  std::vector<Vertex> component_;
};

class EmptyGraphError : public Error {
public:
  EmptyGraphError() : Error("graph has no vertices") {}
};

class TooLargeError : public Error {
public:
  TooLargeError(std::size_t n, std::size_t limit, const std::string& context)
      : Error(context + ": n = " + std::to_string(n) + " exceeds the limit " +
              std::to_string(limit)) {}
};

}  // namespace indpoly
