#pragma once

#include <stdexcept>
#include <string>

namespace cycleframe {

enum class ErrorKind {
  ParameterDomain,   // arguments outside an operation's domain
  DegenerateCycle,   // a traced or supplied cycle is too short or repeats a vertex
  ExceptionalCase,   // parameters hit a known non-existence exception
  UnsupportedBlock,  // no construction and the search budget ran out
  ConstructionBug,   // an internal construction failed verification
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::ParameterDomain, what);
}

}  // namespace cycleframe
