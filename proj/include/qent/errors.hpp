#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace qent {

namespace detail {

inline std::string magnitude(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace detail

/// Base class for every failure raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hermiticity violation above tolerance. `deviation` is the worst
/// entrywise |M(i,j) - conj(M(j,i))|.
class NotHermitian : public Error {
 public:
  explicit NotHermitian(double dev)
      : Error("not Hermitian: max |M - M^dag| = " + detail::magnitude(dev)),
        deviation(dev) {}
  double deviation;
};

/// |Tr(M) - 1| above tolerance.
class TraceNotUnit : public Error {
 public:
  explicit TraceNotUnit(double dev)
      : Error("trace not unit: |Tr - 1| = " + detail::magnitude(dev)),
        deviation(dev) {}
  double deviation;
};

/// An eigenvalue below -psd_tol.
class NotPositive : public Error {
 public:
  explicit NotPositive(double ev)
      : Error("not positive semidefinite: eigenvalue " + detail::magnitude(ev)),
        eigenvalue(ev) {}
  double eigenvalue;
};

/// Eigensolver hit its sweep cap with the off-diagonal residual still above
/// the stopping threshold.
class NoConvergence : public Error {
 public:
  NoConvergence(double res, int sweeps_done)
      : Error("eigensolver did not converge: residual " +
              detail::magnitude(res) + " after " +
              std::to_string(sweeps_done) + " sweeps"),
        residual(res),
        sweeps(sweeps_done) {}
  double residual;
  int sweeps;
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class EmptyKeepSet : public Error {
 public:
  EmptyKeepSet() : Error("partial trace keep set is empty") {}
};

class InvalidDimension : public Error {
 public:
  explicit InvalidDimension(const std::string& what) : Error(what) {}
};

/// Malformed matrix or report file.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace qent
