#pragma once

#include <stdexcept>
#include <string>

namespace frosl {

// The frozen-value auxiliary system degenerates: |1 - sum V_j| below threshold.
class SingularAuxiliarySystem : public std::runtime_error {
 public:
  explicit SingularAuxiliarySystem(const std::string& what)
      : std::runtime_error(what) {}
};

class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

class ZeroOnContour : public std::runtime_error {
 public:
  ZeroOnContour(const std::string& what, double re, double im)
      : std::runtime_error(what), sample_re(re), sample_im(im) {}
  double sample_re;  // offending contour sample, rho-plane
  double sample_im;
};

class PhaseJumpUnresolved : public std::runtime_error {
 public:
  explicit PhaseJumpUnresolved(const std::string& what)
      : std::runtime_error(what) {}
};

class EscapedRegion : public std::runtime_error {
 public:
  explicit EscapedRegion(const std::string& what) : std::runtime_error(what) {}
};

class CountMismatch : public std::runtime_error {
 public:
  explicit CountMismatch(const std::string& what) : std::runtime_error(what) {}
};

class PoleHit : public std::runtime_error {
 public:
  explicit PoleHit(const std::string& what) : std::runtime_error(what) {}
};

class IllPosedMode : public std::runtime_error {
 public:
  IllPosedMode(const std::string& what, int mode)
      : std::runtime_error(what), m(mode) {}
  int m;
};

class PivotBreakdown : public std::runtime_error {
 public:
  explicit PivotBreakdown(const std::string& what)
      : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace frosl
