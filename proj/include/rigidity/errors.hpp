#pragma once

#include <stdexcept>
#include <string>

namespace rigidity {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two vertices share a position, or a bearing was requested between
/// coincident points.
class DegenerateRealization : public Error {
 public:
  using Error::Error;
};

/// A vector expected to have unit norm does not.
class InvalidBearing : public Error {
 public:
  using Error::Error;
};

/// The input is too small for the requested rank or eigenvalue test.
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// Only planar and spatial camera models are supported.
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// An operation requiring a connected graph received a disconnected one.
class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

/// An edge of the framework has no weight assigned.
class MissingWeight : public Error {
 public:
  using Error::Error;
};

/// An eigensolver or factorization did not converge, or a gradient
/// produced a non-finite value.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// The anchored block of the bearing Laplacian is singular.
class NotLocalizable : public Error {
 public:
  using Error::Error;
};

/// Shared vertices of two frameworks disagree on their positions.
class InconsistentRealization : public Error {
 public:
  using Error::Error;
};

/// A routing round could not complete because the decomposition no longer
/// matches the network graph.
class StaleDecomposition : public Error {
 public:
  using Error::Error;
};

/// An inter-robot distance dropped to the minimum allowed distance or
/// below, where the collision cost is undefined.
class CollisionViolation : public Error {
 public:
  CollisionViolation(const std::string& what, int i, int j, double distance)
      : Error(what), vertex_i(i), vertex_j(j), distance(distance) {}
  int vertex_i;
  int vertex_j;
  double distance;
};

/// A subframework rigidity eigenvalue fell to the floor or below, where
/// the rigidity cost is unbounded.
class RigidityFloorBreached : public Error {
 public:
  RigidityFloorBreached(const std::string& what, int center, double eigenvalue)
      : Error(what), center(center), eigenvalue(eigenvalue) {}
  int center;
  double eigenvalue;
};

/// Rejection sampling hit its retry cap before producing a sample.
class SamplingExhausted : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or configuration.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace rigidity
