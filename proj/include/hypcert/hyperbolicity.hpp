#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypcert/detrep.hpp"
#include "hypcert/polynomial.hpp"
#include "hypcert/real_roots.hpp"

namespace hypcert {

struct SamplingOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  /// Sampled lines have integer offsets v with coordinates in [-box, box].
  long box = 50;
};

/// Offset of the index-th sampled line; depends only on (seed, index).
Point sample_offset(std::uint64_t seed, std::uint64_t index, std::size_t arity, long box);

enum class VerdictStatus { no_counterexample, refuted };
std::string to_string(VerdictStatus status);

/// A line t -> t*e - v on which a property fails.
struct LineWitness {
  Point v;
  UniPoly restricted;
  /// Restriction of the candidate interlacer (interlacing tests only).
  std::optional<UniPoly> restricted_interlacer;
  /// Real roots of `restricted` (and of the interlacer when present).
  IsolatingIntervals roots;
  std::optional<IsolatingIntervals> interlacer_roots;
  std::string reason;
};

struct SampledVerdict {
  VerdictStatus status = VerdictStatus::no_counterexample;
  std::size_t samples_run = 0;
  std::uint64_t seed = 0;
  long box = 50;
  std::optional<LineWitness> witness;
};

/// Tests real-rootedness of h(te - v) on sampled lines. A refutation is exact;
/// "no-counterexample" is Monte-Carlo evidence only. Throws DomainError when h
/// is not a real homogeneous form or h(e) = 0.
SampledVerdict is_hyperbolic_sampled(const MultiPoly& h, const Point& e, const SamplingOptions& options = {});

/// Tests that g(te - v) weakly interlaces h(te - v) on sampled lines. Throws
/// DomainError on a degree mismatch or when g or h vanishes at e.
SampledVerdict interlaces_sampled(const MultiPoly& g, const MultiPoly& h, const Point& e,
                                  const SamplingOptions& options = {});

/// Re-checks a hyperbolicity witness without line restriction or Sturm chains:
/// the restricted polynomial is rebuilt by interpolating h at deg(h) + 1 points
/// and tested with Hermite's criterion.
bool recheck_hyperbolicity_witness(const MultiPoly& h, const Point& e, const LineWitness& witness);
/// Same for interlacing witnesses, tested with the Bezoutian criterion.
bool recheck_interlacing_witness(const MultiPoly& g, const MultiPoly& h, const Point& e,
                                 const LineWitness& witness);

/// t -> p(t*e - v) rebuilt from deg + 1 point evaluations.
UniPoly interpolate_on_line(const MultiPoly& p, const Point& e, const Point& v);

/// Exact hyperbolicity certificate: a verified definite pencil with
/// det(sum x_i A_i) = c * h^r and sum e_i A_i positive definite.
struct HyperbolicityCertificate {
  MultiPoly h;
  unsigned power = 1;
  Point direction;
  PolyMatrix pencil;
  Rational scalar{1};
  DetRepReport report;
};

/// Raised when a pencil does not verify; carries the full report.
class CertificationError : public DomainError {
 public:
  explicit CertificationError(DetRepReport report);
  DetRepReport report;
};

HyperbolicityCertificate certify_from_pencil(const MultiPoly& h, unsigned r, const Point& e,
                                             const PolyMatrix& pencil, bool up_to_scalar = true);
HyperbolicityCertificate certify_from_pencil(const MultiPoly& h, unsigned r, const Point& e,
                                             const std::vector<ConstMatrix>& pencil, bool up_to_scalar = true);

}  // namespace hypcert
