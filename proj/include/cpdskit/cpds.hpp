#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpdskit/ideal.hpp"
#include "cpdskit/parallel.hpp"
#include "cpdskit/primdec.hpp"
#include "cpdskit/strata.hpp"

namespace cpdskit {

enum class Flavor { feasible, minimal, hilbert };
const char* to_string(Flavor flavor);
std::optional<Flavor> parse_flavor(const std::string& text);

// Local minimal polynomial of a generic element of one component over Q(U).
struct HilbertCertificate {
  std::size_t component = 0;
  std::vector<std::string> mis;  // names of U
  Polynomial element;            // generic element, in the source ring
  Polynomial minpoly;            // in Q[U, A][t], primitive in t
  std::string t;                 // name of the polynomial variable
};

// Ring of a certificate's minimal polynomial: t under lex ahead of the
// source ring's order.
RingPtr certificate_ring(const RingPtr& source, const std::string& t);

struct Segment {
  ConstructibleSet cell;
  std::vector<Ideal> components;
  std::vector<HilbertCertificate> hilbert;

  // A single component equal to the unit ideal.
  bool is_unit() const;
  // "(Q^2 \ V(a*b), { <x^2-a, y> })" with components reduced modulo the
  // closed part of a single-cell segment.
  std::string to_string() const;
};

struct Cpds {
  Ideal source;
  Flavor flavor = Flavor::feasible;
  std::vector<Segment> segments;

  // Union of the segment cells.
  ConstructibleSet covered() const;
  std::string to_string() const;
};

struct CpdsOptions {
  PrimdecOptions primdec;
  Execution execution = Execution::parallel;
  unsigned max_depth = 64;
};

// Ideal of K[A] (the parameter ring) generated by I intersected with K[A],
// and its radical.
Ideal parameter_condition(const Ideal& I);
Ideal parameter_condition_radical(const Ideal& I, const PrimdecOptions& options = {});

// Components whose condition ideal has the same radical as that of I.
std::vector<PrimaryComponent> filtered_pd(const Ideal& I,
                                          const std::vector<PrimaryComponent>& Q,
                                          const PrimdecOptions& options = {});

// Radical ideal J1 containing H such that phi_alpha(Q_1 n ... n Q_r) equals
// the intersection of the phi_alpha(Q_i) for alpha in V(H) \ V(J1). Built
// from the trace of a Groebner basis of the slack ideal
// t_1 Q_1 + ... + (1 - t_1 - ... - t_{r-1}) Q_r under T >> X >> A.
Ideal pd2_trace(const std::vector<Ideal>& components, const Ideal& H,
                const PrimdecOptions& options = {});

// J1 intersected with the condition ideals of the components that the
// filter removes; all components must intersect to I + H.
Ideal pd2_stability(const Ideal& I, const std::vector<PrimaryComponent>& components,
                    const Ideal& H, const PrimdecOptions& options = {});

// Radical ideal J containing H, with phi_alpha(I1) not contained in
// phi_alpha(I2) for alpha in V(H) \ V(J). I2 must satisfy I2 n K[A] = H.
Ideal noninclusion_certificate(const Ideal& I1, const Ideal& I2, const Ideal& H,
                               const PrimdecOptions& options = {});

// Radical ideal J containing H on whose complement in V(H) the specialized
// components stay irredundant and keep pairwise distinct radicals.
Ideal minimality_stability(const std::vector<PrimaryComponent>& filtered,
                           const Ideal& H, const PrimdecOptions& options = {});

Cpds feasible_cpds(const Ideal& I, const CpdsOptions& options = {});
Cpds minimal_feasible_cpds(const Ideal& I, const CpdsOptions& options = {});

// Certificates for the non-unit components of a segment whose cell is a
// single V(H) \ V(J).
std::vector<HilbertCertificate> hilbert_subset(const Segment& segment,
                                               const CpdsOptions& options = {});
Cpds hilbert_cpds(const Ideal& I, const CpdsOptions& options = {});

// The specialized certificate is irreducible over Q(U).
bool hilbert_membership(const HilbertCertificate& cert, const Point& alpha,
                        const FactorOptions& options = {});

enum class VerifyLevel { pd2, minimal, primary };
const char* to_string(VerifyLevel level);
std::optional<VerifyLevel> parse_verify_level(const std::string& text);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  Point point;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_string() const;
};

// Direct checks at alpha in Q[X]. Throws PreconditionError when alpha lies
// outside the segment cell.
VerifyReport verify_segment(const Ideal& I, const Segment& segment,
                            const Point& alpha, VerifyLevel level,
                            const PrimdecOptions& options = {});

// Every segment is checked at up to points_per_segment rational sample points
// of height at most height_bound. Segments without rational points are
// skipped. Points are checked in parallel under the parallel execution.
struct SampledVerification {
  std::size_t points_checked = 0;
  std::size_t segments_without_points = 0;
  std::vector<VerifyReport> failures;
  bool passed() const { return failures.empty(); }
};
SampledVerification verify_sampled(const Cpds& cpds, VerifyLevel level,
                                   unsigned height_bound,
                                   std::size_t points_per_segment,
                                   Execution execution = Execution::parallel,
                                   const PrimdecOptions& options = {});

}  // namespace cpdskit
