#pragma once

// Decidable descriptive proximity, descriptive intersection, strong proximity
// and descriptive strong proximity on finite regions, plus a randomized
// harness that checks their axioms on generated instances.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strbut/descriptors.hpp"
#include "strbut/geometry.hpp"

namespace strbut {

struct ProximityConfig {
    /// Two descriptions match when their max-norm distance is <= tol.
    double tol = 0.0;
    DescriptorPipeline pipeline{{Extractor::centroid}};
    AntipodalityMode antipodality_mode = AntipodalityMode::disjoint;
    /// The designated whole space X. When set, X is strongly near (and
    /// descriptively strongly near) every nonempty region.
    std::optional<Region> universe;
    DescriptionContext context;

    void validate() const;
};

/// A delta_Phi B: some x in A, y in B have matching descriptions.
bool near_descriptive(const Region& a, const Region& b, const ProximityConfig& cfg);

/// Points of A u B whose description matches some description of A and some
/// description of B. May be empty.
Region descriptive_intersection(const Region& a, const Region& b, const ProximityConfig& cfg);

/// Strong contact: interiors overlap; a singleton {x} is strongly near B iff
/// x is in int(B); two singletons iff they coincide. The empty region is
/// strongly near nothing.
bool strongly_near(const Region& a, const Region& b, const Region* universe = nullptr);

/// Descriptive strong contact: int A and int B have a nonempty descriptive
/// intersection; a singleton {x} matches B when Phi(x) matches a description
/// of int(B); two singletons when their descriptions match.
bool descriptively_strongly_near(const Region& a, const Region& b, const ProximityConfig& cfg);

struct AxiomResult {
    std::string axiom;
    std::size_t trials = 0;
    /// Trials whose hypothesis held (all trials for equivalences).
    std::size_t exercised = 0;
    std::size_t violations = 0;
    std::optional<std::string> counterexample;
};

/// Per-axiom tallies. Merging sums counts and keeps the earliest
/// counterexample, so it is associative.
struct AxiomReport {
    std::string header;
    std::vector<AxiomResult> results;

    bool passed() const;
    std::size_t total_violations() const;
    AxiomResult& entry(const std::string& axiom);
    void record(const std::string& axiom, bool holds, const std::function<std::string()>& describe);
    /// Records `hypothesis => conclusion`.
    void record_implication(const std::string& axiom, bool hypothesis, bool conclusion,
                            const std::function<std::string()>& describe);
    void merge(const AxiomReport& other);
    /// One line per axiom: `<axiom> trials=<n> exercised=<e> violations=<v>` plus
    /// counterexample lines when present.
    std::string to_text() const;
};

/// Compact text form `{(x0,x1);(...)}` used in counterexamples.
std::string describe_points(const Region& r);

/// Random lattice regions of 1..50 points in [-10,10]^2 at pitch 1. Mixes
/// scattered points and filled rectangles so interiors are often nonempty.
class RegionGenerator {
public:
    explicit RegionGenerator(std::uint64_t seed);

    Region region();
    Point lattice_point();
    /// Filled rectangle (sides 3..7, clipped to the lattice) that holds `p`
    /// away from its border whenever clipping allows.
    Region rectangle_around(const Point& p);
    /// A point of `r` chosen uniformly.
    Point member(const Region& r);
    /// The full 21 x 21 lattice.
    static Region universe();

    std::uint64_t next(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// Checks dP0-dP5, snN0-snN6 and dsnP0-dsnP6 on `trials` generated
/// instances. Trial i draws from a generator seeded by (seed, i), so the
/// report does not depend on the worker count.
AxiomReport check_axioms(std::uint64_t seed, std::size_t trials, const ProximityConfig& cfg,
                         std::size_t threads = 0);

/// near_descriptive(A,B) => descriptive_intersection(A,B) nonempty, and the
/// converse.
AxiomReport check_near_intersection(std::size_t trials, const ProximityConfig& cfg, std::uint64_t seed = 0,
                               std::size_t threads = 0);

enum class ContinuityMode { spatial_strong, descriptive_strong };

using RegionMap = std::function<Region(const Region&)>;

/// Sample-level check that `f` preserves the chosen strong relation on every
/// supplied pair where the source relation holds.
AxiomReport spc_check(const RegionMap& f, const std::vector<std::pair<Region, Region>>& pairs,
                      ContinuityMode mode, const ProximityConfig& cfg);

} // namespace strbut
