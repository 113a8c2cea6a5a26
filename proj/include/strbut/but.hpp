#pragma once

// Search of finite region families for antipodal pairs whose aggregate
// descriptions match, with an exhaustive oracle and a sphere witness builder.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strbut/descriptors.hpp"
#include "strbut/geometry.hpp"
#include "strbut/proximity.hpp"

namespace strbut {

enum class MemberKind { region, string, worldsheet };

std::string to_string(MemberKind kind);

using FamilyMember = std::variant<Region, StringPath, Worldsheet>;

/// A finite family of regions, strings or worldsheets (one kind per family).
///
/// Strings are compared as their vertex sets snapped at `resolution`; two
/// worldsheets are antipodal when some string of one is antipodal to every
/// string of the other under the active criterion.
class RegionFamily {
public:
    explicit RegionFamily(std::vector<Region> members);
    RegionFamily(std::vector<StringPath> members, double resolution);
    RegionFamily(std::vector<Worldsheet> members, double resolution);

    /// Throws when members mix kinds or dimensions.
    static RegionFamily from_members(std::vector<FamilyMember> members,
                                     double resolution = kDefaultResolution);

    /// Loads every `*.csv` in a directory, in filename order. A header
    /// starting with `t` marks a string, otherwise a region.
    static RegionFamily load_directory(const std::filesystem::path& dir,
                                       double resolution = kDefaultResolution);

    MemberKind kind() const { return kind_; }
    std::size_t size() const { return members_.size(); }
    std::size_t dim() const;
    double resolution() const { return resolution_; }
    const std::vector<FamilyMember>& members() const { return members_; }
    const FamilyMember& operator[](std::size_t i) const { return members_[i]; }

    /// Optional index involution pairing each member with its antipode.
    const std::optional<std::vector<std::size_t>>& antipode_pairing() const { return pairing_; }
    void set_antipode_pairing(std::vector<std::size_t> pairing);

    /// Same family with members reordered: member i of the result is
    /// member order[i] of this one.
    RegionFamily permuted(const std::vector<std::size_t>& order) const;

private:
    RegionFamily(std::vector<FamilyMember> members, MemberKind kind, double resolution);
    void validate() const;

    std::vector<FamilyMember> members_;
    MemberKind kind_;
    double resolution_;
    std::optional<std::vector<std::size_t>> pairing_;
};

FeatureVector describe_member(const RegionFamily& family, std::size_t i, const DescriptorPipeline& pipeline,
                              const DescriptionContext& ctx);

bool members_antipodal(const RegionFamily& family, std::size_t i, std::size_t j, AntipodalityMode mode);

struct MatchedPair {
    std::size_t index_a = 0;
    std::size_t index_b = 0;
    FeatureVector description_a;
    FeatureVector description_b;
    double mismatch = 0.0;

    friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

struct MatchResult {
    std::vector<MatchedPair> pairs; // ascending (index_a, index_b), index_a < index_b
    std::size_t comparisons = 0;
    double tol = 0.0;
    AntipodalityMode mode = AntipodalityMode::disjoint;

    std::vector<std::pair<std::size_t, std::size_t>> index_pairs() const;
};

/// All pairs satisfying the configured antipodality criterion whose
/// descriptions differ by at most cfg.tol in max-norm. Descriptions are
/// computed once, then a sort-and-sweep on the first coordinate prunes pairs
/// before the antipodality test runs.
MatchResult find_matching_antipodal(const RegionFamily& family, const ProximityConfig& cfg,
                                    std::size_t threads = 0);

/// Exhaustive O(m^2) reference for find_matching_antipodal.
MatchResult brute_force_oracle(const RegionFamily& family, const ProximityConfig& cfg);

struct SphereWitnessOptions {
    /// Size of the negation-closed sphere sample the caps are cut from.
    std::size_t sample_size = 2000;
    /// Angular radius in degrees for every cap; drawn from [10, 80] when unset.
    std::optional<double> cap_radius_deg;
    std::size_t threads = 0;
};

struct SphereWitness {
    MatchResult result;
    bool pass = false;
    std::size_t caps = 0;
    std::size_t matched_caps = 0;
    /// Caps equal to their own antipode (hemisphere-plus radii).
    std::size_t degenerate_caps = 0;
    std::vector<std::string> warnings;
};

/// Angular cap of a point set: members within `radius_rad` of `centre`.
Region spherical_cap(const std::vector<Point>& sample, const Point& centre, double radius_rad,
                     double resolution = kDefaultResolution);

/// Builds `caps` random caps on a negation-closed sample of S^n, pairs each
/// with its antipodal image and runs the matching search. Passes when every
/// non-degenerate cap matches its antipode with mismatch exactly 0.
SphereWitness verify_strbut_on_sphere(std::size_t n, std::size_t caps, std::uint64_t seed,
                                      const ProximityConfig& cfg, const SphereWitnessOptions& options = {});

} // namespace strbut
