#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "credmatch/errors.hpp"

namespace credmatch {

// A subset of the frame as a bitmask: bit i set <=> i-th label is in the
// subset. Frames hold at most 64 labels so every subset fits in one word.
using Mask = std::uint64_t;

inline std::size_t cardinality(Mask m) {
    return static_cast<std::size_t>(std::popcount(m));
}

// Frame of discernment: an ordered set of distinct hypothesis labels.
// Label order is fixed at construction and defines the bit positions.
// Immutable; shared between mass functions via shared_ptr.
class Frame {
public:
    static std::shared_ptr<const Frame> make(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    Mask full() const { return full_; }
    Mask singleton(std::size_t i) const { return Mask{1} << i; }
    bool valid(Mask m) const { return (m & ~full_) == 0; }

    std::optional<std::size_t> index_of(std::string_view label) const;

    // Mask of the labelled singleton; throws BadSubset for unknown labels.
    Mask singleton_of(std::string_view label) const;

    // Canonical text form: labels joined by '|', "{}" for the empty set.
    std::string subset_name(Mask m) const;

    // Inverse of subset_name; also accepts "*" for the full frame.
    Mask parse_subset(std::string_view text) const;

    // Same ordered labels, regardless of object identity.
    bool compatible(const Frame& other) const;

private:
    explicit Frame(std::vector<std::string> labels);

    std::vector<std::string> labels_;
    Mask full_ = 0;
};

using FramePtr = std::shared_ptr<const Frame>;

// Basic belief assignment: strictly positive masses on focal subsets of
// one frame, summing to 1. Normally the empty set carries no mass; the
// conjunctive rule produces a transient open-world state where it may.
// Immutable after construction.
class MassFunction {
public:
    using Entry = std::pair<Mask, double>;

    // Normalized bba. Duplicate subsets are merged by summation, zero
    // masses dropped, and the total renormalized when within 1e-9 of 1.
    static MassFunction make(FramePtr frame, std::vector<Entry> assignments);

    // Same validation, but mass on the empty set is permitted and the
    // result is flagged unnormalized when present.
    static MassFunction make_open(FramePtr frame, std::vector<Entry> assignments);

    static MassFunction categorical(FramePtr frame, Mask subset);
    static MassFunction vacuous(FramePtr frame);

    const FramePtr& frame() const { return frame_; }

    // Focal elements in ascending mask order (the empty set, when
    // present, sorts first).
    const std::vector<Entry>& focal() const { return focal_; }

    double mass(Mask m) const;
    double empty_mass() const { return mass(0); }
    bool normalized() const { return normalized_; }

    // Credibility: total mass of non-empty subsets of `a`.
    double bel(Mask a) const;

    // Plausibility: total mass of focal sets intersecting `a`.
    double pl(Mask a) const;

private:
    MassFunction(FramePtr frame, std::vector<Entry> focal, bool normalized)
        : frame_(std::move(frame)), focal_(std::move(focal)), normalized_(normalized) {}

    static MassFunction build(FramePtr frame, std::vector<Entry> assignments,
                              bool allow_empty);

    FramePtr frame_;
    std::vector<Entry> focal_;
    bool normalized_;
};

// Shorthand for the spec-level free functions.
inline double bel(const MassFunction& m, Mask a) { return m.bel(a); }
inline double pl(const MassFunction& m, Mask a) { return m.pl(a); }

inline const std::vector<MassFunction::Entry>& focal_elements(const MassFunction& m) {
    return m.focal();
}

void require_same_frame(const MassFunction& m1, const MassFunction& m2);

}  // namespace credmatch
