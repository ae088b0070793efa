#include "credmatch/evidence.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace credmatch {

namespace {
constexpr double kSumTolerance = 1e-9;
}

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    full_ = (n == 64) ? ~Mask{0} : ((Mask{1} << n) - 1);
}

FramePtr Frame::make(std::vector<std::string> labels) {
    if (labels.empty())
        fail(Error::Code::EmptyFrame, "frame needs at least one label");
    if (labels.size() > 64)
        fail(Error::Code::FrameTooLarge,
             "frame holds at most 64 labels, got " + std::to_string(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty())
            fail(Error::Code::EmptyFrame, "frame label may not be empty");
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j])
                fail(Error::Code::DuplicateLabel, "duplicate frame label: " + labels[i]);
    }
    return FramePtr(new Frame(std::move(labels)));
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

Mask Frame::singleton_of(std::string_view label) const {
    auto i = index_of(label);
    if (!i) fail(Error::Code::BadSubset, "unknown label: " + std::string(label));
    return singleton(*i);
}

std::string Frame::subset_name(Mask m) const {
    if (m == 0) return "{}";
    std::string out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (m & singleton(i)) {
            if (!out.empty()) out += '|';
            out += labels_[i];
        }
    }
    return out;
}

Mask Frame::parse_subset(std::string_view text) const {
    if (text == "{}") return 0;
    if (text == "*") return full_;
    Mask m = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t sep = text.find('|', start);
        std::string_view part =
            text.substr(start, sep == std::string_view::npos ? sep : sep - start);
        m |= singleton_of(part);
        if (sep == std::string_view::npos) break;
        start = sep + 1;
    }
    return m;
}

bool Frame::compatible(const Frame& other) const {
    return this == &other || labels_ == other.labels_;
}

MassFunction MassFunction::build(FramePtr frame, std::vector<Entry> assignments,
                                 bool allow_empty) {
    std::map<Mask, double> merged;
    for (const auto& [mask, value] : assignments) {
        if (!frame->valid(mask))
            fail(Error::Code::BadSubset, "subset mask outside frame");
        if (value < 0.0 || value > 1.0 + kSumTolerance)
            fail(Error::Code::MassOutOfRange,
                 "mass " + std::to_string(value) + " outside [0,1]");
        if (value == 0.0) continue;
        merged[mask] += std::min(value, 1.0);
    }
    if (!allow_empty && merged.count(0))
        fail(Error::Code::EmptySetMass, "mass on the empty set is not allowed");

    double sum = 0.0;
    for (const auto& [mask, value] : merged) sum += value;
    if (std::abs(sum - 1.0) > kSumTolerance)
        fail(Error::Code::SumNotOne, "masses sum to " + std::to_string(sum));

    std::vector<Entry> focal(merged.begin(), merged.end());
    for (auto& [mask, value] : focal) value /= sum;
    bool normalized = focal.empty() || focal.front().first != 0;
    return MassFunction(std::move(frame), std::move(focal), normalized);
}

MassFunction MassFunction::make(FramePtr frame, std::vector<Entry> assignments) {
    return build(std::move(frame), std::move(assignments), false);
}

MassFunction MassFunction::make_open(FramePtr frame, std::vector<Entry> assignments) {
    return build(std::move(frame), std::move(assignments), true);
}

MassFunction MassFunction::categorical(FramePtr frame, Mask subset) {
    if (subset == 0)
        fail(Error::Code::EmptySubset, "categorical bba needs a non-empty subset");
    if (!frame->valid(subset))
        fail(Error::Code::BadSubset, "subset mask outside frame");
    return MassFunction(std::move(frame), {{subset, 1.0}}, true);
}

MassFunction MassFunction::vacuous(FramePtr frame) {
    Mask full = frame->full();
    return MassFunction(std::move(frame), {{full, 1.0}}, true);
}

double MassFunction::mass(Mask m) const {
    auto it = std::lower_bound(focal_.begin(), focal_.end(), m,
                               [](const Entry& e, Mask key) { return e.first < key; });
    if (it != focal_.end() && it->first == m) return it->second;
    return 0.0;
}

double MassFunction::bel(Mask a) const {
    double sum = 0.0;
    for (const auto& [b, v] : focal_)
        if (b != 0 && (b & ~a) == 0) sum += v;
    return sum;
}

double MassFunction::pl(Mask a) const {
    double sum = 0.0;
    for (const auto& [b, v] : focal_)
        if ((b & a) != 0) sum += v;
    return sum;
}

void require_same_frame(const MassFunction& m1, const MassFunction& m2) {
    if (!m1.frame()->compatible(*m2.frame()))
        fail(Error::Code::FrameMismatch, "mass functions live on different frames");
}

}  // namespace credmatch
