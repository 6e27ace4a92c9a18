#pragma once

#include <cstdint>
#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vaxlens::labels {

// Index into a LabelCatalog. Catalogs are small (<= 64 entries) so label sets
// fit in one 64-bit mask.
struct Label {
    std::uint8_t index = 0xff;

    constexpr bool valid() const { return index < 64; }
    auto operator<=>(const Label&) const = default;
};

using LabelMask = std::uint64_t;

constexpr LabelMask bit(Label l) { return LabelMask{1} << l.index; }

/// The closed label taxonomy: (name, description) rows in canonical order.
///
/// canonical() holds the 12 concern classes with their annotator-facing
/// descriptions stored byte-for-byte; the same table ships as a versioned
/// JSON data file (data/labels.json) so taxonomies can be swapped. Catalogs
/// are immutable after construction and safe for concurrent reads.
class LabelCatalog {
public:
    struct Entry {
        std::string name;         // lowercase ascii token, e.g. "side-effect"
        std::string description;  // canonical annotation text, verbatim
    };

    static const LabelCatalog& canonical();
    static LabelCatalog from_json_file(const std::filesystem::path& path);
    static LabelCatalog from_entries(std::string version, std::vector<Entry> entries,
                                     std::string fallback_name = "none");

    int size() const { return static_cast<int>(entries_.size()); }
    const std::string& version() const { return version_; }

    std::string_view name(Label l) const;
    std::string_view description(Label l) const;

    // throws LookupError on unknown names
    Label label(std::string_view name) const;
    std::optional<Label> find(std::string_view name) const;

    // Exact inverse lookup; non-canonical text -> LookupError (callers must
    // use similarity matching instead).
    Label label_of_description(std::string_view text) const;

    // The "no specific reason" label, if the taxonomy has one.
    std::optional<Label> fallback() const { return fallback_; }

    // All labels in canonical order (the file/table order).
    const std::vector<Label>& all() const { return all_; }

    LabelMask full_mask() const { return size() >= 64 ? ~LabelMask{0} : (LabelMask{1} << size()) - 1; }

    void save_json_file(const std::filesystem::path& path) const;

private:
    std::string version_;
    std::vector<Entry> entries_;
    std::vector<Label> all_;
    std::optional<Label> fallback_;
};

/// A validated non-empty set of labels from one catalog.
///
/// Invariants: never empty, and the fallback label never co-occurs with
/// another label. Arbitrary raw subsets are represented as LabelMask and
/// turned into LabelSets via postprocess() or checked().
class LabelSet {
public:
    static LabelSet checked(LabelMask mask, const LabelCatalog& catalog);

    LabelMask mask() const { return mask_; }
    bool contains(Label l) const { return (mask_ & bit(l)) != 0; }
    int size() const;
    std::vector<Label> to_vector() const;  // ascending canonical order

    bool operator==(const LabelSet&) const = default;

private:
    explicit LabelSet(LabelMask mask) : mask_(mask) {}
    friend LabelSet postprocess(LabelMask, const LabelCatalog&);
    LabelMask mask_ = 0;
};

/// Label-set post-processing: drop the fallback label when it accompanies a
/// real concern; map an empty prediction to {fallback}. Idempotent.
LabelSet postprocess(LabelMask raw, const LabelCatalog& catalog);

// name <-> mask helpers for data files ("a|b|c" columns) and reports
LabelMask mask_from_names(const std::vector<std::string>& names, const LabelCatalog& catalog);
std::vector<std::string> names_from_mask(LabelMask mask, const LabelCatalog& catalog);
std::string joined_names(LabelMask mask, const LabelCatalog& catalog, char sep = '|');

}  // namespace vaxlens::labels
