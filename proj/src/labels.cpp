#include "vaxlens/labels.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "vaxlens/errors.hpp"

namespace vaxlens::labels {

namespace {

// The CAVES taxonomy: 11 concern classes plus "none", alphabetical order.
// Descriptions are stored with the exact punctuation of the annotation
// table (including the "--" separators) so generative targets reproduce
// byte-for-byte.
const std::vector<LabelCatalog::Entry>& caves_entries() {
    static const std::vector<LabelCatalog::Entry> entries = {
        {"conspiracy",
         "Deeper Conspiracy -- The tweet suggests some deeper conspiracy, and not just that the "
         "Big Pharma want to make money (e.g., vaccines are being used to track people, COVID is "
         "a hoax)."},
        {"country",
         "Country of origin -- The tweet is against some vaccine because of the country where it "
         "was developed/manufactured."},
        {"ineffective",
         "Vaccine is ineffective -- The tweet expresses concerns that the vaccines are not "
         "effective enough and are useless."},
        {"ingredients",
         "Vaccine Ingredients/technology -- The tweet expresses concerns about the ingredients "
         "present in the vaccines (eg. fetal cells, chemicals) or the technology used (e.g., mRNA "
         "vaccines can change your DNA)."},
        {"mandatory",
         "Against mandatory vaccination -- The tweet suggests that vaccines should not be made "
         "mandatory."},
        {"none",
         "No specific reason stated in the tweet, or some reason other than the given ones."},
        {"pharma",
         "Against Big Pharma -- The tweet indicates that the Big Pharmaceutical companies are "
         "just trying to earn money, or is against such companies in general because of their "
         "history."},
        {"political",
         "Political side of vaccines -- The tweet expresses concerns that the "
         "governments/politicians are pushing their own agenda though the vaccines."},
        {"religious", "The tweet opposes vaccines due to religious reasons."},
        {"rushed",
         "Untested/Rushed Process -- The tweet expresses concerns that the vaccines have not "
         "been tested properly or that the published data is not accurate."},
        {"side-effect",
         "Side Effects/Deaths -- The tweet expresses concerns about the side effects of the "
         "vaccines, including deaths."},
        {"unnecessary",
         "The tweet indicates vaccines are unnecessary, or that alternate cures are better."},
    };
    return entries;
}

}  // namespace

const LabelCatalog& LabelCatalog::canonical() {
    static const LabelCatalog catalog = from_entries("caves-12.v1", caves_entries());
    return catalog;
}

LabelCatalog LabelCatalog::from_entries(std::string version, std::vector<Entry> entries,
                                        std::string fallback_name) {
    if (entries.empty()) throw ConfigError("label catalog: no entries");
    if (entries.size() > 64) throw ConfigError("label catalog: more than 64 labels unsupported");

    LabelCatalog cat;
    cat.version_ = std::move(version);
    cat.entries_ = std::move(entries);
    for (std::size_t i = 0; i < cat.entries_.size(); ++i) {
        const Entry& e = cat.entries_[i];
        if (e.name.empty()) throw ConfigError("label catalog: empty label name");
        if (e.description.empty())
            throw ConfigError("label catalog: empty description for label '" + e.name + "'");
        for (std::size_t j = 0; j < i; ++j) {
            if (cat.entries_[j].name == e.name)
                throw ConfigError("label catalog: duplicate label name '" + e.name + "'");
            if (cat.entries_[j].description == e.description)
                throw ConfigError("label catalog: duplicate description under '" + e.name + "'");
        }
        cat.all_.push_back(Label{static_cast<std::uint8_t>(i)});
        if (e.name == fallback_name) cat.fallback_ = cat.all_.back();
    }
    return cat;
}

LabelCatalog LabelCatalog::from_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("label catalog: cannot open " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("label catalog: invalid JSON in " + path.string() + ": " + e.what());
    }
    if (!doc.contains("labels") || !doc["labels"].is_array())
        throw SchemaError("label catalog: missing 'labels' array in " + path.string());
    std::vector<Entry> entries;
    for (const auto& row : doc["labels"]) {
        if (!row.contains("name") || !row.contains("description"))
            throw SchemaError("label catalog: row without name/description in " + path.string());
        entries.push_back({row["name"].get<std::string>(), row["description"].get<std::string>()});
    }
    return from_entries(doc.value("version", std::string("unversioned")), std::move(entries));
}

void LabelCatalog::save_json_file(const std::filesystem::path& path) const {
    nlohmann::json doc;
    doc["version"] = version_;
    doc["labels"] = nlohmann::json::array();
    for (const Entry& e : entries_)
        doc["labels"].push_back({{"name", e.name}, {"description", e.description}});
    std::ofstream out(path);
    if (!out) throw IoError("label catalog: cannot write " + path.string());
    out << doc.dump(2) << "\n";
}

std::string_view LabelCatalog::name(Label l) const {
    if (!l.valid() || l.index >= entries_.size())
        throw LookupError("label index out of range");
    return entries_[l.index].name;
}

std::string_view LabelCatalog::description(Label l) const {
    if (!l.valid() || l.index >= entries_.size())
        throw LookupError("label index out of range");
    return entries_[l.index].description;
}

std::optional<Label> LabelCatalog::find(std::string_view name) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].name == name) return Label{static_cast<std::uint8_t>(i)};
    return std::nullopt;
}

Label LabelCatalog::label(std::string_view name) const {
    if (auto l = find(name)) return *l;
    throw LookupError("unknown label identifier '" + std::string(name) + "'");
}

Label LabelCatalog::label_of_description(std::string_view text) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].description == text) return Label{static_cast<std::uint8_t>(i)};
    throw LookupError("text is not a canonical label description");
}

LabelSet LabelSet::checked(LabelMask mask, const LabelCatalog& catalog) {
    if ((mask & ~catalog.full_mask()) != 0)
        throw ContractError("label set contains bits outside the catalog");
    LabelSet s = postprocess(mask, catalog);
    if (s.mask() != mask)
        throw ContractError("label set violates invariants (empty, or fallback beside others)");
    return s;
}

int LabelSet::size() const { return static_cast<int>(std::popcount(mask_)); }

std::vector<Label> LabelSet::to_vector() const {
    std::vector<Label> out;
    for (std::uint8_t i = 0; i < 64; ++i)
        if (mask_ & (LabelMask{1} << i)) out.push_back(Label{i});
    return out;
}

LabelSet postprocess(LabelMask raw, const LabelCatalog& catalog) {
    if ((raw & ~catalog.full_mask()) != 0)
        throw ContractError("label set contains bits outside the catalog");
    std::optional<Label> nl = catalog.fallback();
    if (!nl) {
        if (raw == 0) throw ContractError("empty label set and catalog has no fallback label");
        return LabelSet(raw);
    }
    const LabelMask none_bit = bit(*nl);
    if (raw == 0) return LabelSet(none_bit);
    if ((raw & none_bit) && (raw & ~none_bit)) return LabelSet(raw & ~none_bit);
    return LabelSet(raw);
}

LabelMask mask_from_names(const std::vector<std::string>& names, const LabelCatalog& catalog) {
    LabelMask m = 0;
    for (const std::string& n : names) m |= bit(catalog.label(n));
    return m;
}

std::vector<std::string> names_from_mask(LabelMask mask, const LabelCatalog& catalog) {
    std::vector<std::string> out;
    for (Label l : catalog.all())
        if (mask & bit(l)) out.emplace_back(catalog.name(l));
    return out;
}

std::string joined_names(LabelMask mask, const LabelCatalog& catalog, char sep) {
    std::string out;
    for (const std::string& n : names_from_mask(mask, catalog)) {
        if (!out.empty()) out.push_back(sep);
        out += n;
    }
    return out;
}

}  // namespace vaxlens::labels
