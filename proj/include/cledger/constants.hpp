#pragma once

#include "cledger/quantity.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cledger {

enum class Provenance { measured, paper, derived };

std::string provenance_name(Provenance p);

struct ConstantEntry {
    std::string name;
    Quantity value;
    Provenance provenance = Provenance::measured;
    std::string note;
    /// For derived entries, the names the value is recomputed from.
    std::vector<std::string> derived_from;
};

/// Ordered table of named physical constants and observations.
///
/// Entries marked `derived` are recomputed from their dependencies when the
/// table is loaded; a stated value more than 0.5 decades away from the
/// recomputed one rejects the whole file.
class ConstantsTable {
public:
    /// Parses the constants-file text format. Throws Error on malformed
    /// lines (with line number), missing required keys, or inconsistent
    /// derived values.
    static ConstantsTable parse(std::string_view text);

    /// The table shipped with the library (data/constants.cgs, embedded
    /// at build time).
    static ConstantsTable builtin();

    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    const Quantity* find(const std::string& name) const;
    const Quantity& get(const std::string& name) const;
    const ConstantEntry& entry(const std::string& name) const;
    const std::vector<ConstantEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Content hash (FNV-1a, hex) of the text the table was parsed from.
    const std::string& fingerprint() const { return fingerprint_; }

    /// Renders the table back into the constants-file format; the result
    /// parses to an equal table.
    std::string serialize() const;

    /// Replaces an entry's magnitude, keeping dimension and metadata.
    /// Used for what-if runs; derived consistency is not re-checked.
    void set_magnitude(const std::string& name, double magnitude);

private:
    std::vector<ConstantEntry> entries_;
    std::map<std::string, std::size_t> index_;
    std::string fingerprint_;
    void add(ConstantEntry entry);
};

/// FNV-1a 64-bit content hash, rendered as 16 hex digits.
std::string content_hash(std::string_view text);

} // namespace cledger
