#ifndef OHK_REPORT_HPP
#define OHK_REPORT_HPP

#include <string>
#include <vector>

#include "ohk/field.hpp"

namespace ohk {

enum class CheckStatus { Pass, Fail, Error };

struct CheckEntry {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string witness; // sparse rendering of an offending vector/tuple
};

struct CheckReport {
    std::vector<CheckEntry> entries;

    void add(std::string name, bool ok, std::string witness = "") {
        entries.push_back({std::move(name),
                           ok ? CheckStatus::Pass : CheckStatus::Fail,
                           ok ? "" : std::move(witness)});
    }
    void merge(const CheckReport& o, const std::string& prefix = "") {
        for (const CheckEntry& e : o.entries)
            entries.push_back({prefix + e.name, e.status, e.witness});
    }
    bool ok() const {
        for (const CheckEntry& e : entries)
            if (e.status != CheckStatus::Pass) return false;
        return true;
    }
    std::string first_failure() const {
        for (const CheckEntry& e : entries)
            if (e.status != CheckStatus::Pass)
                return e.name + (e.witness.empty() ? "" : " [" + e.witness + "]");
        return "";
    }
};

/// Sparse coefficient rendering over labeled basis vectors,
/// e.g. "1*e - 1*g2".
std::string render_vector(const std::vector<Rat>& v,
                          const std::vector<std::string>& labels);

} // namespace ohk

#endif
