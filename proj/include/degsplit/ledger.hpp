#pragma once

#include <string>
#include <vector>

#include "degsplit/errors.hpp"

namespace degsplit {

// Unit tags for the black-box subroutines whose invocations we account for
// instead of simulating distributed rounds. BO carries its degree/epsilon
// parameter; the other units are parameterless.
enum class UnitKind : std::uint8_t { SO, BO, MM, RS32, LLL_RESAMPLE };

struct LedgerEntry {
    std::string phase;    // pipeline phase label, e.g. "split/halve[2]"
    UnitKind unit;
    double param = 0.0;   // BO only: the d in T_BO(d)
    long count = 1;
    long overhead = 1;    // simulation factor of the level the call ran on
};

// Append-only invocation log. A pipeline's ledger is the concatenation of
// its phases' ledgers, so sub-pipelines just keep appending under a prefix.
class CostLedger {
public:
    void add(std::string phase, UnitKind unit, double param = 0.0,
             long count = 1, long overhead = 1) {
        if (count <= 0 || overhead <= 0)
            throw Error("ledger entries need positive count and overhead");
        entries_.push_back({std::move(phase), unit, param, count, overhead});
    }

    const std::vector<LedgerEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    long count_of(UnitKind unit) const {
        long c = 0;
        for (const auto& e : entries_)
            if (e.unit == unit) c += e.count;
        return c;
    }

    std::vector<LedgerEntry> entries_of(UnitKind unit) const {
        std::vector<LedgerEntry> out;
        for (const auto& e : entries_)
            if (e.unit == unit) out.push_back(e);
        return out;
    }

    // One JSON object per line: {"phase":..., "unit":..., ...}.
    std::string to_json_lines() const;

private:
    std::vector<LedgerEntry> entries_;
};

std::string to_string(UnitKind u);

}  // namespace degsplit
