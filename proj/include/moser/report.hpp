#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "moser/error.hpp"

namespace moser {

using json = nlohmann::json;

// One verified instance. Keys are canonical strings such as
// "group=Z6;A=0,1;B=0,2;c=3" so that reports diff cleanly.
struct Record {
    std::string theorem;
    std::string instance;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = true;
    bool tight = false;
    json witness;  // optional structured payload

    json to_json() const {
        json j{{"theorem", theorem}, {"instance", instance}, {"lhs", lhs}, {"rhs", rhs}, {"holds", holds}, {"tight", tight}};
        if (!witness.is_null()) j["witness"] = witness;
        return j;
    }
};

enum class RecordPolicy { Violations, Tight, All };

inline RecordPolicy parse_record_policy(const std::string& s) {
    if (s == "violations") return RecordPolicy::Violations;
    if (s == "tight") return RecordPolicy::Tight;
    if (s == "all") return RecordPolicy::All;
    throw Error("unknown record policy '" + s + "' (violations|tight|all)");
}

struct ReportSummary {
    uint64_t instances = 0;
    uint64_t violations = 0;
    uint64_t tight = 0;
};

// Collects records under a retention policy. Summary counters always see
// every instance; the records array keeps violations unconditionally and
// tight/clean instances only when asked, so exhaustive sweeps stay lean.
struct RecordSink {
    RecordPolicy policy = RecordPolicy::Violations;
    ReportSummary summary;
    std::vector<Record> records;

    // True when a record with these flags would be retained; lets hot
    // loops skip building key strings for instances that only get counted.
    bool wants(bool holds, bool tight) const {
        return !holds || policy == RecordPolicy::All || (policy == RecordPolicy::Tight && tight);
    }

    void count(bool holds, bool tight) {
        ++summary.instances;
        if (!holds) ++summary.violations;
        if (tight) ++summary.tight;
    }

    void add(Record rec) {
        count(rec.holds, rec.tight);
        if (wants(rec.holds, rec.tight)) records.push_back(std::move(rec));
    }

    void absorb(RecordSink&& other) {
        summary.instances += other.summary.instances;
        summary.violations += other.summary.violations;
        summary.tight += other.summary.tight;
        records.insert(records.end(), std::make_move_iterator(other.records.begin()),
                       std::make_move_iterator(other.records.end()));
    }
};

// Report files must be byte-identical across repeated runs with the same
// spec and seed, so wall-clock time never enters the JSON/CSV forms; the
// text rendering takes it separately.
struct VerificationReport {
    static constexpr int kSchema = 1;

    json spec;
    ReportSummary summary;
    std::vector<Record> records;

    bool clean() const { return summary.violations == 0; }

    void sort_records() {
        std::sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
            if (a.theorem != b.theorem) return a.theorem < b.theorem;
            return a.instance < b.instance;
        });
    }

    void merge(VerificationReport&& other) {
        summary.instances += other.summary.instances;
        summary.violations += other.summary.violations;
        summary.tight += other.summary.tight;
        records.insert(records.end(), std::make_move_iterator(other.records.begin()),
                       std::make_move_iterator(other.records.end()));
    }

    json to_json() const {
        json recs = json::array();
        for (const auto& r : records) recs.push_back(r.to_json());
        return json{{"schema", kSchema},
                    {"spec", spec},
                    {"summary",
                     {{"instances", summary.instances}, {"violations", summary.violations}, {"tight", summary.tight}}},
                    {"records", recs}};
    }

    std::string to_json_string() const { return to_json().dump(2) + "\n"; }

    std::string to_csv() const {
        std::ostringstream out;
        out << "# schema=" << kSchema << "\n";
        out << "# spec=" << spec.dump() << "\n";
        out << "# instances=" << summary.instances << " violations=" << summary.violations << " tight=" << summary.tight
            << "\n";
        out << "theorem,instance,lhs,rhs,holds,tight\n";
        for (const auto& r : records) {
            out << r.theorem << ",\"" << r.instance << "\"," << r.lhs << "," << r.rhs << "," << (r.holds ? 1 : 0) << ","
                << (r.tight ? 1 : 0) << "\n";
        }
        return out.str();
    }

    std::string to_text(double runtime_seconds = -1) const {
        std::ostringstream out;
        out << "spec: " << spec.dump() << "\n";
        out << "instances: " << summary.instances << "  violations: " << summary.violations
            << "  tight: " << summary.tight << "\n";
        if (runtime_seconds >= 0) out << "runtime: " << runtime_seconds << "s\n";
        size_t shown = 0;
        for (const auto& r : records) {
            if (shown++ >= 200) {
                out << "... (" << records.size() - 200 << " more records; use --format json for all)\n";
                break;
            }
            out << (r.holds ? (r.tight ? "TIGHT " : "ok    ") : "VIOLATION ") << r.theorem << " " << r.instance
                << " lhs=" << r.lhs << " rhs=" << r.rhs;
            if (!r.witness.is_null()) out << " witness=" << r.witness.dump();
            out << "\n";
        }
        out << (clean() ? "RESULT: clean\n" : "RESULT: VIOLATIONS FOUND\n");
        return out.str();
    }
};

}  // namespace moser
