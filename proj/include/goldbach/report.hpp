// report.hpp
//
// Structured record of a verification run: one entry per checked inequality,
// keyed by the chain's label, with the target constant and direction, the
// computed enclosure, and a pass/fail status.  Serialized as deterministic
// key-value text plus a human summary; wall time is kept out of the file so
// outputs are byte-identical across runs with the same config and version.

#pragma once

#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "goldbach/interval.hpp"

namespace goldbach {

inline const char* kVersion = "0.1.0";

enum class Direction { below, above, window, flag };

struct ReportEntry {
    std::string label;
    std::string description;
    Direction dir = Direction::below;
    double target = 0.0;
    double target2 = 0.0; // window upper end
    Interval computed;
    bool pass = false;
    bool informational = false; // recorded but excluded from the verdict

    static ReportEntry le(const std::string& label, const Interval& v, double target,
                          const std::string& desc) {
        ReportEntry e{label, desc, Direction::below, target, 0.0, v};
        e.pass = v.hi <= target;
        return e;
    }
    static ReportEntry ge(const std::string& label, const Interval& v, double target,
                          const std::string& desc) {
        ReportEntry e{label, desc, Direction::above, target, 0.0, v};
        e.pass = v.lo >= target;
        return e;
    }
    static ReportEntry window(const std::string& label, const Interval& v, double lo,
                              double hi, const std::string& desc) {
        ReportEntry e{label, desc, Direction::window, lo, hi, v};
        e.pass = v.lo >= lo && v.hi <= hi;
        return e;
    }
    static ReportEntry flag(const std::string& label, bool ok, const std::string& desc) {
        ReportEntry e{label, desc, Direction::flag, 0.0, 0.0, Interval::exact(ok ? 1.0 : 0.0)};
        e.pass = ok;
        return e;
    }

    ReportEntry& info() {
        informational = true;
        return *this;
    }
};

struct Report {
    std::string task;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<ReportEntry> entries;
    double wall_seconds = 0.0;

    void add(ReportEntry e) { entries.push_back(std::move(e)); }

    bool pass() const {
        for (const auto& e : entries)
            if (!e.informational && !e.pass) return false;
        return true;
    }

    int failures() const {
        int n = 0;
        for (const auto& e : entries)
            if (!e.informational && !e.pass) ++n;
        return n;
    }

    void merge(const Report& o) {
        for (const auto& e : o.entries) {
            ReportEntry c = e;
            c.label = o.task + "/" + c.label;
            entries.push_back(std::move(c));
        }
    }

    static std::string num(double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }

    void write(std::ostream& os) const {
        os << "# verification report\n";
        os << "version " << kVersion << "\n";
        os << "task " << task << "\n";
        for (const auto& kv : config) os << "config " << kv.first << "=" << kv.second << "\n";
        for (const auto& e : entries) {
            os << "entry " << e.label << " " << (e.pass ? "pass" : (e.informational ? "slack" : "FAIL"));
            switch (e.dir) {
            case Direction::below: os << " target<=" << num(e.target); break;
            case Direction::above: os << " target>=" << num(e.target); break;
            case Direction::window:
                os << " window=[" << num(e.target) << "," << num(e.target2) << "]";
                break;
            case Direction::flag: os << " expects=true"; break;
            }
            os << " computed=[" << num(e.computed.lo) << "," << num(e.computed.hi) << "]";
            if (!e.description.empty()) os << " # " << e.description;
            os << "\n";
        }
        os << "summary " << (pass() ? "pass" : "FAIL") << " entries=" << entries.size()
           << " failed=" << failures() << "\n";
    }

    std::string str() const {
        std::ostringstream os;
        write(os);
        return os.str();
    }
};

} // namespace goldbach
