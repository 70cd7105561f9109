#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "theta/bigint.hpp"

namespace theta {

enum class CheckStatus { Pass, Fail, Threshold };

struct CheckWitness {
    long long index = -1;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string name;
    std::map<std::string, long long> params;
    std::string range;
    std::string tag;  // "theorem" or "conjecture" (conjecture rows are informational)
    CheckStatus status = CheckStatus::Pass;
    long long threshold_n0 = -1;
    std::optional<CheckWitness> witness;
    std::string note;
    long long runtime_ms = 0;

    bool passed() const { return status != CheckStatus::Fail; }
};

struct CheckRowInfo {
    std::string name;
    std::string tag;
    std::string grid;  // human-readable default grid
};

/// Registered rows in registry order.
std::vector<CheckRowInfo> check_rows();

/// Run one row at explicit parameters. Throws UnknownCheck / ParameterDomain.
CheckReport run_check(const std::string& name, const std::map<std::string, long long>& params,
                      int N);

/// Run every registered row over its default parameter grid, one report per
/// row, in registry order. filter: "theorems", "conjectures" or "all".
std::vector<CheckReport> run_suite(const std::string& filter, int N);

/// Rows supporting thresholds (ck_threshold): least n0 <= N such that the
/// condition holds on [n0, N].
CheckReport threshold_scan(const std::string& name, const std::map<std::string, long long>& params,
                           int N);

}  // namespace theta
