#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqdisc/sampling.hpp"

namespace sqdisc {

using json = nlohmann::ordered_json;

struct Verdict {
    std::string name;
    bool ok = true;
    json value;
};

/// Result of one CLI command. Every failed verdict contributes exactly one
/// counterexample, so `counterexamples` is empty iff all verdicts hold.
class Report {
public:
    Report(std::string command, json inputs) : command_(std::move(command)), inputs_(std::move(inputs)) {}

    void add(std::string name, bool ok, json value = nullptr, json counterexample = nullptr);
    /// Appends another report's verdicts and counterexamples (used by suite "all").
    void merge(const Report& other);

    bool ok() const { return counterexamples_.empty(); }
    const std::vector<Verdict>& verdicts() const { return verdicts_; }
    const std::vector<json>& counterexamples() const { return counterexamples_; }
    void set_timing(double seconds) { seconds_ = seconds; }

    json to_json() const;
    std::string human() const;

private:
    std::string command_;
    json inputs_;
    std::vector<Verdict> verdicts_;
    std::vector<json> counterexamples_;
    std::optional<double> seconds_;
};

struct SuiteOptions {
    long height = 50;
    /// Per-N sample count for thm1/thm2, total curves for prop-equivalence.
    /// Zero selects the suite's own default (100, 50, 1000).
    int samples = 0;
    std::uint64_t seed = Sampler::kDefaultSeed;
    unsigned threads = 1;
};

inline const std::vector<std::string> kSuiteNames = {
    "congruences", "tables-C", "tables-X", "finite-cases", "cm", "thm1", "thm2", "prop-equivalence", "all"};

Report cmd_classify(const std::string& curve);
Report cmd_family(int N, const std::string& t);
Report cmd_verify(const std::string& suite, const SuiteOptions& opts = {});
Report cmd_search(int N, const std::string& which, long height, unsigned threads = 1);

// Individual suites, also reachable through cmd_verify.
Report suite_congruences();
Report suite_tables_C(const SuiteOptions& opts);
Report suite_tables_X(const SuiteOptions& opts);
Report suite_finite_cases();
Report suite_cm();
Report suite_thm1(const SuiteOptions& opts);
Report suite_thm2(const SuiteOptions& opts);
Report suite_prop_equivalence(const SuiteOptions& opts);

}  // namespace sqdisc

namespace sqdisc {

struct GeneralModel;

/// A pseudo-random curve for the classifier equivalence suite: a random short
/// model or one of its quadratic, quartic or sextic twists, sometimes built
/// to have a square discriminant, then moved by a random change of variables.
GeneralModel sample_curve(Sampler& rng);

}  // namespace sqdisc
