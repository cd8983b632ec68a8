#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "specvol/mirzakhani.hpp"
#include "specvol/trec.hpp"

namespace specvol {

struct Instance {
    int g = 0;
    int n = 0;
};

/// Every (g,n) with 1 <= 2g-2+n <= max_complexity and n >= 1, ordered by
/// 2g-2+n, then by g.
std::vector<Instance> sweep_instances(int max_complexity);

struct InstanceResult {
    Instance instance;
    bool passed = false;
    std::string detail;  // first differing coefficient on failure
    double seconds = 0;
};

struct VerifyReport {
    std::string name;
    std::vector<InstanceResult> results;

    bool ok() const;
    std::string render() const;
};

/// Owns the engines a sweep needs; engines are built lazily and shared across
/// sweeps so later sweeps reuse earlier correlators.
class Verifier {
public:
    explicit Verifier(CorrelatorStore* store = nullptr);

    static const std::vector<std::string>& sweep_names();

    /// name in {"1", "2", "3", "specialization", "crossengine"}.
    VerifyReport run(std::string_view name, int max_complexity);

    RecursionEngine& okuyama();
    RecursionEngine& topq();
    RecursionEngine& wp();
    MirzakhaniEngine& q_mirzakhani();
    MirzakhaniEngine& classical_mirzakhani();

private:
    std::string check_structure(int g, int n);
    std::string check_wp_limit(int g, int n);
    std::string check_top_degree(int g, int n);
    std::string check_specialization(int g, int n);
    std::string check_crossengine(int g, int n);

    CorrelatorStore* store_;
    std::unique_ptr<RecursionEngine> okuyama_, topq_, wp_;
    std::unique_ptr<MirzakhaniEngine> q_mirz_, classical_mirz_;
};

}  // namespace specvol
