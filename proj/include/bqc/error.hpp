#pragma once
#include <stdexcept>
#include <string>
#include <vector>

namespace bqc {

// malformed input: wrong table shapes, dangling ids, cross-group products
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a construction was handed data that fails the algebraic requirements
struct AxiomFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a search or generator count cap was hit
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AxiomCheck {
    std::string name;
    bool passed = true;
    std::vector<int> witness;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool sampled = false;
    long long samples = 0;

    bool ok() const {
        for (auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const AxiomCheck* first_failure() const {
        for (auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
    AxiomCheck& add(const std::string& name) {
        checks.push_back({name, true, {}, {}});
        return checks.back();
    }
    std::string summary() const;
};

}  // namespace bqc
