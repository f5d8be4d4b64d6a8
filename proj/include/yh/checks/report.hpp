#pragma once
// Named pass/fail results shared by every verification suite.

#include <cstddef>
#include <string>
#include <vector>

namespace yh {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;  // first counterexample, empty on success
};

// Collects instances of one identity family into a single CheckResult.
class CheckBuilder {
public:
    explicit CheckBuilder(std::string name) { res_.name = std::move(name); }

    // Returns ok so callers can stop early.
    bool expect(bool ok, const std::string& instance) {
        if (!ok && res_.passed) {
            res_.passed = false;
            res_.witness = instance;
        }
        ++count_;
        return ok;
    }
    // Builds the witness only on failure.
    template <class F>
    bool expect_lazy(bool ok, F&& witness) {
        if (ok) {
            ++count_;
            return true;
        }
        return expect(false, witness());
    }
    void fail(const std::string& instance) { expect(false, instance); }
    std::size_t count() const { return count_; }
    bool passed() const { return res_.passed; }
    CheckResult result() const { return res_; }

private:
    CheckResult res_;
    std::size_t count_ = 0;
};

inline bool all_passed(const std::vector<CheckResult>& v) {
    for (const auto& c : v)
        if (!c.passed) return false;
    return true;
}

inline std::string first_failure(const std::vector<CheckResult>& v) {
    for (const auto& c : v)
        if (!c.passed) return c.name + ": " + c.witness;
    return {};
}

inline std::string clip(const std::string& s, std::size_t n = 400) { return s.size() <= n ? s : s.substr(0, n) + "..."; }

}  // namespace yh
