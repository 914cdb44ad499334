#pragma once

#include <string>
#include <vector>

namespace mhl {

struct Clause {
    std::string name;
    bool ok;
    std::string witness;
};

// Conjunction of named clauses.
struct CheckResult {
    bool ok = true;
    std::vector<Clause> clauses;

    CheckResult& add(const std::string& name, bool passed, const std::string& witness = "")
    {
        clauses.push_back({name, passed, witness});
        ok = ok && passed;
        return *this;
    }
    // Appends the clauses of r with a name prefix.
    CheckResult& merge(const std::string& prefix, const CheckResult& r)
    {
        for (const auto& c : r.clauses)
            add(prefix + c.name, c.ok, c.witness);
        if (r.clauses.empty() && !r.ok)
            add(prefix + "check", false);
        return *this;
    }
    const Clause* first_failure() const
    {
        for (const auto& c : clauses)
            if (!c.ok)
                return &c;
        return nullptr;
    }
    explicit operator bool() const { return ok; }
};

} // namespace mhl
