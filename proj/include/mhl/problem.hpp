#pragma once

#include "serialize.hpp"

#include <optional>

namespace mhl {

enum class Verdict { Pass, Fail, NotExists };
const char* verdict_name(Verdict v);

extern const char* const kFormatVersion;
// mhs-check, polarization, monodromy-filtration, relative-monodromy, nilpotent-orbit,
// mixed-orbit, quiver, tilde-w, vfilt, specseq
const std::vector<std::string>& problem_kinds();

struct Problem {
    std::string kind;
    io::json payload;
};

// Throws Parse on malformed text and Schema on unknown kinds or versions.
Problem parse_problem(const std::string& text);
io::json problem_json(const Problem& p);
std::string serialize_problem(const Problem& p);
// FNV-1a 64 of the canonical serialization, as 16 hex digits.
std::string problem_digest(const Problem& p);

struct Report {
    std::string kind;
    Verdict verdict = Verdict::Pass;
    std::vector<Clause> clauses;
    io::json result = io::json::object();
    std::string digest;
    std::optional<double> timing_ms;
};

// Input errors (Parse, Schema, DimensionMismatch, InvalidFiltration) propagate as Error.
// Other library errors become a failed clause named after the error.
Report run_problem(const Problem& p, bool timing = false);
Problem generate_problem(const std::string& kind, std::uint64_t seed, std::size_t dim);

std::string report_machine(const Report& r);
// verbosity 0: verdict only, 1: clauses with failing witnesses, 2: all witnesses and the result.
std::string report_text(const Report& r, int verbosity);

bool is_input_error(ErrorCode c);

} // namespace mhl
