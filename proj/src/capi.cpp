#include "mhl.h"

#include "mhl/problem.hpp"

#include <cstdlib>
#include <cstring>

struct mhl_problem {
    mhl::Problem p;
};

struct mhl_report {
    mhl::Report r;
};

namespace {

thread_local std::string g_error;

mhl_status status_of(mhl::ErrorCode c)
{
    switch (c) {
    case mhl::ErrorCode::Parse: return MHL_ERR_PARSE;
    case mhl::ErrorCode::Schema:
    case mhl::ErrorCode::InvalidFiltration: return MHL_ERR_SCHEMA;
    case mhl::ErrorCode::DimensionMismatch: return MHL_ERR_DIMENSION;
    case mhl::ErrorCode::Unsupported: return MHL_ERR_UNSUPPORTED;
    case mhl::ErrorCode::Internal: return MHL_ERR_INTERNAL;
    default: return MHL_ERR_MATH;
    }
}

template <class F> mhl_status guard(F f)
{
    g_error.clear();
    try {
        f();
        return MHL_OK;
    } catch (const mhl::Error& e) {
        g_error = std::string(mhl::error_name(e.code())) + ": " + e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_error = "out of memory";
        return MHL_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_error = e.what();
        return MHL_ERR_INTERNAL;
    }
}

mhl_status bad_argument(const char* what)
{
    g_error = what;
    return MHL_ERR_ARGUMENT;
}

char* copy(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* mhl_version(void) { return mhl::kFormatVersion; }

const char* mhl_status_name(mhl_status s)
{
    switch (s) {
    case MHL_OK: return "ok";
    case MHL_ERR_PARSE: return "parse error";
    case MHL_ERR_SCHEMA: return "schema error";
    case MHL_ERR_DIMENSION: return "dimension mismatch";
    case MHL_ERR_UNSUPPORTED: return "unsupported";
    case MHL_ERR_MATH: return "precondition failed";
    case MHL_ERR_ARGUMENT: return "bad argument";
    default: return "internal error";
    }
}

const char* mhl_last_error(void) { return g_error.c_str(); }

size_t mhl_kind_count(void) { return mhl::problem_kinds().size(); }

const char* mhl_kind_name(size_t i)
{
    const auto& k = mhl::problem_kinds();
    return i < k.size() ? k[i].c_str() : nullptr;
}

mhl_status mhl_problem_parse(const char* text, size_t len, mhl_problem** out)
{
    if (!text || !out)
        return bad_argument("null argument");
    *out = nullptr;
    return guard([&] { *out = new mhl_problem{mhl::parse_problem(std::string(text, len))}; });
}

mhl_status mhl_problem_generate(const char* kind, uint64_t seed, size_t dim, mhl_problem** out)
{
    if (!kind || !out)
        return bad_argument("null argument");
    *out = nullptr;
    return guard([&] { *out = new mhl_problem{mhl::generate_problem(kind, seed, dim)}; });
}

mhl_status mhl_problem_serialize(const mhl_problem* p, char** out)
{
    if (!p || !out)
        return bad_argument("null argument");
    *out = nullptr;
    return guard([&] { *out = copy(mhl::serialize_problem(p->p)); });
}

const char* mhl_problem_kind(const mhl_problem* p) { return p ? p->p.kind.c_str() : nullptr; }

void mhl_problem_free(mhl_problem* p) { delete p; }

mhl_status mhl_run(const mhl_problem* p, int timing, mhl_report** out)
{
    if (!p || !out)
        return bad_argument("null argument");
    *out = nullptr;
    return guard([&] { *out = new mhl_report{mhl::run_problem(p->p, timing != 0)}; });
}

mhl_verdict mhl_report_verdict(const mhl_report* r)
{
    if (!r)
        return MHL_FAIL;
    switch (r->r.verdict) {
    case mhl::Verdict::Pass: return MHL_PASS;
    case mhl::Verdict::Fail: return MHL_FAIL;
    default: return MHL_NOT_EXISTS;
    }
}

const char* mhl_report_digest(const mhl_report* r) { return r ? r->r.digest.c_str() : nullptr; }

size_t mhl_report_clause_count(const mhl_report* r) { return r ? r->r.clauses.size() : 0; }

mhl_status mhl_report_clause(const mhl_report* r, size_t i, const char** name, int* ok, const char** witness)
{
    if (!r || i >= r->r.clauses.size())
        return bad_argument("no such clause");
    const auto& c = r->r.clauses[i];
    if (name)
        *name = c.name.c_str();
    if (ok)
        *ok = c.ok ? 1 : 0;
    if (witness)
        *witness = c.witness.c_str();
    return MHL_OK;
}

mhl_status mhl_report_format(const mhl_report* r, int machine, int verbosity, char** out)
{
    if (!r || !out)
        return bad_argument("null argument");
    *out = nullptr;
    return guard([&] { *out = copy(machine ? mhl::report_machine(r->r) : mhl::report_text(r->r, verbosity)); });
}

void mhl_report_free(mhl_report* r) { delete r; }

void mhl_string_free(char* s) { std::free(s); }

} // extern "C"
