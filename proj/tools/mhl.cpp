#include "mhl.h"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

int input_error(const std::string& msg)
{
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int status_error(mhl_status s) { return input_error(std::string(mhl_status_name(s)) + ": " + mhl_last_error()); }

int verbosity()
{
    const char* v = std::getenv("MHL_VERBOSE");
    if (!v || !*v)
        return 1;
    int x = std::atoi(v);
    return x < 0 ? 0 : (x > 2 ? 2 : x);
}

bool read_input(const std::string& path, std::string& out)
{
    if (path == "-") {
        out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool write_output(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout.flush());
    }
    std::ofstream o(path, std::ios::binary);
    o << text;
    return static_cast<bool>(o);
}

int run_check(const std::string& file, const std::string& format, const std::string& output, bool timing)
{
    std::string text;
    if (!read_input(file, text))
        return input_error("cannot read " + file);
    mhl_problem* p = nullptr;
    if (mhl_status s = mhl_problem_parse(text.data(), text.size(), &p); s != MHL_OK)
        return status_error(s);
    mhl_report* r = nullptr;
    mhl_status s = mhl_run(p, timing ? 1 : 0, &r);
    mhl_problem_free(p);
    if (s != MHL_OK)
        return status_error(s);
    char* out = nullptr;
    s = mhl_report_format(r, format == "machine", verbosity(), &out);
    mhl_verdict v = mhl_report_verdict(r);
    mhl_report_free(r);
    if (s != MHL_OK)
        return status_error(s);
    bool ok = write_output(output, out);
    mhl_string_free(out);
    if (!ok)
        return input_error("cannot write " + output);
    return v == MHL_PASS ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks for mixed Hodge structures, perverse quivers, V-filtrations and spectral sequences"};
    app.require_subcommand(1);

    std::string file, format = "text", output, kind;
    bool timing = false;
    std::uint64_t seed = 0;
    std::size_t dim = 6;

    auto* check = app.add_subcommand("check", "Run a problem file and print its report");
    check->add_option("file", file, "Problem file, - for stdin")->required();
    check->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    check->add_option("-o,--output", output, "Write the report to a path");
    check->add_flag("--timing", timing, "Record wall time in the report");

    std::string rformat = "machine";
    auto* report = app.add_subcommand("report", "Like check, machine format by default");
    report->add_option("file", file, "Problem file, - for stdin")->required();
    report->add_option("--format", rformat, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    report->add_option("-o,--output", output, "Write the report to a path");
    report->add_flag("--timing", timing, "Record wall time in the report");

    auto* gen = app.add_subcommand("generate", "Write a random problem of the given kind");
    gen->add_option("kind", kind, "Problem kind")->required();
    gen->add_option("--seed", seed, "Seed");
    gen->add_option("--dim", dim, "Dimension bound")->check(CLI::Range(1, 64));
    gen->add_option("-o,--output", output, "Write the problem to a path");

    auto* kinds = app.add_subcommand("kinds", "List problem kinds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*check)
        return run_check(file, format, output, timing);
    if (*report)
        return run_check(file, rformat, output, timing);
    if (*kinds) {
        for (std::size_t i = 0; i < mhl_kind_count(); ++i)
            std::cout << mhl_kind_name(i) << "\n";
        return 0;
    }
    mhl_problem* p = nullptr;
    if (mhl_status s = mhl_problem_generate(kind.c_str(), seed, dim, &p); s != MHL_OK)
        return status_error(s);
    char* text = nullptr;
    mhl_status s = mhl_problem_serialize(p, &text);
    mhl_problem_free(p);
    if (s != MHL_OK)
        return status_error(s);
    bool ok = write_output(output, text);
    mhl_string_free(text);
    return ok ? 0 : input_error("cannot write " + output);
}
