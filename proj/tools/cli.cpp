#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loewy/analysis.hpp"
#include "loewy/families.hpp"
#include "loewy/io.hpp"
#include "loewy/suites.hpp"

namespace loewy::cli {

namespace {

/// Input problems map to kInvalid; everything else keeps its own exit code.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    Limits limits;

    std::string slurp(const std::string& path) const {
        if (path == "-") {
            std::ostringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }
        std::ifstream file(path, std::ios::binary);
        if (!file) throw InputError("cannot read '" + path + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        return buffer.str();
    }

    FiniteLattice load(const std::string& path) const {
        try {
            return parse_lattice(slurp(path), limits);
        } catch (const LatticeError& e) {
            throw InputError(path + ": " + e.what());
        }
    }

    void emit(const std::string& text, const std::string& path) const {
        if (path.empty() || path == "-") {
            out << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw InputError("cannot write '" + path + "'");
        file << text;
    }
};

int cmd_gen(const Context& ctx, const std::vector<std::string>& tokens, const std::string& output) {
    FiniteLattice l = [&] {
        try {
            return generate(FamilySpec::parse(tokens), ctx.limits);
        } catch (const LatticeError& e) {
            ctx.err << "gen: " << e.what() << "\n";
            throw CLI::RuntimeError(kUsage);
        }
    }();
    ctx.emit(write_lattice(l), output);
    return kSuccess;
}

int cmd_analyze(const Context& ctx, const std::string& path, bool as_json) {
    const FiniteLattice l = ctx.load(path);
    const AnalysisReport report = analyze(l, ctx.limits);
    ctx.out << (as_json ? analysis_to_json(l, report) : analysis_to_text(l, report));
    return kSuccess;
}

int cmd_loewy(const Context& ctx, const std::string& path) {
    const FiniteLattice l = ctx.load(path);
    for (Index x : loewy_series(l).chain) ctx.out << l.element(x) << "\n";
    return kSuccess;
}

int cmd_check(const Context& ctx, const std::string& property, const std::string& path) {
    const FiniteLattice l = ctx.load(path);
    bool value = false;
    try {
        if (property == "chain") value = is_chain(l);
        else if (property == "distributive") value = is_distributive(l, ctx.limits);
        else if (property == "boolean") value = is_boolean(l, ctx.limits);
        else if (property == "catenarian") value = is_catenarian(l);
        else if (property == "p-extension") value = is_p_extension(l);
    } catch (const LatticeError& e) {
        throw InputError(path + ": " + e.what());
    }
    ctx.out << (value ? "true" : "false") << "\n";
    if (!value && property == "p-extension") {
        ctx.err << "element outside every Loewy layer: " << l.element(*p_extension_witness(l)) << "\n";
    }
    return value ? kSuccess : kFalse;
}

int cmd_verify(const Context& ctx, const Campaign& campaign, bool as_json) {
    VerificationReport report;
    try {
        report = run_campaign(campaign);
    } catch (const LatticeError& e) {
        ctx.err << "verify: " << e.what() << "\n";
        return e.code() == ErrorCode::Range ? kUsage : kInvalid;
    }
    ctx.out << (as_json ? report_to_json(report) : report_to_text(report));
    return report.passed() ? kSuccess : kFalse;
}

int cmd_export_dot(const Context& ctx, const std::string& path, bool with_loewy, const std::string& output) {
    const FiniteLattice l = ctx.load(path);
    ctx.emit(export_dot(l, with_loewy), output);
    return kSuccess;
}

int cmd_iso(const Context& ctx, const std::string& first, const std::string& second) {
    const FiniteLattice a = ctx.load(first);
    const FiniteLattice b = ctx.load(second);
    std::optional<Isomorphism> witness;
    try {
        witness = find_isomorphism(a, b, ctx.limits);
    } catch (const LatticeError& e) {
        throw InputError(e.what());
    }
    if (!witness) {
        ctx.out << "false\n";
        return kFalse;
    }
    ctx.out << "true\n";
    for (Index x = 0; x < a.size(); ++x) ctx.out << a.element(x) << " -> " << b.element((*witness)[x]) << "\n";
    return kSuccess;
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite lattice analysis: socle, radical, Loewy series and law verification", "loewy"};
    app.require_subcommand(1);
    Context ctx{in, out, err, Limits::from_env()};
    int status = kSuccess;

    std::vector<std::string> family_tokens;
    std::string output = "-";
    auto* gen = app.add_subcommand("gen", "Generate a lattice family member as a canonical lattice file");
    gen->add_option("family", family_tokens, "Family name followed by its parameters")->required()->expected(1, -1);
    gen->add_option("-o,--output", output, "Output file, '-' for standard output");

    std::string file;
    bool as_json = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Print every invariant of a lattice");
    analyze_cmd->add_option("file", file, "Lattice file or '-'")->required();
    analyze_cmd->add_flag("--json", as_json, "Emit JSON");

    auto* loewy_cmd = app.add_subcommand("loewy", "Print the Loewy series, one element per line");
    loewy_cmd->add_option("file", file, "Lattice file or '-'")->required();

    std::string property;
    auto* check = app.add_subcommand("check", "Test one property; prints true or false");
    check->add_option("property", property)
        ->required()
        ->check(CLI::IsMember({"chain", "distributive", "boolean", "catenarian", "p-extension"}));
    check->add_option("file", file, "Lattice file or '-'")->required();

    std::string suite_token;
    Campaign campaign;
    auto* verify = app.add_subcommand("verify", "Run a verification suite over a campaign of lattices");
    verify->add_option("suite", suite_token)
        ->required()
        ->check(CLI::IsMember({"core", "distributive", "p-extension", "product", "thm8131"}));
    auto* n_opt = verify->add_option("--n", campaign.n, "Single instance parameter");
    auto* max_opt = verify->add_option("--max-n", campaign.max_n, "Upper end of the divisor range");
    auto* seed_opt = verify->add_option("--seed", campaign.seed, "Seed of the random instances");
    verify->add_option("--count", campaign.count, "Number of random instances")->needs(seed_opt);
    verify->add_option("--max-size", campaign.random_max_size, "Size bound of random distributive instances");
    verify->add_flag("--json", as_json, "Emit JSON");
    n_opt->excludes(max_opt)->excludes(seed_opt);
    max_opt->excludes(seed_opt);

    bool with_loewy = false;
    auto* dot = app.add_subcommand("export-dot", "Write the Hasse diagram in DOT");
    dot->add_option("file", file, "Lattice file or '-'")->required();
    dot->add_flag("--loewy", with_loewy, "Highlight the Loewy series");
    dot->add_option("-o,--output", output, "Output file, '-' for standard output");

    std::string first;
    std::string second;
    auto* iso = app.add_subcommand("iso", "Test two lattices for order isomorphism");
    iso->add_option("first", first)->required();
    iso->add_option("second", second)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "loewy: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*gen) status = cmd_gen(ctx, family_tokens, output);
        else if (*analyze_cmd) status = cmd_analyze(ctx, file, as_json);
        else if (*loewy_cmd) status = cmd_loewy(ctx, file);
        else if (*check) status = cmd_check(ctx, property, file);
        else if (*verify) {
            campaign.suite = *suite_from_string(suite_token);
            campaign.limits = ctx.limits;
            status = cmd_verify(ctx, campaign, as_json);
        } else if (*dot) status = cmd_export_dot(ctx, file, with_loewy, output);
        else if (*iso) status = cmd_iso(ctx, first, second);
    } catch (const CLI::RuntimeError& e) {
        return e.get_exit_code();
    } catch (const InputError& e) {
        err << "loewy: " << e.what() << "\n";
        return kInvalid;
    } catch (const LatticeError& e) {
        err << "loewy: " << e.what() << "\n";
        return kInvalid;
    }
    return status;
}

} // namespace loewy::cli
