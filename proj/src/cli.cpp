#include "qpoints/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qpoints/errors.hpp"
#include "qpoints/parser.hpp"

namespace qpoints::cli {

namespace {

// The 4x4 matrix used throughout the docs: parameters a, b, c and a generic
// fourth parameter x. Its entry q 2 3 is pinned by reciprocity.
const char* const kExampleMatrixFile =
    "n = 3\n"
    "q 0 1 = a\n"
    "q 0 2 = b\n"
    "q 0 3 = x\n"
    "q 1 2 = a^-1*b\n"
    "q 1 3 = c\n"
    "q 2 3 = a*b^-1*c\n";

struct RunConfig {
    std::string subcommand;
    std::string file;
    bool json = false;
    bool verify = false;
    std::size_t max_components = 0;  // 0 = unlimited
    int threads = 1;
    int at = 0;
    std::string point;
    std::string kind;
    int n = 0;
    std::uint64_t seed = 0;
    std::string weights;
};

std::string read_input(const std::string& file, std::istream& in) {
    if (file == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream stream(file, std::ios::binary);
    if (!stream) throw Error("cannot open file: " + file);
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

QuantumMatrix load_matrix(const std::string& file, std::istream& in) {
    return parse_matrix_file(read_input(file, in));
}

ComponentsOptions make_options(const RunConfig& cfg) {
    ComponentsOptions opts;
    if (cfg.max_components > 0) opts.max_components = cfg.max_components;
    opts.threads = cfg.threads;
    return opts;
}

std::string one_line(const PointVariety& v) {
    std::string out;
    for (const auto& s : v.components()) {
        if (!out.empty()) out += " ";
        out += "P(";
        const auto& idx = s.indices();
        for (std::size_t k = 0; k < idx.size(); ++k)
            out += (k ? "," : "") + std::to_string(idx[k]);
        out += ")";
    }
    return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t at = text.find(sep, start);
        if (at == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, at - start));
        start = at + 1;
    }
}

std::string trim(const std::string& s) {
    const std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

/// Run clique, recursive and (up to n = 16) brute-force enumeration; print
/// every list and return false when they differ.
bool run_all_algorithms(const QuantumMatrix& q, const PointVariety& reference,
                        std::ostream& out) {
    const PointVariety recursive = recursive_components(q);
    std::optional<PointVariety> brute;
    if (q.n() <= 16) brute = brute_force_components(q);

    const bool agree =
        recursive == reference && (!brute || *brute == reference);
    if (!agree) {
        out << "DISAGREEMENT between component algorithms\n";
        out << "clique enumeration: " << one_line(reference) << "\n";
        out << "recursive split:    " << one_line(recursive) << "\n";
        if (brute) out << "brute force:        " << one_line(*brute) << "\n";
        return false;
    }
    out << (brute ? "verified: clique, recursive and brute-force algorithms agree\n"
                  : "verified: clique and recursive algorithms agree "
                    "(brute force skipped, n > 16)\n");
    return true;
}

int cmd_components(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const QuantumMatrix q = load_matrix(cfg.file, in);
    const PointVariety v = components(q, make_options(cfg));
    if (cfg.json) out << variety_to_json(v) << "\n";
    else out << render_text(v);
    if (cfg.verify && !run_all_algorithms(q, v, out)) return 1;
    return 0;
}

int cmd_membership(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const QuantumMatrix q = load_matrix(cfg.file, in);
    std::vector<std::optional<UnitMonomial>> coords;
    for (const auto& token : split(cfg.point, ',')) {
        const std::string t = trim(token);
        if (t == "0") coords.push_back(std::nullopt);
        else coords.push_back(parse_scalar(t));
    }
    const ProjectivePoint point(std::move(coords));
    out << (membership(q, point) ? "in pts\n" : "NOT in pts\n");
    return 0;
}

int cmd_reindex(const RunConfig& cfg, std::istream& in, std::ostream& out, bool localized) {
    const QuantumMatrix q = load_matrix(cfg.file, in);
    const ReindexedMatrix r = localized ? localize(q, cfg.at) : delete_index(q, cfg.at);
    out << "# original indices:";
    for (int idx : r.kept) out << " " << idx;
    out << "\n" << format_matrix_file(r.matrix);
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const QuantumMatrix q = load_matrix(cfg.file, in);
    const PointVariety v = components(q);
    out << render_text(v);
    return run_all_algorithms(q, v, out) ? 0 : 1;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    QuantumMatrix q = QuantumMatrix::all_ones(0);
    if (cfg.kind == "sign") {
        q = sign_matrix(cfg.n);
    } else if (cfg.kind == "rank1") {
        std::vector<UnitMonomial> weights;
        if (cfg.weights.empty()) {
            for (int i = 0; i <= cfg.n; ++i)
                weights.push_back(UnitMonomial::symbol("w" + std::to_string(i)));
        } else {
            for (const auto& token : split(cfg.weights, ','))
                weights.push_back(parse_scalar(trim(token)));
            if (static_cast<int>(weights.size()) != cfg.n + 1)
                throw LengthMismatchError("need exactly " + std::to_string(cfg.n + 1) +
                                          " weights for n = " + std::to_string(cfg.n));
        }
        q = rank_one_from_weights(weights);
    } else {
        GeneratorPool pool;
        pool.max_phase_denominator = 6;
        pool.symbol_count = 4;
        q = random_matrix(cfg.n, cfg.seed, pool);
    }
    out << format_matrix_file(q);
    return 0;
}

}  // namespace

std::string render_text(const PointVariety& v) {
    std::string out;
    for (const auto& s : v.components()) {
        out += "P(";
        const auto& idx = s.indices();
        for (std::size_t k = 0; k < idx.size(); ++k)
            out += (k ? "," : "") + std::to_string(idx[k]);
        out += ")\n";
    }
    out += "dimension = " + std::to_string(v.dimension()) + "\n";
    out += std::string("full space: ") + (v.is_full_space() ? "yes" : "no") + "\n";
    return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"point varieties of quantum polynomial algebras", "qpoints"};
    app.require_subcommand(1);

    auto* sub_components =
        app.add_subcommand("components", "irreducible components of the point variety");
    sub_components->add_option("file", cfg.file, "matrix file, or - for stdin")->required();
    sub_components->add_flag("--json", cfg.json, "emit JSON instead of text");
    sub_components->add_option("--max-components", cfg.max_components, "abort beyond this many")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
    sub_components->add_flag("--verify", cfg.verify, "cross-check with the two oracles");
    sub_components->add_option("--threads", cfg.threads, "parallel clique enumeration")
        ->check(CLI::Range(1, 1 << 10));

    auto* sub_membership = app.add_subcommand("membership", "is a point on the variety?");
    sub_membership->add_option("file", cfg.file, "matrix file, or - for stdin")->required();
    sub_membership
        ->add_option("--point", cfg.point, "comma-separated coordinates, 0 for zero")
        ->required();

    auto* sub_localize =
        app.add_subcommand("localize", "parameter matrix of the localization at an index");
    sub_localize->add_option("file", cfg.file, "matrix file, or - for stdin")->required();
    sub_localize->add_option("--at", cfg.at, "index to localize at")->required();

    auto* sub_delete = app.add_subcommand("delete", "matrix with one index removed");
    sub_delete->add_option("file", cfg.file, "matrix file, or - for stdin")->required();
    sub_delete->add_option("--at", cfg.at, "index to delete")->required();

    auto* sub_verify =
        app.add_subcommand("verify", "run all three component algorithms and compare");
    sub_verify->add_option("file", cfg.file, "matrix file, or - for stdin")->required();

    auto* sub_gen = app.add_subcommand("gen", "generate a matrix file");
    sub_gen->add_option("kind", cfg.kind, "sign | rank1 | random")
        ->required()
        ->check(CLI::IsMember({"sign", "rank1", "random"}));
    sub_gen->add_option("--n", cfg.n, "matrix size is n+1")
        ->required()
        ->check(CLI::Range(0, 1 << 20));
    sub_gen->add_option("--seed", cfg.seed, "seed for kind 'random'");
    sub_gen->add_option("--weights", cfg.weights,
                        "comma-separated weight scalars for kind 'rank1'");

    auto* sub_example = app.add_subcommand("example", "print the built-in example matrix");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sub_example->parsed()) {
            out << kExampleMatrixFile;
            return 0;
        }
        if (sub_components->parsed()) return cmd_components(cfg, in, out);
        if (sub_membership->parsed()) return cmd_membership(cfg, in, out);
        if (sub_localize->parsed()) return cmd_reindex(cfg, in, out, true);
        if (sub_delete->parsed()) return cmd_reindex(cfg, in, out, false);
        if (sub_verify->parsed()) return cmd_verify(cfg, in, out);
        if (sub_gen->parsed()) return cmd_gen(cfg, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qpoints::cli
