// beckline: generate, analyze and search colored point configurations.
//
// Exit codes: 0 ok, 1 output failure, 2 invalid arguments or input,
// 3 sampling exhaustion, 4 unequal color classes.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beckline/beckline.hpp"

namespace fs = std::filesystem;
using namespace beckline;

namespace {

enum Exit { kOk = 0, kIoFailure = 1, kInvalid = 2, kExhausted = 3, kUnequal = 4 };

struct io_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw io_failure("cannot write '" + path.string() + "'");
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        std::cout << content;
    else
        write_file(out_path, content);
}

Family family_or_throw(const std::string& name) {
    auto f = parse_family(name);
    if (!f) throw invalid_spec_error("unknown family '" + name + "'");
    return *f;
}

struct GenerateOptions {
    std::string family;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::int64_t coord_bound = 1'000'000;
    std::optional<std::size_t> cross;
};

GenSpec make_spec(const GenerateOptions& o) {
    GenSpec spec;
    spec.family = family_or_throw(o.family);
    spec.n = o.n;
    spec.seed = o.seed;
    spec.coord_bound = o.coord_bound;
    if (o.cross) spec.family_params["cross"] = Rational(static_cast<long long>(*o.cross));
    return spec;
}

void add_generate_options(CLI::App* cmd, GenerateOptions& o, bool required) {
    auto* fam = cmd->add_option("--family", o.family, "general-position | grid | collinear-plus-random | two-lines | all-collinear");
    auto* n = cmd->add_option("--n", o.n, "points per color");
    if (required) {
        fam->required();
        n->required();
    }
    cmd->add_option("--seed", o.seed, "64-bit seed")->default_val(0);
    cmd->add_option("--coord-bound", o.coord_bound, "coordinates drawn from [0, bound]^2")->default_val(1'000'000);
    cmd->add_option("--cross", o.cross, "two-lines: points of each color placed on the other color's line");
}

int run_generate(const GenerateOptions& o, const std::string& out) {
    const ColoredConfig config = generate(make_spec(o));
    emit(out, serialize_points(config));
    return kOk;
}

AnalysisParams parse_params(const std::string& k1, const std::string& k2) {
    AnalysisParams p;
    p.k1 = parse_rational(k1);
    p.k2 = parse_rational(k2);
    return p;
}

int run_analyze(const std::string& in, const std::string& k1, const std::string& k2, std::optional<std::uint64_t> seed,
                const std::string& out) {
    const ColoredConfig config = read_point_file(in);
    const AnalysisParams params = parse_params(k1, k2);
    const BeckReport rep = analyze(config, params);
    emit(out, dump(report_json(config, rep, params, seed)));
    return kOk;
}

int run_st_check(const std::string& in, const std::vector<std::size_t>& ks, const std::string& out) {
    const ColoredConfig config = read_point_file(in);
    const auto lines = induced_lines(config);
    const std::size_t total = config.size();
    Json rows = Json::array();
    std::ostringstream table;
    table << "k\tcount\tbound\tratio\n";
    for (std::size_t k : ks) {
        const std::size_t count = k_rich_count(lines, k);
        const Rational big_n(total), kk(k);
        const Rational bound = big_n * big_n / (kk * kk * kk) + big_n / kk;
        const Rational ratio = st_bound_ratio(total, lines, k);
        table << k << '\t' << count << '\t' << to_string(bound) << '\t' << to_string(ratio) << '\n';
        rows.push_back(Json{{"k", k}, {"count", count}, {"bound", to_string(bound)}, {"ratio", to_string(ratio)}});
    }
    std::cout << table.str();
    if (!out.empty()) {
        Json j;
        j["version"] = kReportVersion;
        j["config_digest"] = config_digest(config);
        j["total_points"] = total;
        j["rows"] = std::move(rows);
        write_file(out, dump(j));
    }
    return kOk;
}

struct SearchOptions {
    std::string in;
    GenerateOptions gen;
    std::vector<std::string> moves{"color-swap"};
    std::size_t iterations = 1000;
    std::size_t restarts = 1;
    std::int64_t nudge_radius = 1;
    std::vector<std::string> schedule;
    std::string out_dir;
};

int run_search(const SearchOptions& o) {
    SearchSpec spec;
    if (!o.in.empty()) {
        if (!o.gen.family.empty()) throw invalid_spec_error("give either --in or --family, not both");
        spec.base = read_point_file(o.in);
    } else {
        if (o.gen.family.empty() || o.gen.n == 0) throw invalid_spec_error("need --in or --family with --n");
        spec.base = generate(make_spec(o.gen));
    }
    spec.moves = MoveSet{false, false};
    for (const auto& m : o.moves) {
        if (m == "color-swap")
            spec.moves.color_swap = true;
        else if (m == "point-nudge")
            spec.moves.point_nudge = true;
        else
            throw invalid_spec_error("unknown move '" + m + "'");
    }
    spec.iterations = o.iterations;
    spec.restarts = o.restarts;
    spec.nudge_radius = o.nudge_radius;
    spec.seed = o.gen.seed;
    if (!o.schedule.empty()) {
        spec.temperature_schedule.clear();
        for (const auto& t : o.schedule) spec.temperature_schedule.push_back(parse_rational(t));
    }
    const SearchResult res = search(spec);
    const fs::path dir(o.out_dir);
    write_file(dir / "best.pts", serialize_points(res.best_config));
    write_file(dir / "search.json", dump(search_json(spec, res)));
    std::cout << "best_ratio " << res.best_ratio.str() << " (restart " << res.restart_index << ")\n";
    return kOk;
}

int run_suite(const std::vector<std::size_t>& n_values, std::size_t seeds, const std::string& k1, const std::string& k2,
              std::int64_t coord_bound, const std::string& out_dir) {
    const AnalysisParams params = parse_params(k1, k2);
    const fs::path dir(out_dir);
    const auto suite = enumerate_suite(n_values, seeds, coord_bound);

    struct Row {
        std::string family;
        std::size_t n;
        std::uint64_t seed;
        std::size_t r, num_bichromatic;
        ExtendedRatio ratio;
    };
    std::vector<Row> rows;
    std::map<std::string, ExtendedRatio> family_min;
    std::map<std::pair<std::string, std::size_t>, std::size_t> seed_index;
    for (const auto& entry : suite) {
        const std::string fam = family_name(entry.spec.family);
        const BeckReport rep = analyze(entry.config, params);
        const std::size_t idx = seed_index[{fam, entry.spec.n}]++;
        write_file(dir / "reports" / (fam + "_n" + std::to_string(entry.spec.n) + "_s" + std::to_string(idx) + ".json"),
                   dump(report_json(entry.config, rep, params, entry.spec.seed)));
        rows.push_back({fam, entry.spec.n, entry.spec.seed, rep.r, rep.num_bichromatic, rep.beck_ratio});
        auto [it, fresh] = family_min.try_emplace(fam, rep.beck_ratio);
        if (!fresh && rep.beck_ratio < it->second) it->second = rep.beck_ratio;
    }
    std::ostringstream csv;
    csv << "family,n,seed,r,num_bichromatic,beck_ratio,family_min_ratio\n";
    for (const auto& row : rows)
        csv << row.family << ',' << row.n << ',' << row.seed << ',' << row.r << ',' << row.num_bichromatic << ','
            << row.ratio.str() << ',' << family_min.at(row.family).str() << '\n';
    write_file(dir / "summary.csv", csv.str());
    std::cout << "wrote " << rows.size() << " reports to " << (dir / "reports").string() << '\n';
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"beckline: induced and bichromatic lines of colored point sets"};
    app.require_subcommand(1);

    GenerateOptions gen;
    std::string gen_out;
    auto* generate_cmd = app.add_subcommand("generate", "write a generated configuration as a point file");
    add_generate_options(generate_cmd, gen, true);
    generate_cmd->add_option("--out", gen_out, "output point file ('-' for stdout)")->required();

    std::string an_in, an_out, an_k1 = "1/4", an_k2 = "1/96";
    std::optional<std::uint64_t> an_seed;
    auto* analyze_cmd = app.add_subcommand("analyze", "write the full analysis report of a point file");
    analyze_cmd->add_option("--in", an_in, "input point file")->required();
    analyze_cmd->add_option("--k1", an_k1, "pair-class constant (rational)")->default_val("1/4");
    analyze_cmd->add_option("--k2", an_k2, "balanced-line constant (rational)")->default_val("1/96");
    analyze_cmd->add_option("--seed", an_seed, "seed recorded in the report parameters");
    analyze_cmd->add_option("--out", an_out, "output report (default stdout)");

    std::string st_in, st_out;
    std::vector<std::size_t> st_ks;
    auto* st_cmd = app.add_subcommand("st-check", "k-rich line counts against N^2/k^3 + N/k");
    st_cmd->add_option("--in", st_in, "input point file")->required();
    st_cmd->add_option("--k", st_ks, "richness thresholds (k >= 2)")->required()->delimiter(',');
    st_cmd->add_option("--out", st_out, "also write the rows as JSON");

    SearchOptions so;
    auto* search_cmd = app.add_subcommand("search", "anneal colorings / lattice positions to minimize the Beck ratio");
    search_cmd->add_option("--in", so.in, "base point file");
    add_generate_options(search_cmd, so.gen, false);
    search_cmd->add_option("--moves", so.moves, "color-swap, point-nudge")->delimiter(',');
    search_cmd->add_option("--iterations", so.iterations)->default_val(1000);
    search_cmd->add_option("--restarts", so.restarts)->default_val(1);
    search_cmd->add_option("--nudge-radius", so.nudge_radius)->default_val(1);
    search_cmd->add_option("--schedule", so.schedule, "temperatures, nonincreasing rationals")->delimiter(',');
    search_cmd->add_option("--out-dir", so.out_dir, "directory for search.json and best.pts")->required();

    std::vector<std::size_t> su_n;
    std::size_t su_seeds = 1;
    std::string su_k1 = "1/4", su_k2 = "1/96", su_out;
    std::int64_t su_bound = 1'000'000;
    auto* suite_cmd = app.add_subcommand("suite", "generate and analyze every family over n values and seeds");
    suite_cmd->add_option("--n", su_n, "points per color")->required()->delimiter(',');
    suite_cmd->add_option("--seeds", su_seeds, "seeds per family and n")->default_val(1);
    suite_cmd->add_option("--k1", su_k1)->default_val("1/4");
    suite_cmd->add_option("--k2", su_k2)->default_val("1/96");
    suite_cmd->add_option("--coord-bound", su_bound)->default_val(1'000'000);
    suite_cmd->add_option("--out-dir", su_out, "directory for reports/ and summary.csv")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*generate_cmd) return run_generate(gen, gen_out);
        if (*analyze_cmd) return run_analyze(an_in, an_k1, an_k2, an_seed, an_out);
        if (*st_cmd) return run_st_check(st_in, st_ks, st_out);
        if (*search_cmd) return run_search(so);
        if (*suite_cmd) return run_suite(su_n, su_seeds, su_k1, su_k2, su_bound, su_out);
    } catch (const unequal_colors_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUnequal;
    } catch (const sampling_exhausted_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExhausted;
    } catch (const io_failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const beckline::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoFailure;
    }
    return kInvalid;
}
