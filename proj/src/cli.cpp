#include "stancewalk/cli.hpp"

#include "stancewalk/baselines.hpp"
#include "stancewalk/error.hpp"
#include "stancewalk/eval.hpp"
#include "stancewalk/manifest.hpp"
#include "stancewalk/pipeline.hpp"
#include "stancewalk/report.hpp"
#include "stancewalk/synth.hpp"
#include "stancewalk/table.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace stancewalk::cli {

namespace fs = std::filesystem;

namespace {

struct InputOptions {
    std::string path;
    std::string format = "auto";
    bool strict = false;
};

struct SeedOptions {
    std::vector<std::string> seeds;
    std::vector<std::string> classes;
};

struct MethodOptions {
    std::string method = "lrm";
    int rho = 10;
    std::string dampening = "all";
    bool no_blocking = false;
    std::string intensity = "concentration";
    double near_tie = kDefaultNearTieMargin;
    std::uint64_t rng_seed = BaselineConfig{}.rng_seed;
    int lpm_max_iterations = 1000;
    double lpm_tolerance = 1e-8;
    bool no_filter = false;
    int threads = 1;
};

void add_input_options(CLI::App* app, InputOptions& in, bool required = true) {
    auto* opt = app->add_option("--input", in.path, "Posts (JSON lines) or user,hashtag,count triples");
    if (required)
        opt->required();
    app->add_option("--format", in.format, "Input format")
        ->check(CLI::IsMember({"auto", "jsonl", "triples"}))
        ->capture_default_str();
    app->add_flag("--strict", in.strict, "Fail on the first malformed input line");
}

void add_seed_options(CLI::App* app, SeedOptions& s, bool required = true) {
    auto* opt = app->add_option("--seeds", s.seeds, "One seed hashtag per class, comma-separated")
                    ->delimiter(',');
    if (required)
        opt->required();
    app->add_option("--classes", s.classes, "Class names aligned with --seeds")->delimiter(',');
}

void add_method_options(CLI::App* app, MethodOptions& m, bool with_method) {
    if (with_method)
        app->add_option("--method", m.method, "lrm, srm, hsm, lpm or rdm")->capture_default_str();
    app->add_option("--rho", m.rho, "Walk length")->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--dampening", m.dampening, "Entropy dampening scope")
        ->check(CLI::IsMember({"all", "seed-edges", "off"}))
        ->capture_default_str();
    app->add_flag("--no-blocking", m.no_blocking, "Do not block the other seeds during a walk");
    app->add_option("--intensity", m.intensity, "Stance intensity orientation")
        ->check(CLI::IsMember({"concentration", "entropy"}))
        ->capture_default_str();
    app->add_option("--near-tie", m.near_tie, "Relative margin flagged as a near tie")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app->add_option("--rng-seed", m.rng_seed, "Seed of the random baseline")->capture_default_str();
    app->add_option("--lpm-max-iterations", m.lpm_max_iterations)->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--lpm-tolerance", m.lpm_tolerance)->check(CLI::PositiveNumber)->capture_default_str();
    app->add_flag("--no-filter", m.no_filter, "Skip low-engagement filtering");
    app->add_option("--threads", m.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

SeedSet make_seeds(const SeedOptions& s) { return SeedSet(s.seeds, s.classes); }

PipelineOptions make_pipeline(const MethodOptions& m, Method method) {
    PipelineOptions p;
    p.method = method;
    p.walk.rho = m.rho;
    p.walk.block_other_seeds = !m.no_blocking;
    p.walk.dampen = m.dampening != "off";
    p.walk.scope = m.dampening == "seed-edges" ? DampeningScope::SeedEdgesOnly
                                               : DampeningScope::AllIncidentEdges;
    p.classify.orientation = m.intensity == "entropy" ? IntensityOrientation::Entropy
                                                      : IntensityOrientation::Concentration;
    p.classify.near_tie_margin = m.near_tie;
    p.baseline.rng_seed = m.rng_seed;
    p.baseline.rho = m.rho;
    p.baseline.max_iterations = m.lpm_max_iterations;
    p.baseline.tolerance = m.lpm_tolerance;
    p.filter = !m.no_filter;
    p.threads = m.threads;
    return p;
}

void record(RunManifest& manifest, const InputOptions& in) {
    manifest.set("format", in.format);
    manifest.set("strict", in.strict);
    manifest.add_input("input", in.path);
}

void record(RunManifest& manifest, const SeedSet& seeds) {
    manifest.set("seeds", seeds.seeds());
    manifest.set("classes", seeds.class_names());
}

void record(RunManifest& manifest, const MethodOptions& m) {
    manifest.set("rho", m.rho);
    manifest.set("dampening", m.dampening);
    manifest.set("blocking", !m.no_blocking);
    manifest.set("intensity", m.intensity);
    manifest.set("near_tie", m.near_tie);
    manifest.set("rng_seed", m.rng_seed);
    manifest.set("lpm_max_iterations", m.lpm_max_iterations);
    manifest.set("lpm_tolerance", m.lpm_tolerance);
    manifest.set("filter", !m.no_filter);
    manifest.set("threads", m.threads);
}

bool is_triples(const InputOptions& in) {
    if (in.format != "auto")
        return in.format == "triples";
    const auto ext = fs::path(in.path).extension().string();
    return ext == ".csv" || ext == ".tsv" || ext == ".txt";
}

template <typename T>
std::vector<T> parse_file(const InputOptions& in, std::ostream& err,
                          ParseResult<T> (*parser)(std::istream&, Strictness)) {
    std::ifstream file(in.path);
    if (!file)
        throw IoError("cannot open '" + in.path + "'");
    auto result = parser(file, in.strict ? Strictness::Strict : Strictness::Lenient);
    for (const auto& d : result.diagnostics)
        err << in.path << ":" << d.line << ": skipped: " << d.message << '\n';
    if (result.records.empty())
        throw DomainError("'" + in.path + "' contains no valid records");
    return std::move(result.records);
}

Corpus load_corpus(const InputOptions& in, std::ostream& err) {
    if (is_triples(in))
        return Corpus::from_triples(parse_file<ShareTriple>(in, err, &parse_triples));
    return Corpus::from_posts(parse_file<PostRecord>(in, err, &parse_posts));
}

std::vector<PostRecord> load_posts(const InputOptions& in, std::ostream& err) {
    if (is_triples(in))
        throw UnsupportedInputError("windowed runs need timestamped post records; '" + in.path +
                                    "' holds pre-aggregated counts");
    return parse_file<PostRecord>(in, err, &parse_posts);
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write '" + path.string() + "'");
    return out;
}

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw IoError("cannot create directory '" + dir.string() + "'");
}

void close_output(std::ofstream& out, const fs::path& path) {
    out.close();
    if (!out)
        throw IoError("error while writing '" + path.string() + "'");
}

/// Timestamp from `YYYY-MM-DD` (UTC midnight) or integer seconds.
Timestamp parse_origin(const std::string& text) {
    int y = 0;
    unsigned mo = 0;
    unsigned d = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%d-%u-%u%c", &y, &mo, &d, &tail) == 3) {
        const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{mo},
                                              std::chrono::day{d}};
        if (!ymd.ok())
            throw DomainError("invalid date '" + text + "'");
        return std::chrono::sys_seconds{std::chrono::sys_days{ymd}}.time_since_epoch().count();
    }
    std::size_t used = 0;
    try {
        const auto v = std::stoll(text, &used);
        if (used == text.size())
            return v;
    } catch (const std::exception&) {
    }
    throw DomainError("origin must be YYYY-MM-DD or epoch seconds, got '" + text + "'");
}

// --- classify ------------------------------------------------------------------------------

struct ClassifyCommand {
    InputOptions input;
    SeedOptions seeds;
    MethodOptions method;
    std::string out_dir;
    bool dump_graph = false;
    bool dump_similarities = false;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("classify", "Classify hashtags and users");
        add_input_options(cmd, input);
        add_seed_options(cmd, seeds);
        add_method_options(cmd, method, true);
        cmd->add_option("--out", out_dir, "Output directory")->required();
        cmd->add_flag("--dump-graph", dump_graph, "Also write graph.csv");
        cmd->add_flag("--dump-similarities", dump_similarities, "Also write similarities.csv");
    }

    int run(std::ostream& out, std::ostream& err) const {
        const auto seed_set = make_seeds(seeds);
        const auto chosen = parse_method(method.method);
        const auto corpus = load_corpus(input, err);
        const auto options = make_pipeline(method, chosen);
        const auto result = run_pipeline(corpus, seed_set, options);
        if (!result.classification.converged)
            err << "warning: " << method_name(chosen) << " stopped at the iteration cap without converging\n";

        const fs::path dir(out_dir);
        ensure_directory(dir);
        const std::optional<Method> tag =
            chosen == Method::Lrm ? std::nullopt : std::optional<Method>(chosen);
        {
            auto f = open_output(dir / "hashtags.csv");
            write_hashtag_table(f, result.corpus.matrix, result.classification, seed_set, tag);
            close_output(f, dir / "hashtags.csv");
        }
        {
            auto f = open_output(dir / "users.csv");
            write_user_table(f, result.corpus.matrix, result.classification, seed_set, tag);
            close_output(f, dir / "users.csv");
        }
        if (dump_graph && result.graph) {
            auto f = open_output(dir / "graph.csv");
            write_graph_dump(f, *result.graph);
            close_output(f, dir / "graph.csv");
        }
        if (dump_similarities && result.scores) {
            auto f = open_output(dir / "similarities.csv");
            write_similarity_dump(f, *result.scores, result.corpus.matrix.hashtags(),
                                  seed_set.class_names());
            close_output(f, dir / "similarities.csv");
        }

        RunManifest manifest("classify");
        record(manifest, input);
        record(manifest, seed_set);
        record(manifest, method);
        manifest.set("method", std::string(method_name(chosen)));
        manifest.set("dump_graph", dump_graph);
        manifest.set("dump_similarities", dump_similarities);
        manifest.set("filter_stats", {{"hashtags_before", result.filter_stats.hashtags_before},
                                      {"hashtags_after", result.filter_stats.hashtags_after},
                                      {"users_before", result.filter_stats.users_before},
                                      {"users_after", result.filter_stats.users_after}});
        manifest.write(dir / "manifest.json");

        out << method_name(chosen) << ": classified " << result.classification.hashtags.size()
            << " hashtags and " << result.classification.users.size() << " users into " << dir.string()
            << '\n';
        return kExitOk;
    }
};

// --- eval ----------------------------------------------------------------------------------

void print_drops(std::ostream& err, const char* kind, const EvalReport& report) {
    if (report.dropped.empty())
        return;
    constexpr std::size_t kShown = 5;
    err << "warning: " << report.dropped.size() << " golden " << kind
        << "(s) have no prediction (filtered out or absent) and were dropped:";
    for (std::size_t i = 0; i < std::min(kShown, report.dropped.size()); ++i)
        err << ' ' << report.dropped[i];
    if (report.dropped.size() > kShown)
        err << " ...";
    err << '\n';
}

std::string fixed4(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << v;
    return s.str();
}

struct EvalCommand {
    InputOptions input;
    SeedOptions seeds;
    MethodOptions method;
    std::string assignments_dir;
    std::string golden_path;
    std::string compare;
    std::string out_path;
    bool derive_hashtags = false;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("eval", "Score classifications against a golden set");
        add_input_options(cmd, input, false);
        add_seed_options(cmd, seeds, false);
        add_method_options(cmd, method, true);
        cmd->add_option("--assignments", assignments_dir, "Output directory of a classify run");
        cmd->add_option("--golden", golden_path, "Golden set: class,entity_kind,entity_id")->required();
        cmd->add_option("--compare", compare, "Run and score these methods, comma-separated");
        cmd->add_option("--out", out_path, "Write the report table here");
        cmd->add_flag("--derive-hashtags", derive_hashtags,
                      "Derive golden hashtags from golden users (needs --input)");
    }

    int run(std::ostream& out, std::ostream& err) const {
        if (assignments_dir.empty() == input.path.empty())
            throw CLI::ValidationError("eval", "give exactly one of --assignments or --input");

        std::optional<SeedSet> seed_set;
        if (!seeds.seeds.empty()) {
            seed_set = make_seeds(seeds);
        } else if (!assignments_dir.empty()) {
            const auto manifest_path = fs::path(assignments_dir) / "manifest.json";
            std::ifstream f(manifest_path);
            if (!f)
                throw IoError("cannot open '" + manifest_path.string() + "' (or pass --seeds)");
            nlohmann::json m;
            try {
                m = nlohmann::json::parse(f);
                seed_set = SeedSet(m.at("config").at("seeds").get<std::vector<std::string>>(),
                                   m.at("config").at("classes").get<std::vector<std::string>>());
            } catch (const nlohmann::json::exception& e) {
                throw DomainError("malformed manifest '" + manifest_path.string() + "': " + e.what());
            }
        } else {
            throw CLI::ValidationError("eval", "--seeds is required with --input");
        }

        std::ifstream golden_file(golden_path);
        if (!golden_file)
            throw IoError("cannot open '" + golden_path + "'");
        auto golden = read_golden(golden_file, *seed_set);

        RunManifest manifest("eval");
        manifest.add_input("golden", golden_path);
        record(manifest, *seed_set);
        manifest.set("derive_hashtags", derive_hashtags);

        std::vector<MethodReport> reports;
        if (!assignments_dir.empty()) {
            const fs::path dir(assignments_dir);
            manifest.add_input("hashtags", dir / "hashtags.csv");
            manifest.add_input("users", dir / "users.csv");
            std::ifstream hf(dir / "hashtags.csv");
            std::ifstream uf(dir / "users.csv");
            if (!hf || !uf)
                throw IoError("cannot open the assignment tables in '" + dir.string() + "'");
            const auto hp = read_predictions(hf, "hashtag", *seed_set, "hashtags.csv");
            const auto up = read_predictions(uf, "user", *seed_set, "users.csv");
            for (const auto& [name, predictions] : hp) {
                MethodReport r{name, score_if_any(predictions, golden.hashtags), std::nullopt};
                if (const auto it = up.find(name); it != up.end())
                    r.users = score_if_any(it->second, golden.users);
                reports.push_back(std::move(r));
            }
        } else {
            record(manifest, input);
            record(manifest, method);
            const auto corpus = load_corpus(input, err);
            if (derive_hashtags)
                golden.hashtags = derive_golden_hashtags(corpus.matrix, golden.users);
            const auto methods =
                compare.empty() ? std::vector<Method>{parse_method(method.method)} : parse_method_list(compare);
            std::vector<std::string> names;
            for (const auto m : methods) {
                const auto options = make_pipeline(method, m);
                const auto result = run_pipeline(corpus, *seed_set, options);
                MethodReport r{std::string(method_name(m)),
                               score_if_any(hashtag_predictions(result.corpus.matrix, result.classification),
                                            golden.hashtags),
                               score_if_any(user_predictions(result.corpus.matrix, result.classification),
                                            golden.users)};
                reports.push_back(std::move(r));
                names.emplace_back(method_name(m));
            }
            manifest.set("methods", names);
        }
        if (reports.empty())
            throw DomainError("nothing to evaluate");

        for (const auto& r : reports) {
            if (r.hashtags)
                print_drops(err, "hashtag", *r.hashtags);
            if (r.users)
                print_drops(err, "user", *r.users);
            out << r.method << ":";
            if (r.hashtags)
                out << " hashtag macro-F1 = " << fixed4(r.hashtags->macro_f1);
            if (r.users)
                out << " user macro-F1 = " << fixed4(r.users->macro_f1);
            out << '\n';
        }
        if (!out_path.empty()) {
            auto f = open_output(out_path);
            write_eval_table(f, reports, *seed_set);
            close_output(f, out_path);
            manifest.write(out_path + ".manifest.json");
        }
        return kExitOk;
    }

    static std::optional<EvalReport> score_if_any(const Predictions& predictions, const ClassMembers& golden) {
        for (const auto& members : golden)
            if (!members.empty())
                return score(predictions, golden);
        return std::nullopt;
    }
};

// --- evolve --------------------------------------------------------------------------------

struct EvolveCommand {
    InputOptions input;
    SeedOptions seeds;
    MethodOptions method;
    double window_days = 7.0;
    std::string origin;
    bool include_unclassified = false;
    std::string out_path;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("evolve", "Per-window class composition");
        add_input_options(cmd, input);
        add_seed_options(cmd, seeds);
        add_method_options(cmd, method, true);
        cmd->add_option("--window-days", window_days, "Window length in days")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--origin", origin, "Start of window 0: YYYY-MM-DD or epoch seconds "
                                            "(default: earliest timestamp)");
        cmd->add_flag("--include-unclassified", include_unclassified,
                      "Count unclassified entities in the percentage denominators");
        cmd->add_option("--out", out_path, "Write the table here instead of stdout");
    }

    int run(std::ostream& out, std::ostream& err) const {
        const auto seed_set = make_seeds(seeds);
        const auto chosen = parse_method(method.method);
        const auto posts = load_posts(input, err);
        WindowConfig windows;
        windows.length = std::llround(window_days * 24.0 * 3600.0);
        if (windows.length <= 0)
            throw DomainError("window length must be at least one second");
        if (!origin.empty()) {
            windows.origin = parse_origin(origin);
        } else {
            windows.origin = INT64_MAX;
            for (const auto& p : posts) {
                if (!p.timestamp)
                    throw DomainError("record of user '" + p.user + "' has no timestamp");
                windows.origin = std::min(windows.origin, *p.timestamp);
            }
        }
        const auto report = evolve(posts, seed_set, windows, make_pipeline(method, chosen),
                                   include_unclassified);
        for (const auto& w : report.warnings)
            err << "warning: " << w << '\n';

        if (out_path.empty()) {
            write_evolution(out, report, seed_set);
            return kExitOk;
        }
        auto f = open_output(out_path);
        write_evolution(f, report, seed_set);
        close_output(f, out_path);
        RunManifest manifest("evolve");
        record(manifest, input);
        record(manifest, seed_set);
        record(manifest, method);
        manifest.set("method", std::string(method_name(chosen)));
        manifest.set("window_seconds", windows.length);
        manifest.set("origin", windows.origin);
        manifest.set("include_unclassified", include_unclassified);
        manifest.write(out_path + ".manifest.json");
        return kExitOk;
    }
};

// --- synth ---------------------------------------------------------------------------------

struct SynthCommand {
    std::string preset = "reference";
    std::string out_dir;
    std::optional<std::uint64_t> rng_seed;
    std::optional<std::size_t> users_per_class;
    std::optional<std::size_t> hashtags_per_class;
    std::optional<std::size_t> general_hashtags;
    std::optional<double> in_class_prob;
    std::optional<std::size_t> posts_per_user;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("synth", "Generate a planted-partition corpus");
        std::vector<std::string> names;
        for (const auto n : synth_preset_names())
            names.emplace_back(n);
        cmd->add_option("--preset", preset, "Base configuration")
            ->check(CLI::IsMember(names))
            ->capture_default_str();
        cmd->add_option("--out", out_dir, "Output directory")->required();
        cmd->add_option("--rng-seed", rng_seed);
        cmd->add_option("--users-per-class", users_per_class);
        cmd->add_option("--hashtags-per-class", hashtags_per_class);
        cmd->add_option("--general-hashtags", general_hashtags);
        cmd->add_option("--in-class-prob", in_class_prob);
        cmd->add_option("--posts-per-user", posts_per_user);
    }

    int run(std::ostream& out, std::ostream&) const {
        auto config = synth_preset(preset);
        if (rng_seed)
            config.rng_seed = *rng_seed;
        if (users_per_class)
            config.users_per_class = *users_per_class;
        if (hashtags_per_class)
            config.hashtags_per_class = *hashtags_per_class;
        if (general_hashtags)
            config.general_hashtags = *general_hashtags;
        if (in_class_prob)
            config.in_class_prob = *in_class_prob;
        if (posts_per_user)
            config.posts_per_user = *posts_per_user;
        const auto corpus = generate(config);

        const fs::path dir(out_dir);
        ensure_directory(dir);
        {
            auto f = open_output(dir / "posts.jsonl");
            for (const auto& p : corpus.posts)
                f << format_post(p) << '\n';
            close_output(f, dir / "posts.jsonl");
        }
        {
            auto f = open_output(dir / "golden.csv");
            write_golden(f, corpus.golden, corpus.seeds);
            close_output(f, dir / "golden.csv");
        }
        {
            auto f = open_output(dir / "seeds.csv");
            TableWriter table(f, {"class", "seed"});
            for (std::size_t c = 0; c < corpus.seeds.size(); ++c)
                table.row(corpus.seeds.class_name(c), corpus.seeds.seed(c));
            close_output(f, dir / "seeds.csv");
        }
        RunManifest manifest("synth");
        manifest.set("preset", preset);
        manifest.set("classes", config.classes);
        manifest.set("users_per_class", config.users_per_class);
        manifest.set("hashtags_per_class", config.hashtags_per_class);
        manifest.set("general_hashtags", config.general_hashtags);
        manifest.set("in_class_prob", config.in_class_prob);
        manifest.set("posts_per_user", config.posts_per_user);
        manifest.set("tags_per_post", config.tags_per_post);
        manifest.set("seed_prob", config.seed_prob);
        manifest.set("pool_skew", config.pool_skew);
        manifest.set("general_share", config.general_share);
        manifest.set("hub_hashtags", config.hub_hashtags);
        manifest.set("hub_prob", config.hub_prob);
        manifest.set("activity", config.activity);
        manifest.set("time_origin", config.time_origin);
        manifest.set("window_seconds", config.window_seconds);
        manifest.set("rng_seed", config.rng_seed);
        manifest.write(dir / "manifest.json");

        out << "wrote " << corpus.posts.size() << " posts to " << (dir / "posts.jsonl").string() << '\n';
        out << "seeds:";
        for (const auto& s : corpus.seeds.seeds())
            out << ' ' << s;
        out << '\n';
        return kExitOk;
    }
};

// --- bench ---------------------------------------------------------------------------------

struct BenchCommand {
    InputOptions input;
    SeedOptions seeds;
    MethodOptions method;
    std::string methods = "lrm";
    int repeat = 3;
    std::string out_path;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("bench", "Time the classification pipeline (parsing excluded)");
        add_input_options(cmd, input);
        add_seed_options(cmd, seeds);
        add_method_options(cmd, method, false);
        cmd->add_option("--methods", methods, "Comma-separated methods")->capture_default_str();
        cmd->add_option("--repeat", repeat, "Runs per method")->check(CLI::PositiveNumber)->capture_default_str();
        cmd->add_option("--out", out_path, "Write the table here instead of stdout");
    }

    int run(std::ostream& out, std::ostream& err) const {
        const auto seed_set = make_seeds(seeds);
        const auto list = parse_method_list(methods);
        const auto corpus = load_corpus(input, err);
        std::ostringstream table_text;
        {
            TableWriter table(table_text, {"method", "repeat", "mean_seconds"});
            for (const auto m : list)
                table.row(method_name(m), repeat,
                          time_pipeline(corpus, seed_set, make_pipeline(method, m), repeat));
        }
        if (out_path.empty()) {
            out << table_text.str();
            return kExitOk;
        }
        auto f = open_output(out_path);
        f << table_text.str();
        close_output(f, out_path);
        RunManifest manifest("bench");
        record(manifest, input);
        record(manifest, seed_set);
        record(manifest, method);
        manifest.set("methods", methods);
        manifest.set("repeat", repeat);
        manifest.write(out_path + ".manifest.json");
        return kExitOk;
    }
};

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Seeded random-walk stance classification of users and hashtags", "stancewalk"};
    app.set_config("--config", "", "TOML/INI file supplying option values (flags win)");
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    ClassifyCommand classify;
    EvalCommand eval;
    EvolveCommand evolve_cmd;
    SynthCommand synth;
    BenchCommand bench;
    classify.attach(app);
    eval.attach(app);
    evolve_cmd.attach(app);
    synth.attach(app);
    bench.attach(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("classify"))
            return classify.run(out, err);
        if (app.got_subcommand("eval"))
            return eval.run(out, err);
        if (app.got_subcommand("evolve"))
            return evolve_cmd.run(out, err);
        if (app.got_subcommand("synth"))
            return synth.run(out, err);
        if (app.got_subcommand("bench"))
            return bench.run(out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}

} // namespace stancewalk::cli
