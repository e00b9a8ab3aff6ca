#include "stancewalk/eval.hpp"

#include "stancewalk/error.hpp"
#include "stancewalk/table.hpp"

#include <chrono>
#include <istream>
#include <map>
#include <ostream>

namespace stancewalk {

GoldenSet read_golden(std::istream& in, const SeedSet& seeds) {
    const auto table = Table::read(in, "golden set");
    const auto cls_col = table.require_column("class");
    const auto kind_col = table.require_column("entity_kind");
    const auto id_col = table.require_column("entity_id");
    GoldenSet golden;
    golden.users.resize(seeds.size());
    golden.hashtags.resize(seeds.size());
    std::map<std::pair<std::string, std::string>, std::size_t> seen;
    for (std::size_t r = 0; r < table.rows().size(); ++r) {
        const auto& row = table.rows()[r];
        auto cls = seeds.class_of_name(row[cls_col]);
        if (!cls) {
            const auto as_seed = normalize_hashtag(row[cls_col]);
            for (std::size_t c = 0; c < seeds.size(); ++c)
                if (seeds.seed(c) == as_seed)
                    cls = c;
        }
        if (!cls)
            throw DomainError("golden set row " + std::to_string(r + 2) + ": unknown class '" +
                              row[cls_col] + "'");
        const auto& kind = row[kind_col];
        std::string id = row[id_col];
        ClassMembers* target = nullptr;
        if (kind == "user") {
            target = &golden.users;
        } else if (kind == "hashtag") {
            id = normalize_hashtag(id);
            target = &golden.hashtags;
        } else {
            throw DomainError("golden set row " + std::to_string(r + 2) + ": entity_kind must be "
                              "'user' or 'hashtag', got '" + kind + "'");
        }
        if (id.empty())
            throw DomainError("golden set row " + std::to_string(r + 2) + ": empty entity_id");
        const auto [it, inserted] = seen.try_emplace({kind, id}, *cls);
        if (!inserted && it->second != *cls)
            throw DomainError("golden " + kind + " '" + id + "' is listed under two classes");
        (*target)[*cls].insert(id);
    }
    return golden;
}

void write_golden(std::ostream& out, const GoldenSet& golden, const SeedSet& seeds) {
    TableWriter table(out, {"class", "entity_kind", "entity_id"});
    for (std::size_t c = 0; c < golden.users.size(); ++c)
        for (const auto& u : golden.users[c])
            table.row(seeds.class_name(c), "user", u);
    for (std::size_t c = 0; c < golden.hashtags.size(); ++c)
        for (const auto& h : golden.hashtags[c])
            table.row(seeds.class_name(c), "hashtag", h);
}

ClassMembers derive_golden_hashtags(const SharingMatrix& matrix, const ClassMembers& golden_users,
                                    const GoldenHashtagRules& rules) {
    const auto t = golden_users.size();
    std::vector<int> user_class(matrix.num_users(), kUnclassified);
    for (std::size_t c = 0; c < t; ++c) {
        if (golden_users[c].empty())
            throw DomainError("class " + std::to_string(c + 1) + " has no golden users");
        for (const auto& u : golden_users[c])
            if (const auto k = matrix.user_index(u))
                user_class[*k] = static_cast<int>(c);
    }
    ClassMembers out(t);
    std::vector<std::uint64_t> shares(t);
    std::vector<std::size_t> sharers(t);
    for (std::size_t i = 0; i < matrix.num_hashtags(); ++i) {
        std::fill(shares.begin(), shares.end(), 0);
        std::fill(sharers.begin(), sharers.end(), 0);
        for (const auto& e : matrix.hashtag_column(i)) {
            const int c = user_class[e.index];
            if (c == kUnclassified)
                continue;
            shares[static_cast<std::size_t>(c)] += e.count;
            ++sharers[static_cast<std::size_t>(c)];
        }
        for (std::size_t c = 0; c < t; ++c) {
            if (shares[c] < rules.min_shares || sharers[c] < rules.min_users)
                continue;
            bool dominant = true;
            for (std::size_t o = 0; o < t && dominant; ++o)
                if (o != c && shares[c] < rules.dominance * shares[o])
                    dominant = false;
            if (dominant)
                out[c].insert(matrix.hashtags()[i]);
        }
    }
    return out;
}

Predictions hashtag_predictions(const SharingMatrix& matrix, const Classification& result) {
    Predictions out;
    for (std::size_t i = 0; i < result.hashtags.size(); ++i)
        out.emplace(matrix.hashtags()[i], result.hashtags[i].cls);
    return out;
}

Predictions user_predictions(const SharingMatrix& matrix, const Classification& result) {
    Predictions out;
    for (std::size_t k = 0; k < result.users.size(); ++k)
        out.emplace(matrix.users()[k], result.users[k].cls);
    return out;
}

ClassScore class_score(std::size_t tp, std::size_t fp, std::size_t fn) {
    ClassScore s;
    s.true_positives = tp;
    s.false_positives = fp;
    s.false_negatives = fn;
    s.support = tp + fn;
    s.precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    s.recall = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
    s.f1 = s.precision + s.recall > 0.0
               ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
               : 0.0;
    return s;
}

EvalReport score(const Predictions& predictions, const ClassMembers& golden) {
    const auto t = golden.size();
    std::size_t total = 0;
    for (const auto& members : golden)
        total += members.size();
    if (t == 0 || total == 0)
        throw DomainError("golden set is empty");

    std::vector<std::size_t> tp(t, 0), fp(t, 0), fn(t, 0);
    EvalReport report;
    for (std::size_t c = 0; c < t; ++c) {
        for (const auto& id : golden[c]) {
            const auto it = predictions.find(id);
            if (it == predictions.end()) {
                report.dropped.push_back(id);
                continue;
            }
            const int predicted = it->second;
            if (predicted == static_cast<int>(c)) {
                ++tp[c];
            } else {
                ++fn[c];
                if (predicted != kUnclassified && static_cast<std::size_t>(predicted) < t)
                    ++fp[static_cast<std::size_t>(predicted)];
            }
        }
    }
    double sum = 0.0;
    for (std::size_t c = 0; c < t; ++c) {
        report.classes.push_back(class_score(tp[c], fp[c], fn[c]));
        sum += report.classes.back().f1;
    }
    report.macro_f1 = sum / static_cast<double>(t);
    return report;
}

WindowComposition composition(const Classification& result, std::size_t classes,
                              bool include_unclassified) {
    WindowComposition w;
    w.users_per_class.assign(classes, 0);
    w.hashtags_per_class.assign(classes, 0);
    for (const auto& u : result.users) {
        if (u.cls == kUnclassified)
            ++w.unclassified_users;
        else
            ++w.users_per_class[static_cast<std::size_t>(u.cls)];
    }
    for (const auto& h : result.hashtags) {
        if (h.cls == kUnclassified)
            ++w.unclassified_hashtags;
        else
            ++w.hashtags_per_class[static_cast<std::size_t>(h.cls)];
    }
    const auto pct = [&](const std::vector<std::size_t>& counts, std::size_t unclassified) {
        std::size_t denom = include_unclassified ? unclassified : 0;
        for (const auto v : counts)
            denom += v;
        std::vector<double> out(counts.size(), 0.0);
        if (denom > 0)
            for (std::size_t c = 0; c < counts.size(); ++c)
                out[c] = 100.0 * static_cast<double>(counts[c]) / static_cast<double>(denom);
        return out;
    };
    w.user_pct = pct(w.users_per_class, w.unclassified_users);
    w.hashtag_pct = pct(w.hashtags_per_class, w.unclassified_hashtags);
    return w;
}

EvolutionReport evolve(std::span<const PostRecord> records, const SeedSet& seeds,
                       const WindowConfig& windows, const PipelineOptions& options,
                       bool include_unclassified) {
    EvolutionReport report;
    for (const auto& [index, posts] : window(records, windows.length, windows.origin)) {
        try {
            const auto corpus = Corpus::from_posts(posts);
            seeds.resolve(corpus.matrix.hashtags());
            const auto result = run_pipeline(corpus, seeds, options);
            auto w = composition(result.classification, seeds.size(), include_unclassified);
            w.window = index;
            report.windows.push_back(std::move(w));
        } catch (const UnsupportedInputError&) {
            throw;
        } catch (const DomainError& e) {
            report.warnings.push_back("window " + std::to_string(index) + " skipped: " + e.what());
        }
    }
    return report;
}

void write_evolution(std::ostream& out, const EvolutionReport& report, const SeedSet& seeds) {
    TableWriter table(out, {"window", "class", "user_pct", "hashtag_pct"});
    for (const auto& w : report.windows) {
        std::size_t users = w.unclassified_users;
        std::size_t hashtags = w.unclassified_hashtags;
        for (std::size_t c = 0; c < seeds.size(); ++c) {
            table.row(w.window, seeds.class_name(c), w.user_pct[c], w.hashtag_pct[c]);
            users += w.users_per_class[c];
            hashtags += w.hashtags_per_class[c];
        }
        const auto share = [](std::size_t part, std::size_t whole) {
            return whole > 0 ? 100.0 * static_cast<double>(part) / static_cast<double>(whole) : 0.0;
        };
        table.row(w.window, "unclassified", share(w.unclassified_users, users),
                  share(w.unclassified_hashtags, hashtags));
    }
}

double time_run(const std::function<void()>& run, int repeat) {
    if (repeat < 1)
        throw DomainError("repeat count must be at least 1");
    double total = 0.0;
    for (int r = 0; r < repeat; ++r) {
        const auto start = std::chrono::steady_clock::now();
        run();
        total += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return total / repeat;
}

double time_pipeline(const Corpus& corpus, const SeedSet& seeds, const PipelineOptions& options,
                     int repeat) {
    return time_run([&] { (void)run_pipeline(corpus, seeds, options); }, repeat);
}

} // namespace stancewalk
