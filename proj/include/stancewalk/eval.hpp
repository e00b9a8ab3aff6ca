#pragma once

#include "stancewalk/classify.hpp"
#include "stancewalk/ingest.hpp"
#include "stancewalk/pipeline.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace stancewalk {

/// Ground-truth members per class; index c is class c of the seed set.
using ClassMembers = std::vector<std::set<std::string>>;

struct GoldenSet {
    ClassMembers users;
    ClassMembers hashtags;
};

/**
 * Reads `class,entity_kind,entity_id` rows (entity_kind is `user` or `hashtag`). The class
 * column names a class or its seed hashtag. DomainError for unknown classes or kinds and for an
 * entity listed under two classes.
 */
GoldenSet read_golden(std::istream& in, const SeedSet& seeds);

void write_golden(std::ostream& out, const GoldenSet& golden, const SeedSet& seeds);

/// Thresholds for deriving golden hashtags from golden users.
struct GoldenHashtagRules {
    std::uint64_t min_shares = 30;
    std::size_t min_users = 2;
    std::uint64_t dominance = 5;
};

/**
 * A hashtag qualifies for class c when class-c golden users shared it at least `min_shares`
 * times, at least `min_users` of them shared it, and their share count is at least
 * `dominance` times the count of each other class's golden users.
 * DomainError when any class has no golden users.
 */
ClassMembers derive_golden_hashtags(const SharingMatrix& matrix, const ClassMembers& golden_users,
                                    const GoldenHashtagRules& rules = {});

struct ClassScore {
    std::size_t true_positives = 0;
    std::size_t false_positives = 0;
    std::size_t false_negatives = 0;
    std::size_t support = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct EvalReport {
    std::vector<ClassScore> classes;
    double macro_f1 = 0.0;
    double runtime_seconds = 0.0;
    /// Golden entities without a prediction; not scored.
    std::vector<std::string> dropped;
};

/// entity id -> predicted class (kUnclassified allowed).
using Predictions = std::unordered_map<std::string, int>;

Predictions hashtag_predictions(const SharingMatrix& matrix, const Classification& result);
Predictions user_predictions(const SharingMatrix& matrix, const Classification& result);

/**
 * Per-class precision, recall and F1 over golden-labelled entities only. An unclassified
 * prediction is a miss for its golden class. macro_f1 is the unweighted mean over classes.
 * DomainError when the golden set is empty.
 */
EvalReport score(const Predictions& predictions, const ClassMembers& golden);

/// F1 from raw counts; 0 when precision + recall is 0.
ClassScore class_score(std::size_t tp, std::size_t fp, std::size_t fn);

struct WindowConfig {
    std::int64_t length = 7 * 24 * 3600;
    Timestamp origin = 0;
};

struct WindowComposition {
    std::int64_t window = 0;
    std::vector<std::size_t> users_per_class;
    std::vector<std::size_t> hashtags_per_class;
    std::size_t unclassified_users = 0;
    std::size_t unclassified_hashtags = 0;
    std::vector<double> user_pct;
    std::vector<double> hashtag_pct;
};

struct EvolutionReport {
    std::vector<WindowComposition> windows;
    std::vector<std::string> warnings;
};

/// Per-class share of users and hashtags; unclassified entities count in the denominator only
/// when `include_unclassified`.
WindowComposition composition(const Classification& result, std::size_t classes,
                              bool include_unclassified);

/**
 * Runs the full pipeline independently on every window of the records. Windows that lack a
 * seed, or that filtering empties, are skipped with a warning.
 */
EvolutionReport evolve(std::span<const PostRecord> records, const SeedSet& seeds,
                       const WindowConfig& windows, const PipelineOptions& options,
                       bool include_unclassified = false);

/// Writes `window,class,user_pct,hashtag_pct`; an `unclassified` row per window gives the
/// unclassified share of all entities.
void write_evolution(std::ostream& out, const EvolutionReport& report, const SeedSet& seeds);

/// Mean wall-clock seconds of `run` over `repeat` sequential executions.
double time_run(const std::function<void()>& run, int repeat);

/// Mean seconds of run_pipeline on an already parsed corpus.
double time_pipeline(const Corpus& corpus, const SeedSet& seeds, const PipelineOptions& options,
                     int repeat);

} // namespace stancewalk
