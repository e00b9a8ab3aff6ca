#pragma once

#include "stancewalk/baselines.hpp"
#include "stancewalk/classify.hpp"
#include "stancewalk/eval.hpp"
#include "stancewalk/ingest.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace stancewalk {

/// Class label used in tables: the class name, or `unclassified`.
std::string class_label(int cls, const SeedSet& seeds);

/// Inverse of class_label; DomainError for unknown labels.
int parse_class_label(std::string_view label, const SeedSet& seeds);

/**
 * `hashtag,class,intensity,tie` rows in hashtag index order. With `method` set, a leading
 * `method` column is added. An absent intensity is written as an empty field.
 */
void write_hashtag_table(std::ostream& out, const SharingMatrix& matrix, const Classification& result,
                         const SeedSet& seeds, std::optional<Method> method = std::nullopt);

/// `user,class,l_1..l_t,tie` rows in user index order; optional leading `method` column.
void write_user_table(std::ostream& out, const SharingMatrix& matrix, const Classification& result,
                      const SeedSet& seeds, std::optional<Method> method = std::nullopt);

/// Predictions read back from a hashtag or user table, keyed by method (`lrm` when the table
/// has no method column).
std::map<std::string, Predictions> read_predictions(std::istream& in, std::string_view id_column,
                                                    const SeedSet& seeds, std::string_view source);

/// Hashtag and user scores of one method.
struct MethodReport {
    std::string method;
    std::optional<EvalReport> hashtags;
    std::optional<EvalReport> users;
};

/// `method,entity,class,precision,recall,f1,support` rows plus a `macro` row per entity kind.
void write_eval_table(std::ostream& out, const std::vector<MethodReport>& reports, const SeedSet& seeds);

} // namespace stancewalk
