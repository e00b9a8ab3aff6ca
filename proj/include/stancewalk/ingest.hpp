#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stancewalk {

using Timestamp = std::int64_t;

/// One post: who shared it, which keywords it carried, and when.
struct PostRecord {
    std::string user;
    std::vector<std::string> hashtags; // normalized, non-empty
    std::optional<Timestamp> timestamp;

    friend bool operator==(const PostRecord&, const PostRecord&) = default;
};

/// Pre-aggregated sharing count, as read from `user,hashtag,count` input.
struct ShareTriple {
    std::string user;
    std::string hashtag;
    std::uint64_t count = 0;
};

/// Lowercases and strips leading '#' characters.
std::string normalize_hashtag(std::string_view tag);

enum class Strictness { Lenient, Strict };

struct ParseDiagnostic {
    std::size_t line = 0; // 1-based
    std::string message;
};

template <typename T>
struct ParseResult {
    std::vector<T> records;
    std::vector<ParseDiagnostic> diagnostics;
};

/**
 * Reads line-delimited JSON objects `{"user": ..., "tags": [...], "ts": ...}`.
 * Blank lines are ignored. Malformed lines are skipped with a diagnostic in lenient mode and
 * raise DomainError in strict mode. A stream in a failed state raises IoError.
 */
ParseResult<PostRecord> parse_posts(std::istream& in, Strictness strictness = Strictness::Lenient);

/// Reads `user,hashtag,count` lines; an optional header row starting with `user,` is skipped.
ParseResult<ShareTriple> parse_triples(std::istream& in, Strictness strictness = Strictness::Lenient);

/// Serializes one record in the line format accepted by parse_posts (no trailing newline).
std::string format_post(const PostRecord& post);

/**
 * Sparse user x hashtag count matrix R with both marginals.
 *
 * Users and hashtags are indexed in lexicographic order of their ids, so the matrix does not
 * depend on the order in which observations arrive. Rows (per user) and columns (per hashtag)
 * are both stored, each sorted by the other index.
 */
class SharingMatrix {
public:
    struct Entry {
        std::uint32_t index; // hashtag index in a user row, user index in a hashtag column
        std::uint32_t count;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    SharingMatrix() = default;

    /// Builds from triples; duplicate (user, hashtag) pairs are summed, zero counts dropped.
    static SharingMatrix from_triples(std::span<const ShareTriple> triples);

    std::size_t num_users() const { return users_.size(); }
    std::size_t num_hashtags() const { return hashtags_.size(); }
    std::size_t num_entries() const { return row_entries_.size(); }
    bool empty() const { return row_entries_.empty(); }

    const std::vector<std::string>& users() const { return users_; }
    const std::vector<std::string>& hashtags() const { return hashtags_; }

    std::optional<std::size_t> user_index(std::string_view user) const;
    std::optional<std::size_t> hashtag_index(std::string_view hashtag) const;

    std::span<const Entry> user_row(std::size_t k) const {
        return {row_entries_.data() + row_offsets_[k], row_entries_.data() + row_offsets_[k + 1]};
    }
    std::span<const Entry> hashtag_column(std::size_t i) const {
        return {col_entries_.data() + col_offsets_[i], col_entries_.data() + col_offsets_[i + 1]};
    }

    /// R_ki, zero when absent.
    std::uint64_t count(std::size_t k, std::size_t i) const;

    std::uint64_t hashtag_total(std::size_t i) const { return hashtag_totals_[i]; }
    std::uint64_t user_total(std::size_t k) const { return user_totals_[k]; }
    const std::vector<std::uint64_t>& hashtag_totals() const { return hashtag_totals_; }
    const std::vector<std::uint64_t>& user_totals() const { return user_totals_; }

    /// Sum of all counts.
    std::uint64_t total() const;

    friend bool operator==(const SharingMatrix&, const SharingMatrix&) = default;

private:
    std::vector<std::string> users_;
    std::vector<std::string> hashtags_;
    std::vector<std::size_t> row_offsets_{0};
    std::vector<Entry> row_entries_;
    std::vector<std::size_t> col_offsets_{0};
    std::vector<Entry> col_entries_;
    std::vector<std::uint64_t> hashtag_totals_;
    std::vector<std::uint64_t> user_totals_;
};

/// A hashtag repeated inside one post contributes once per occurrence.
SharingMatrix aggregate(std::span<const PostRecord> records);

/**
 * One seed hashtag per stance class, with optional display names.
 * Seeds are normalized on construction; t >= 2 and distinct seeds are enforced.
 */
class SeedSet {
public:
    explicit SeedSet(std::vector<std::string> seeds, std::vector<std::string> class_names = {});

    std::size_t size() const { return seeds_.size(); }
    const std::vector<std::string>& seeds() const { return seeds_; }
    const std::vector<std::string>& class_names() const { return names_; }
    const std::string& seed(std::size_t c) const { return seeds_[c]; }
    const std::string& class_name(std::size_t c) const { return names_[c]; }

    std::optional<std::size_t> class_of_name(std::string_view name) const;

    /// Hashtag indices of the seeds in `hashtags`; DomainError naming the first missing seed.
    std::vector<std::size_t> resolve(const std::vector<std::string>& hashtags) const;

private:
    std::vector<std::string> seeds_;
    std::vector<std::string> names_;
};

struct FilterStats {
    std::size_t hashtags_before = 0, hashtags_after = 0;
    std::size_t users_before = 0, users_after = 0;
};

/**
 * Drops hashtags whose total is below the mean hashtag total, then users whose total is below
 * the mean user total. Both means come from the unfiltered matrix. Hashtags named in
 * `exempt` (the seeds) are never removed by the threshold. Entities left with a zero total are
 * dropped as well. Raises DomainError when nothing survives.
 */
SharingMatrix filter_low_engagement(const SharingMatrix& matrix,
                                    std::span<const std::string> exempt = {},
                                    FilterStats* stats = nullptr);

/// Restricts posts to the users and hashtags present in `matrix`; posts left empty are dropped.
std::vector<PostRecord> restrict_records(std::span<const PostRecord> records,
                                         const SharingMatrix& matrix);

/// Window index of `ts`: floor((ts - origin) / length).
std::int64_t window_index(Timestamp ts, Timestamp origin, std::int64_t length);

/**
 * Splits timestamped records into half-open windows [origin + w*length, origin + (w+1)*length).
 * Windows come out in ascending index order; empty windows are omitted and input order is kept
 * inside each window. DomainError if any record lacks a timestamp or length <= 0.
 */
std::vector<std::pair<std::int64_t, std::vector<PostRecord>>>
window(std::span<const PostRecord> records, std::int64_t length, Timestamp origin);

/// Observations plus, when available, the post-level records they were aggregated from.
struct Corpus {
    SharingMatrix matrix;
    std::optional<std::vector<PostRecord>> posts;

    static Corpus from_posts(std::vector<PostRecord> posts);
    static Corpus from_triples(std::span<const ShareTriple> triples);

    bool has_posts() const { return posts.has_value(); }
    /// UnsupportedInputError mentioning `what` when only aggregated counts exist.
    const std::vector<PostRecord>& require_posts(std::string_view what) const;
};

} // namespace stancewalk
