#include "stancewalk/ingest.hpp"

#include "stancewalk/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

namespace stancewalk {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

template <typename T>
void report(ParseResult<T>& result, Strictness strictness, std::size_t line, std::string message) {
    if (strictness == Strictness::Strict)
        throw DomainError("line " + std::to_string(line) + ": " + message);
    result.diagnostics.push_back({line, std::move(message)});
}

void check_stream(std::istream& in) {
    if (in.bad() || (in.fail() && !in.eof()))
        throw IoError("input stream is not readable");
}

std::optional<PostRecord> parse_post_line(std::string_view line, std::string& error) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        error = std::string("invalid JSON: ") + e.what();
        return std::nullopt;
    }
    if (!obj.is_object()) {
        error = "record is not a JSON object";
        return std::nullopt;
    }
    const auto user = obj.find("user");
    if (user == obj.end() || !user->is_string() || user->get_ref<const std::string&>().empty()) {
        error = "missing or empty 'user' string";
        return std::nullopt;
    }
    const auto tags = obj.find("tags");
    if (tags == obj.end() || !tags->is_array()) {
        error = "missing 'tags' array";
        return std::nullopt;
    }
    PostRecord post;
    post.user = user->get<std::string>();
    for (const auto& tag : *tags) {
        if (!tag.is_string()) {
            error = "non-string entry in 'tags'";
            return std::nullopt;
        }
        auto normalized = normalize_hashtag(tag.get_ref<const std::string&>());
        if (normalized.empty()) {
            error = "empty hashtag in 'tags'";
            return std::nullopt;
        }
        post.hashtags.push_back(std::move(normalized));
    }
    if (post.hashtags.empty()) {
        error = "empty tag list";
        return std::nullopt;
    }
    if (const auto ts = obj.find("ts"); ts != obj.end() && !ts->is_null()) {
        if (!ts->is_number_integer()) {
            error = "'ts' is not an integer";
            return std::nullopt;
        }
        post.timestamp = ts->get<Timestamp>();
    }
    return post;
}

} // namespace

std::string normalize_hashtag(std::string_view tag) {
    tag = trim(tag);
    while (!tag.empty() && tag.front() == '#')
        tag.remove_prefix(1);
    std::string out(tag);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

ParseResult<PostRecord> parse_posts(std::istream& in, Strictness strictness) {
    check_stream(in);
    ParseResult<PostRecord> result;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto body = trim(line);
        if (body.empty())
            continue;
        std::string error;
        if (auto post = parse_post_line(body, error))
            result.records.push_back(std::move(*post));
        else
            report(result, strictness, number, error);
    }
    check_stream(in);
    return result;
}

ParseResult<ShareTriple> parse_triples(std::istream& in, Strictness strictness) {
    check_stream(in);
    ParseResult<ShareTriple> result;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto body = trim(line);
        if (body.empty())
            continue;
        if (number == 1 && body.starts_with("user,"))
            continue;
        const auto first = body.find(',');
        const auto last = body.rfind(',');
        if (first == std::string_view::npos || first == last) {
            report(result, strictness, number, "expected user,hashtag,count");
            continue;
        }
        ShareTriple triple;
        triple.user = std::string(trim(body.substr(0, first)));
        triple.hashtag = normalize_hashtag(body.substr(first + 1, last - first - 1));
        const auto count = trim(body.substr(last + 1));
        const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), triple.count);
        if (ec != std::errc{} || ptr != count.data() + count.size()) {
            report(result, strictness, number, "count is not a non-negative integer");
            continue;
        }
        if (triple.user.empty() || triple.hashtag.empty()) {
            report(result, strictness, number, "empty user or hashtag");
            continue;
        }
        result.records.push_back(std::move(triple));
    }
    check_stream(in);
    return result;
}

std::string format_post(const PostRecord& post) {
    nlohmann::json obj;
    obj["user"] = post.user;
    obj["tags"] = post.hashtags;
    if (post.timestamp)
        obj["ts"] = *post.timestamp;
    return obj.dump();
}

// --- SharingMatrix -------------------------------------------------------------------------

namespace {

// Assigns ids in first-seen order, then maps them to lexicographic ranks.
class Vocabulary {
public:
    std::uint32_t id(std::string_view key) {
        const auto [it, inserted] = ids_.try_emplace(key, static_cast<std::uint32_t>(keys_.size()));
        if (inserted)
            keys_.push_back(key);
        return it->second;
    }

    /// Sorted names and the first-seen id -> rank table.
    std::pair<std::vector<std::string>, std::vector<std::uint32_t>> finish() const {
        std::vector<std::uint32_t> order(keys_.size());
        for (std::uint32_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return keys_[a] < keys_[b]; });
        std::vector<std::string> names;
        names.reserve(order.size());
        std::vector<std::uint32_t> rank(order.size());
        for (std::uint32_t r = 0; r < order.size(); ++r) {
            names.emplace_back(keys_[order[r]]);
            rank[order[r]] = r;
        }
        return {std::move(names), std::move(rank)};
    }

private:
    std::unordered_map<std::string_view, std::uint32_t> ids_;
    std::vector<std::string_view> keys_;
};

struct Cell {
    std::uint32_t user;
    std::uint32_t hashtag;
    std::uint64_t count;
};

} // namespace

SharingMatrix SharingMatrix::from_triples(std::span<const ShareTriple> triples) {
    Vocabulary user_vocab;
    Vocabulary hashtag_vocab;
    std::vector<Cell> cells;
    cells.reserve(triples.size());
    for (const auto& t : triples) {
        if (t.count == 0)
            continue;
        cells.push_back({user_vocab.id(t.user), hashtag_vocab.id(t.hashtag), t.count});
    }

    SharingMatrix m;
    std::vector<std::uint32_t> user_rank;
    std::vector<std::uint32_t> hashtag_rank;
    std::tie(m.users_, user_rank) = user_vocab.finish();
    std::tie(m.hashtags_, hashtag_rank) = hashtag_vocab.finish();
    for (auto& c : cells) {
        c.user = user_rank[c.user];
        c.hashtag = hashtag_rank[c.hashtag];
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        return a.user != b.user ? a.user < b.user : a.hashtag < b.hashtag;
    });

    const auto n = m.users_.size();
    const auto h = m.hashtags_.size();
    m.user_totals_.assign(n, 0);
    m.hashtag_totals_.assign(h, 0);
    m.row_offsets_.assign(n + 1, 0);
    m.row_entries_.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size();) {
        const auto user = cells[c].user;
        const auto tag = cells[c].hashtag;
        std::uint64_t count = 0;
        for (; c < cells.size() && cells[c].user == user && cells[c].hashtag == tag; ++c)
            count += cells[c].count;
        if (count > UINT32_MAX)
            throw DomainError("sharing count overflow for user '" + m.users_[user] + "'");
        m.row_entries_.push_back({tag, static_cast<std::uint32_t>(count)});
        ++m.row_offsets_[user + 1];
        m.user_totals_[user] += count;
        m.hashtag_totals_[tag] += count;
    }
    for (std::size_t k = 0; k < n; ++k)
        m.row_offsets_[k + 1] += m.row_offsets_[k];

    // Column view via counting sort; users are visited in ascending order.
    m.col_offsets_.assign(h + 1, 0);
    for (const auto& e : m.row_entries_)
        ++m.col_offsets_[e.index + 1];
    for (std::size_t i = 0; i < h; ++i)
        m.col_offsets_[i + 1] += m.col_offsets_[i];
    m.col_entries_.resize(m.row_entries_.size());
    auto cursor = m.col_offsets_;
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& e : m.user_row(k))
            m.col_entries_[cursor[e.index]++] = {static_cast<std::uint32_t>(k), e.count};
    return m;
}

std::optional<std::size_t> SharingMatrix::user_index(std::string_view user) const {
    const auto it = std::lower_bound(users_.begin(), users_.end(), user);
    if (it == users_.end() || *it != user)
        return std::nullopt;
    return static_cast<std::size_t>(it - users_.begin());
}

std::optional<std::size_t> SharingMatrix::hashtag_index(std::string_view hashtag) const {
    const auto it = std::lower_bound(hashtags_.begin(), hashtags_.end(), hashtag);
    if (it == hashtags_.end() || *it != hashtag)
        return std::nullopt;
    return static_cast<std::size_t>(it - hashtags_.begin());
}

std::uint64_t SharingMatrix::count(std::size_t k, std::size_t i) const {
    const auto row = user_row(k);
    const auto it = std::lower_bound(row.begin(), row.end(), i,
                                     [](const Entry& e, std::size_t idx) { return e.index < idx; });
    return it != row.end() && it->index == i ? it->count : 0;
}

std::uint64_t SharingMatrix::total() const {
    std::uint64_t sum = 0;
    for (const auto v : hashtag_totals_)
        sum += v;
    return sum;
}

SharingMatrix aggregate(std::span<const PostRecord> records) {
    if (records.empty())
        throw DomainError("cannot aggregate an empty record set");
    std::vector<ShareTriple> triples;
    for (const auto& post : records)
        for (const auto& tag : post.hashtags)
            triples.push_back({post.user, tag, 1});
    return SharingMatrix::from_triples(triples);
}

// --- SeedSet -------------------------------------------------------------------------------

SeedSet::SeedSet(std::vector<std::string> seeds, std::vector<std::string> class_names)
    : names_(std::move(class_names)) {
    for (const auto& s : seeds) {
        auto normalized = normalize_hashtag(s);
        if (normalized.empty())
            throw DomainError("empty seed hashtag");
        if (std::find(seeds_.begin(), seeds_.end(), normalized) != seeds_.end())
            throw DomainError("duplicate seed hashtag '" + normalized + "'");
        seeds_.push_back(std::move(normalized));
    }
    if (seeds_.size() < 2)
        throw DomainError("at least two seed hashtags are required, got " +
                          std::to_string(seeds_.size()));
    if (names_.empty())
        names_ = seeds_;
    if (names_.size() != seeds_.size())
        throw DomainError("class name count does not match seed count");
    std::set<std::string> distinct(names_.begin(), names_.end());
    if (distinct.size() != names_.size())
        throw DomainError("class names must be distinct");
}

std::optional<std::size_t> SeedSet::class_of_name(std::string_view name) const {
    for (std::size_t c = 0; c < names_.size(); ++c)
        if (names_[c] == name)
            return c;
    return std::nullopt;
}

std::vector<std::size_t> SeedSet::resolve(const std::vector<std::string>& hashtags) const {
    std::vector<std::size_t> out;
    for (const auto& s : seeds_) {
        const auto it = std::lower_bound(hashtags.begin(), hashtags.end(), s);
        if (it == hashtags.end() || *it != s)
            throw DomainError("seed hashtag '" + s + "' not present in the corpus");
        out.push_back(static_cast<std::size_t>(it - hashtags.begin()));
    }
    return out;
}

// --- filtering -----------------------------------------------------------------------------

SharingMatrix filter_low_engagement(const SharingMatrix& matrix, std::span<const std::string> exempt,
                                    FilterStats* stats) {
    if (matrix.empty())
        throw DomainError("cannot filter an empty sharing matrix");
    const auto n = matrix.num_users();
    const auto m = matrix.num_hashtags();
    const auto total = matrix.total();

    // x < total / count  <=>  x * count < total, kept in integers.
    std::vector<bool> keep_hashtag(m);
    for (std::size_t i = 0; i < m; ++i)
        keep_hashtag[i] = matrix.hashtag_total(i) * m >= total;
    for (const auto& s : exempt)
        if (const auto i = matrix.hashtag_index(s))
            keep_hashtag[*i] = true;

    std::vector<ShareTriple> kept;
    for (std::size_t k = 0; k < n; ++k) {
        if (matrix.user_total(k) * n < total)
            continue;
        for (const auto& e : matrix.user_row(k))
            if (keep_hashtag[e.index])
                kept.push_back({matrix.users()[k], matrix.hashtags()[e.index], e.count});
    }
    auto filtered = SharingMatrix::from_triples(kept);
    if (filtered.num_users() == 0 || filtered.num_hashtags() == 0)
        throw DomainError("engagement filtering removed everything (" + std::to_string(n) +
                          " users, " + std::to_string(m) + " hashtags before; " +
                          std::to_string(filtered.num_users()) + " users, " +
                          std::to_string(filtered.num_hashtags()) + " hashtags after)");
    if (stats)
        *stats = {m, filtered.num_hashtags(), n, filtered.num_users()};
    return filtered;
}

std::vector<PostRecord> restrict_records(std::span<const PostRecord> records,
                                         const SharingMatrix& matrix) {
    std::vector<PostRecord> out;
    for (const auto& post : records) {
        if (!matrix.user_index(post.user))
            continue;
        PostRecord kept{post.user, {}, post.timestamp};
        for (const auto& tag : post.hashtags)
            if (matrix.hashtag_index(tag))
                kept.hashtags.push_back(tag);
        if (!kept.hashtags.empty())
            out.push_back(std::move(kept));
    }
    return out;
}

// --- windows -------------------------------------------------------------------------------

std::int64_t window_index(Timestamp ts, Timestamp origin, std::int64_t length) {
    const auto offset = ts - origin;
    auto q = offset / length;
    if (offset % length != 0 && offset < 0)
        --q;
    return q;
}

std::vector<std::pair<std::int64_t, std::vector<PostRecord>>>
window(std::span<const PostRecord> records, std::int64_t length, Timestamp origin) {
    if (length <= 0)
        throw DomainError("window length must be positive");
    std::map<std::int64_t, std::vector<PostRecord>> windows;
    for (std::size_t r = 0; r < records.size(); ++r) {
        const auto& post = records[r];
        if (!post.timestamp)
            throw DomainError("record " + std::to_string(r + 1) + " (user '" + post.user +
                              "') has no timestamp; windowed runs need timestamps");
        windows[window_index(*post.timestamp, origin, length)].push_back(post);
    }
    return {std::make_move_iterator(windows.begin()), std::make_move_iterator(windows.end())};
}

// --- Corpus --------------------------------------------------------------------------------

Corpus Corpus::from_posts(std::vector<PostRecord> posts) {
    Corpus c;
    c.matrix = aggregate(posts);
    c.posts = std::move(posts);
    return c;
}

Corpus Corpus::from_triples(std::span<const ShareTriple> triples) {
    Corpus c;
    c.matrix = SharingMatrix::from_triples(triples);
    if (c.matrix.empty())
        throw DomainError("cannot aggregate an empty record set");
    return c;
}

const std::vector<PostRecord>& Corpus::require_posts(std::string_view what) const {
    if (!posts)
        throw UnsupportedInputError(std::string(what) +
                                    " needs post-level records; pre-aggregated counts are not enough");
    return *posts;
}

} // namespace stancewalk
