#include "stancewalk/report.hpp"

#include "stancewalk/error.hpp"
#include "stancewalk/table.hpp"

#include <istream>
#include <ostream>

namespace stancewalk {

std::string class_label(int cls, const SeedSet& seeds) {
    return cls == kUnclassified ? "unclassified" : seeds.class_name(static_cast<std::size_t>(cls));
}

int parse_class_label(std::string_view label, const SeedSet& seeds) {
    if (label == "unclassified")
        return kUnclassified;
    if (const auto c = seeds.class_of_name(label))
        return static_cast<int>(*c);
    throw DomainError("unknown class label '" + std::string(label) + "'");
}

void write_hashtag_table(std::ostream& out, const SharingMatrix& matrix, const Classification& result,
                         const SeedSet& seeds, std::optional<Method> method) {
    std::vector<std::string> header{"hashtag", "class", "intensity", "tie"};
    if (method)
        header.insert(header.begin(), "method");
    TableWriter table(out, header);
    for (std::size_t i = 0; i < result.hashtags.size(); ++i) {
        const auto& h = result.hashtags[i];
        std::vector<std::string> row{matrix.hashtags()[i], class_label(h.cls, seeds),
                                     h.intensity ? format_double(*h.intensity) : std::string(),
                                     std::string(tie_flag_name(h.tie))};
        if (method)
            row.insert(row.begin(), std::string(method_name(*method)));
        table.row(row);
    }
}

void write_user_table(std::ostream& out, const SharingMatrix& matrix, const Classification& result,
                      const SeedSet& seeds, std::optional<Method> method) {
    std::vector<std::string> header{"user", "class"};
    if (method)
        header.insert(header.begin(), "method");
    for (std::size_t c = 0; c < seeds.size(); ++c)
        header.push_back("l_" + std::to_string(c + 1));
    header.push_back("tie");
    TableWriter table(out, header);
    for (std::size_t k = 0; k < result.users.size(); ++k) {
        const auto& u = result.users[k];
        std::vector<std::string> row;
        if (method)
            row.emplace_back(method_name(*method));
        row.push_back(matrix.users()[k]);
        row.push_back(class_label(u.cls, seeds));
        for (std::size_t c = 0; c < seeds.size(); ++c)
            row.push_back(c < u.inclination.size() ? format_double(u.inclination[c]) : "0");
        row.emplace_back(tie_flag_name(u.tie));
        table.row(row);
    }
}

std::map<std::string, Predictions> read_predictions(std::istream& in, std::string_view id_column,
                                                    const SeedSet& seeds, std::string_view source) {
    const auto table = Table::read(in, source);
    const auto id = table.require_column(id_column);
    const auto cls = table.require_column("class");
    const auto method = table.column("method");
    std::map<std::string, Predictions> out;
    for (const auto& row : table.rows()) {
        const std::string key = method ? row[*method] : std::string(method_name(Method::Lrm));
        out[key][row[id]] = parse_class_label(row[cls], seeds);
    }
    return out;
}

void write_eval_table(std::ostream& out, const std::vector<MethodReport>& reports, const SeedSet& seeds) {
    TableWriter table(out, {"method", "entity", "class", "precision", "recall", "f1", "support"});
    const auto emit = [&](const std::string& method, const char* entity, const EvalReport& r) {
        for (std::size_t c = 0; c < r.classes.size(); ++c) {
            const auto& s = r.classes[c];
            table.row(method, entity, seeds.class_name(c), s.precision, s.recall, s.f1, s.support);
        }
        std::size_t support = 0;
        for (const auto& s : r.classes)
            support += s.support;
        table.row(method, entity, "macro", "", "", format_double(r.macro_f1), support);
    };
    for (const auto& r : reports) {
        if (r.hashtags)
            emit(r.method, "hashtag", *r.hashtags);
        if (r.users)
            emit(r.method, "user", *r.users);
    }
}

} // namespace stancewalk
