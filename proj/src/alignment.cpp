#include "qmb/alignment.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace qmb {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

void fold_upper(std::string& s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

void validate(Alignment& a, std::size_t line_of_last) {
    if (a.rows.empty()) throw ParseError("empty alignment", line_of_last);
    std::set<std::string> seen;
    for (const auto& name : a.names)
        if (!seen.insert(name).second) throw ParseError("duplicate sequence name: " + name, line_of_last);
    const std::size_t len = a.rows.front().size();
    if (len == 0) throw ParseError("alignment has no columns", line_of_last);
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        if (a.rows[i].size() != len)
            throw ParseError("row '" + a.names[i] + "' has length " +
                                 std::to_string(a.rows[i].size()) + ", expected " +
                                 std::to_string(len),
                             line_of_last);
}

Alignment parse_fasta(std::istream& in) {
    Alignment a;
    std::string line;
    std::size_t lineno = 0;
    bool have_record = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = strip(line);
        if (s.empty()) continue;
        if (s[0] == '>') {
            const std::string name = strip(s.substr(1));
            if (name.empty()) throw ParseError("empty FASTA header", lineno);
            a.names.push_back(name);
            a.rows.emplace_back();
            have_record = true;
        } else {
            if (!have_record) throw ParseError("sequence data before first '>' header", lineno);
            std::string chunk;
            for (char c : s)
                if (!std::isspace(static_cast<unsigned char>(c))) chunk.push_back(c);
            a.rows.back() += chunk;
        }
    }
    for (auto& r : a.rows) fold_upper(r);
    validate(a, lineno);
    return a;
}

Alignment parse_table(std::istream& in) {
    Alignment a;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (strip(line).empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError("expected name<TAB>sequence", lineno);
        const std::string name = strip(line.substr(0, tab));
        std::string seq = strip(line.substr(tab + 1));
        if (name.empty()) throw ParseError("empty row name", lineno);
        if (seq.empty()) throw ParseError("empty sequence", lineno);
        fold_upper(seq);
        a.names.push_back(name);
        a.rows.push_back(std::move(seq));
    }
    validate(a, lineno);
    return a;
}

bool is_gap_char(char c) { return c == '-' || c == '.' || c == '?'; }

}  // namespace

Alignment parse_alignment(std::istream& in, AlignmentFormat format) {
    return format == AlignmentFormat::fasta ? parse_fasta(in) : parse_table(in);
}

std::pair<PartitionSystem, RecodingReport>
alignment_to_partition_system(const Alignment& a, GapPolicy policy) {
    PartitionSystem system{GroundSet{a.names}};
    RecodingReport report;
    const std::size_t n = a.row_count();

    for (std::size_t col = 0; col < a.length(); ++col) {
        std::map<char, Bitset> groups;
        bool has_gap = false;
        for (std::size_t row = 0; row < n; ++row) {
            const char c = a.rows[row][col];
            if (is_gap_char(c)) has_gap = true;
            auto [it, fresh] = groups.emplace(c, Bitset(n));
            (void)fresh;
            it->second.set(row);
        }
        if (policy == GapPolicy::drop_column && has_gap) {
            report.dropped_gap_columns.push_back(static_cast<int>(col));
            continue;
        }
        if (groups.size() < 2) {
            report.dropped_constant_columns.push_back(static_cast<int>(col));
            continue;
        }
        std::vector<Bitset> parts;
        parts.reserve(groups.size());
        for (auto& [c, bits] : groups) parts.push_back(std::move(bits));
        const int id = system.add(Partition(n, std::move(parts)), static_cast<int>(col));
        report.kept_columns.push_back(static_cast<int>(col));
        report.column_groups[id].push_back(static_cast<int>(col));
    }
    return {std::move(system), std::move(report)};
}

}  // namespace qmb
