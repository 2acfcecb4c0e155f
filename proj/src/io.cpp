#include "dp1/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dp1 {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

LatticeIsometry parse_word(std::string_view text) {
    std::istringstream in{std::string(text.substr(1))};
    std::vector<int> ids;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            const int id = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            ids.push_back(id);
        } catch (const std::exception&) {
            throw ParseError("bad root id '" + token + "' in reflection word");
        }
    }
    try {
        return reflection_word(ids);
    } catch (const std::out_of_range& e) {
        throw ParseError(e.what());
    }
}

LatticeIsometry parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    Matrix9 m{};
    std::string token;
    int count = 0;
    while (in >> token) {
        if (count == kRank * kRank) throw ParseError("matrix has more than 81 entries");
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            m[count / kRank][count % kRank] = v;
        } catch (const std::exception&) {
            throw ParseError("bad matrix entry '" + token + "'");
        }
        ++count;
    }
    if (count != kRank * kRank)
        throw ParseError("matrix needs 81 entries, got " + std::to_string(count));
    if (!is_isometry(m)) throw ParseError("matrix does not preserve the intersection form and K");
    return LatticeIsometry(m);
}

}  // namespace

LatticeIsometry parse_element(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty element");
    if (text.front() == '(') return s8_action(text);
    if (text.substr(0, 4) == "rep:") return representative_order3(parse_carter_type(trim(text.substr(4))));
    if (text.front() == 's' && (text.size() == 1 || std::isspace(static_cast<unsigned char>(text[1]))))
        return parse_word(text);
    if (text.front() == '-' || std::isdigit(static_cast<unsigned char>(text.front()))) return parse_matrix(text);
    throw ParseError("cannot tell element format from '" + std::string(text.substr(0, 16)) + "'");
}

std::string read_file_or_inline(const std::string& arg) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(arg, ec)) return arg;
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot read " + arg);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

GroupSpec parse_group(std::string_view text, std::string label) {
    GroupSpec g{{}, std::move(label)};
    std::istringstream in{std::string(text)};
    std::string line, block;
    auto flush = [&] {
        if (!trim(block).empty()) g.generators.push_back(parse_element(block));
        block.clear();
    };
    while (std::getline(in, line)) {
        if (trim(line) == "---") flush();
        else block += line + "\n";
    }
    flush();
    return g;
}

std::string format_matrix(const Matrix9& m) {
    std::ostringstream os;
    for (const auto& row : m) {
        for (int j = 0; j < kRank; ++j) os << (j ? " " : "") << row[j];
        os << '\n';
    }
    return os.str();
}

std::string format_element(const LatticeIsometry& g) {
    if (auto p = as_permutation(g)) return *p;
    return format_matrix(g.matrix());
}

std::string format_star(const StarConfiguration& s) {
    std::string out = "{";
    for (int i = 0; i < 6; ++i) out += (i ? ", " : "") + curve_name(s[i]);
    return out + "}";
}

StarConfiguration parse_star(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw ParseError("star must be written as {A, B, ...}");
    text = text.substr(1, text.size() - 2);
    StarTuple ids;
    std::size_t n = 0;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto name = trim(text.substr(0, comma));
        if (n == 6) throw ParseError("star has more than six curves");
        ids[n++] = parse_curve_name(name);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    if (n != 6) throw ParseError("star needs six curves");
    if (!is_star(ids)) throw ParseError("curves do not form a star configuration");
    return StarConfiguration(ids);
}

nlohmann::json element_json(const LatticeIsometry& g) {
    if (auto p = as_permutation(g)) return *p;
    return g.matrix();
}

nlohmann::json star_json(const StarConfiguration& s) {
    nlohmann::json names = nlohmann::json::array();
    nlohmann::json matrix = nlohmann::json::array();
    for (int i = 0; i < 6; ++i) {
        names.push_back(curve_name(s[i]));
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 6; ++j) row.push_back(curve_pairing(s[i], s[j]));
        matrix.push_back(row);
    }
    return {{"canonical_key", s.canonical_key()},
            {"curves", names},
            {"text", format_star(s)},
            {"pairing", matrix}};
}

nlohmann::json witness_json(const Witness& w) {
    nlohmann::json elements = nlohmann::json::array();
    for (const auto& g : w.elements) elements.push_back(element_json(g));
    nlohmann::json curves = nlohmann::json::array();
    for (CurveId c : w.curves) curves.push_back(curve_name(c));
    nlohmann::json stars = nlohmann::json::array();
    for (const auto& s : w.stars) stars.push_back(format_star(s));
    return {{"elements", elements}, {"curves", curves}, {"stars", stars}};
}

nlohmann::json verdict_json(const RationalityVerdict& v) {
    nlohmann::json out;
    out["verdict"] = verdict_name(v.verdict);
    out["rule"] = v.witness ? nlohmann::json(v.witness->rule) : nlohmann::json(nullptr);
    out["witness"] = v.witness ? witness_json(*v.witness) : nlohmann::json(nullptr);
    out["ranks"] = {{"G", v.ranks.g}, {"Gamma", v.ranks.gamma}, {"combined", v.ranks.combined}};
    if (v.minimality) {
        nlohmann::json stars = nlohmann::json::array();
        nlohmann::json elements = nlohmann::json::array();
        for (const auto& s : v.minimality->stars) stars.push_back(format_star(s));
        for (const auto& g : v.minimality->faithful_elements) elements.push_back(element_json(g));
        out["minimality"] = {{"stars", stars}, {"elements", elements}, {"combined_rank", v.minimality->combined_rank}};
    } else {
        out["minimality"] = nullptr;
    }
    return out;
}

}  // namespace dp1
