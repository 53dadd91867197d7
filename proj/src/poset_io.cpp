#include <algorithm>
#include <fstream>
#include <sstream>

#include "cdindex/poset.hpp"

namespace cdx {

namespace {

std::vector<std::string> splitWords(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

int parseRank(const std::string& s, const std::string& where) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw CdxError("ParseError", where + ": expected a nonnegative integer, got '" + s + "'");
    try {
        return std::stoi(s);
    } catch (const std::out_of_range&) {
        throw CdxError("ParseError", where + ": rank out of range");
    }
}

} // namespace

GradedPoset parsePoset(const std::string& text) {
    RawPoset raw;
    bool sawN = false;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<std::string> w = splitWords(line);
        if (w.empty()) continue;
        std::string where = "line " + std::to_string(lineNo);
        if (w[0] == "n") {
            if (w.size() != 2) throw CdxError("ParseError", where + ": usage 'n <rank>'");
            if (sawN) throw CdxError("ParseError", where + ": duplicate 'n' directive");
            raw.n = parseRank(w[1], where);
            sawN = true;
        } else if (w[0] == "elem") {
            if (w.size() != 3) throw CdxError("ParseError", where + ": usage 'elem <id> <rank>'");
            if (w[1] == "_0") throw CdxError("ParseError", where + ": '_0' is reserved for the minimum");
            raw.elems.emplace_back(w[1], parseRank(w[2], where));
        } else if (w[0] == "cover") {
            if (w.size() != 3) throw CdxError("ParseError", where + ": usage 'cover <upper> <lower>'");
            if (w[1] == "_0" || w[2] == "_0")
                throw CdxError("ParseError", where + ": covers of the implicit minimum are not written");
            raw.covers.emplace_back(w[1], w[2]);
        } else {
            throw CdxError("ParseError", where + ": unknown directive '" + w[0] + "'");
        }
    }
    if (!sawN) throw CdxError("ParseError", "missing 'n <rank>' directive");
    return validatePoset(raw);
}

GradedPoset loadPoset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CdxError("ParseError", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parsePoset(buf.str());
}

std::string printPoset(const GradedPoset& p) {
    std::ostringstream out;
    out << "n " << p.n << "\n";
    std::vector<int> order(std::size_t(p.size()));
    for (int i = 0; i < p.size(); ++i) order[std::size_t(i)] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (p.rk[std::size_t(x)] != p.rk[std::size_t(y)]) return p.rk[std::size_t(x)] < p.rk[std::size_t(y)];
        return p.id[std::size_t(x)] < p.id[std::size_t(y)];
    });
    for (int e : order) out << "elem " << p.id[std::size_t(e)] << " " << p.rk[std::size_t(e)] << "\n";
    for (int e : order) {
        std::vector<std::string> lows;
        for (int l : p.low[std::size_t(e)]) lows.push_back(p.id[std::size_t(l)]);
        std::sort(lows.begin(), lows.end());
        for (auto& l : lows) out << "cover " << p.id[std::size_t(e)] << " " << l << "\n";
    }
    return out.str();
}

} // namespace cdx
