#include "sparselab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace sparselab {

namespace {

struct Line {
    int number;
    std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

/// Non-empty lines with their 1-based numbers. Comment lines are kept so
/// callers can read "c target" annotations.
std::vector<Line> lines_of(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    while (!text.empty()) {
        ++number;
        auto end = text.find('\n');
        auto line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        auto tokens = split(line);
        if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    }
    return out;
}

bool is_comment(const Line& line) { return line.tokens[0] == "c"; }

long long to_integer(const Line& line, std::string_view token) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line.number, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

int to_count(const Line& line, std::string_view token) {
    long long v = to_integer(line, token);
    if (v < 0 || v > 100'000'000) throw ParseError(line.number, "count out of range: " + std::string(token));
    return static_cast<int>(v);
}

int to_one_based(const Line& line, std::string_view token, int limit, const char* what) {
    long long v = to_integer(line, token);
    if (v < 1 || v > limit)
        throw ParseError(line.number, std::string(what) + " " + std::string(token) + " outside 1.." + std::to_string(limit));
    return static_cast<int>(v - 1);
}

const Line& header(const std::vector<Line>& lines, std::size_t& index) {
    while (index < lines.size() && is_comment(lines[index])) ++index;
    if (index == lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().number, "missing 'p' header");
    const Line& h = lines[index++];
    if (h.tokens[0] != "p") throw ParseError(h.number, "expected a 'p' header line");
    return h;
}

Graph parse_dimacs_edge(std::string_view text) {
    auto lines = lines_of(text);
    std::size_t index = 0;
    const Line& h = header(lines, index);
    if (h.tokens.size() != 4 || (h.tokens[1] != "edge" && h.tokens[1] != "col" && h.tokens[1] != "arc"))
        throw ParseError(h.number, "expected 'p edge <n> <m>' or 'p arc <n> <m>'");
    bool directed = h.tokens[1] == "arc";
    int n = to_count(h, h.tokens[2]);
    int m = to_count(h, h.tokens[3]);
    std::string_view tag = directed ? "a" : "e";
    std::vector<Edge> edges;
    int seen = 0;
    int last = h.number;
    for (; index < lines.size(); ++index) {
        const Line& line = lines[index];
        last = line.number;
        if (is_comment(line)) continue;
        if (line.tokens[0] != tag || line.tokens.size() != 3)
            throw ParseError(line.number, "expected '" + std::string(tag) + " <u> <v>'");
        int u = to_one_based(line, line.tokens[1], n, "vertex");
        int v = to_one_based(line, line.tokens[2], n, "vertex");
        if (u == v) throw ParseError(line.number, "self-loop on vertex " + std::to_string(u + 1));
        ++seen;
        if (!directed && u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    if (seen != m)
        throw ParseError(last, "header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return directed ? Graph::directed(n, edges) : Graph::undirected(n, edges);
}

CnfInstance parse_dimacs_cnf(std::string_view text, bool weighted) {
    auto lines = lines_of(text);
    std::optional<long> target;
    for (const auto& line : lines)
        if (is_comment(line) && line.tokens.size() == 3 && line.tokens[1] == "target")
            target = to_integer(line, line.tokens[2]);
    std::size_t index = 0;
    const Line& h = header(lines, index);
    std::string_view kind = weighted ? "wcnf" : "cnf";
    if (h.tokens[1] != kind || h.tokens.size() < 4 || h.tokens.size() > (weighted ? 5u : 4u))
        throw ParseError(h.number, "expected 'p " + std::string(kind) + " <vars> <clauses>'");
    int vars = to_count(h, h.tokens[2]);
    int count = to_count(h, h.tokens[3]);
    std::vector<Clause> clauses;
    Clause current;
    bool expect_weight = weighted;
    int last = h.number;
    for (; index < lines.size(); ++index) {
        const Line& line = lines[index];
        last = line.number;
        if (is_comment(line)) continue;
        for (auto token : line.tokens) {
            long long code = to_integer(line, token);
            if (expect_weight) {
                if (code != 1) throw ParseError(line.number, "only unit clause weights are supported");
                expect_weight = false;
                continue;
            }
            if (code == 0) {
                clauses.push_back(std::move(current));
                current.clear();
                expect_weight = weighted;
                continue;
            }
            if (code < -vars || code > vars)
                throw ParseError(line.number, "literal " + std::string(token) + " outside the declared variables");
            Literal lit = Literal::from_dimacs(static_cast<int>(code));
            for (const auto& other : current)
                if (other.var == lit.var)
                    throw ParseError(line.number, "variable " + std::to_string(lit.var + 1) + " repeated in a clause");
            current.push_back(lit);
        }
    }
    if (!current.empty() || (weighted && !expect_weight)) throw ParseError(last, "last clause is not terminated by 0");
    if (static_cast<int>(clauses.size()) != count)
        throw ParseError(last, "header announces " + std::to_string(count) + " clauses, found " +
                                   std::to_string(clauses.size()));
    return CnfInstance(vars, std::move(clauses), target);
}

SetSystem parse_set_text(std::string_view text) {
    auto lines = lines_of(text);
    std::size_t index = 0;
    const Line& h = header(lines, index);
    if (h.tokens.size() != 4 || h.tokens[1] != "set") throw ParseError(h.number, "expected 'p set <elements> <sets>'");
    int ground = to_count(h, h.tokens[2]);
    int count = to_count(h, h.tokens[3]);
    std::vector<std::vector<int>> sets;
    int last = h.number;
    for (; index < lines.size(); ++index) {
        const Line& line = lines[index];
        last = line.number;
        if (is_comment(line)) continue;
        if (line.tokens[0] != "s") throw ParseError(line.number, "expected 's <elements...>'");
        std::vector<int> set;
        for (std::size_t t = 1; t < line.tokens.size(); ++t)
            set.push_back(to_one_based(line, line.tokens[t], ground, "element"));
        auto sorted = set;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError(line.number, "element repeated within a set");
        sets.push_back(std::move(set));
    }
    if (static_cast<int>(sets.size()) != count)
        throw ParseError(last, "header announces " + std::to_string(count) + " sets, found " + std::to_string(sets.size()));
    return SetSystem(ground, std::move(sets));
}

std::string dimacs_edge(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    bool d = g.is_directed();
    out << "p " << (d ? "arc " : "edge ") << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << (d ? "a " : "e ") << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string dimacs_cnf(const CnfInstance& f, bool weighted) {
    std::ostringstream out;
    if (f.target()) out << "c target " << *f.target() << '\n';
    out << "p " << (weighted ? "wcnf " : "cnf ") << f.num_vars() << ' ' << f.clauses().size() << '\n';
    for (const auto& clause : f.clauses()) {
        if (weighted) out << "1 ";
        for (const auto& lit : clause) out << lit.dimacs() << ' ';
        out << "0\n";
    }
    return out.str();
}

std::string set_text(const SetSystem& s) {
    std::ostringstream out;
    out << "p set " << s.ground() << ' ' << s.count() << '\n';
    for (const auto& set : s.sets()) {
        out << 's';
        for (int e : set) out << ' ' << e + 1;
        out << '\n';
    }
    return out.str();
}

template <class T>
const T& expect(const Instance& instance, Format format) {
    const T* value = std::get_if<T>(&instance);
    if (!value) throw std::invalid_argument("instance kind does not fit format " + std::string(format_name(format)));
    return *value;
}

}  // namespace

std::string_view format_name(Format f) {
    switch (f) {
    case Format::DimacsEdge: return "dimacs-edge";
    case Format::DimacsCnf: return "dimacs-cnf";
    case Format::DimacsWcnf: return "dimacs-wcnf";
    case Format::SetSystemText: return "setsystem-text";
    case Format::Json: return "json";
    }
    return "unknown";
}

Format parse_format(std::string_view text) {
    for (Format f : {Format::DimacsEdge, Format::DimacsCnf, Format::DimacsWcnf, Format::SetSystemText, Format::Json})
        if (format_name(f) == text) return f;
    throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::optional<Format> format_from_extension(const std::filesystem::path& path) {
    auto ext = path.extension().string();
    if (ext == ".dimacs" || ext == ".col" || ext == ".edge" || ext == ".gr") return Format::DimacsEdge;
    if (ext == ".cnf") return Format::DimacsCnf;
    if (ext == ".wcnf") return Format::DimacsWcnf;
    if (ext == ".sets" || ext == ".set") return Format::SetSystemText;
    if (ext == ".json") return Format::Json;
    return std::nullopt;
}

Format detect_format(std::string_view text) {
    for (const auto& line : lines_of(text)) {
        if (line.tokens[0].front() == '{') return Format::Json;
        if (is_comment(line)) continue;
        if (line.tokens[0] == "p" && line.tokens.size() >= 2) {
            auto kind = line.tokens[1];
            if (kind == "edge" || kind == "col" || kind == "arc") return Format::DimacsEdge;
            if (kind == "cnf") return Format::DimacsCnf;
            if (kind == "wcnf") return Format::DimacsWcnf;
            if (kind == "set") return Format::SetSystemText;
        }
        throw ParseError(line.number, "cannot recognise the instance format");
    }
    throw ParseError(1, "empty input");
}

Instance parse_instance(std::string_view text, std::optional<Format> format) {
    Format f = format ? *format : detect_format(text);
    try {
        switch (f) {
        case Format::DimacsEdge: return parse_dimacs_edge(text);
        case Format::DimacsCnf: return parse_dimacs_cnf(text, false);
        case Format::DimacsWcnf: return parse_dimacs_cnf(text, true);
        case Format::SetSystemText: return parse_set_text(text);
        case Format::Json: return instance_from_json(nlohmann::json::parse(text));
        }
    } catch (const nlohmann::json::parse_error& e) {
        // byte offset -> line number
        auto prefix = text.substr(0, std::min<std::size_t>(e.byte, text.size()));
        throw ParseError(1 + static_cast<int>(std::count(prefix.begin(), prefix.end(), '\n')), e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, e.what());
    }
    throw std::invalid_argument("unknown format");
}

std::string format_instance(const Instance& instance, Format format) {
    switch (format) {
    case Format::DimacsEdge: return dimacs_edge(expect<Graph>(instance, format));
    case Format::DimacsCnf: return dimacs_cnf(expect<CnfInstance>(instance, format), false);
    case Format::DimacsWcnf: return dimacs_cnf(expect<CnfInstance>(instance, format), true);
    case Format::SetSystemText: return set_text(expect<SetSystem>(instance, format));
    case Format::Json: return to_json(instance).dump(2) + "\n";
    }
    throw std::invalid_argument("unknown format");
}

Instance read_instance(const std::filesystem::path& path, std::optional<Format> format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw std::runtime_error("cannot read " + path.string());
    if (!format) format = format_from_extension(path);
    return parse_instance(buffer.str(), format);
}

void write_instance(const Instance& instance, const std::filesystem::path& path, Format format) {
    auto text = format_instance(instance, format);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

nlohmann::json to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    nlohmann::json j{{"type", "graph"}, {"directed", g.is_directed()}, {"n", g.order()}, {"edges", std::move(edges)}};
    bool identity = true;
    for (Vertex v = 0; v < g.order(); ++v) identity = identity && g.label(v) == v;
    if (!identity) j["labels"] = g.labels();
    return j;
}

nlohmann::json to_json(const SetSystem& s) {
    return {{"type", "setsystem"}, {"ground", s.ground()}, {"sets", s.sets()}};
}

nlohmann::json to_json(const CnfInstance& f) {
    nlohmann::json clauses = nlohmann::json::array();
    for (const auto& clause : f.clauses()) {
        nlohmann::json c = nlohmann::json::array();
        for (const auto& lit : clause) c.push_back(lit.dimacs());
        clauses.push_back(std::move(c));
    }
    nlohmann::json j{{"type", "cnf"}, {"num_vars", f.num_vars()}, {"clauses", std::move(clauses)}};
    if (f.target()) j["target"] = *f.target();
    return j;
}

nlohmann::json to_json(const Instance& instance) {
    return std::visit([](const auto& value) { return to_json(value); }, instance);
}

namespace {

std::string_view payload_key(PayloadKind kind) {
    switch (kind) {
    case PayloadKind::Vertices: return "vertices";
    case PayloadKind::SetIndices: return "sets";
    case PayloadKind::Elements: return "elements";
    case PayloadKind::Arcs: return "arcs";
    case PayloadKind::Assignment: return "assignment";
    }
    return "payload";
}

}  // namespace

nlohmann::json to_json(const Candidate& c) {
    nlohmann::json j{{"problem", tag_name(c.problem)}, {"value", c.value}};
    auto key = std::string(payload_key(payload_kind(c.problem)));
    std::visit(
        [&](const auto& payload) {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, ArcList>) {
                nlohmann::json arcs = nlohmann::json::array();
                for (auto [u, v] : payload) arcs.push_back({u, v});
                j[key] = std::move(arcs);
            } else if constexpr (std::is_same_v<T, Assignment>) {
                std::vector<int> bits(payload.begin(), payload.end());
                j[key] = bits;
            } else {
                j[key] = payload;
            }
        },
        c.payload);
    return j;
}

nlohmann::json to_json(const SparsificationLeaf& leaf) {
    return {{"committed", leaf.committed}, {"deleted", leaf.deleted}, {"leaf", to_json(leaf.residual)},
            {"to_root", leaf.to_root},     {"depth", leaf.depth},     {"path", leaf.path}};
}

Instance instance_from_json(const nlohmann::json& j) {
    auto type = j.at("type").get<std::string>();
    if (type == "graph") {
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        std::vector<Label> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<Label>>();
        bool directed = j.value("directed", false);
        return directed ? Graph::directed(n, edges, std::move(labels)) : Graph::undirected(n, edges, std::move(labels));
    }
    if (type == "setsystem")
        return SetSystem(j.at("ground").get<int>(), j.at("sets").get<std::vector<std::vector<int>>>());
    if (type == "cnf") {
        int vars = j.at("num_vars").get<int>();
        std::vector<Clause> clauses;
        for (const auto& c : j.at("clauses")) {
            Clause clause;
            for (const auto& code : c) {
                int value = code.get<int>();
                if (value == 0 || value < -vars || value > vars)
                    throw std::invalid_argument("literal " + std::to_string(value) + " outside the declared variables");
                clause.push_back(Literal::from_dimacs(value));
            }
            clauses.push_back(std::move(clause));
        }
        std::optional<long> target;
        if (j.contains("target")) target = j.at("target").get<long>();
        return CnfInstance(vars, std::move(clauses), target);
    }
    throw std::invalid_argument("unknown instance type '" + type + "'");
}

Candidate candidate_from_json(const nlohmann::json& j) {
    Candidate c;
    c.problem = parse_problem(j.at("problem").get<std::string>());
    auto kind = payload_kind(c.problem);
    const auto& payload = j.at(std::string(payload_key(kind)));
    if (kind == PayloadKind::Arcs) {
        ArcList arcs;
        for (const auto& a : payload) arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
        c.payload = std::move(arcs);
    } else if (kind == PayloadKind::Assignment) {
        Assignment a;
        for (const auto& bit : payload) a.push_back(bit.get<int>() != 0);
        c.payload = std::move(a);
    } else {
        c.payload = payload.get<Selection>();
    }
    c.value = j.at("value").get<long>();
    return c;
}

}  // namespace sparselab
