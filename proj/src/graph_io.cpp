#include "twodist/graph_io.hpp"

#include "twodist/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace twodist {

namespace {

struct Token {
    std::string_view text;
    int column = 0;
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            out.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long long to_int(const Token& t, int line)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError(line, t.column, "expected an integer, found '" + std::string(t.text) + "'");
    return value;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn)
{
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++lineno;
        std::string_view line = text.substr(pos, end - pos);
        auto tokens = tokenize(line);
        if (!tokens.empty() && tokens[0].text[0] != '#')
            fn(lineno, tokens);
        pos = end + 1;
    }
}

}  // namespace

PlanarGraph parse_graph(std::string_view text)
{
    long long n = -1, m = -1;
    std::vector<std::vector<Vertex>> rot;
    std::vector<bool> seen;
    int last_line = 0;
    for_each_line(text, [&](int line, const std::vector<Token>& tk) {
        last_line = line;
        if (n < 0) {
            if (tk[0].text != "p")
                throw ParseError(line, tk[0].column, "expected header 'p <n> <m>'");
            if (tk.size() != 3)
                throw ParseError(line, tk[0].column, "header needs exactly two numbers");
            n = to_int(tk[1], line);
            m = to_int(tk[2], line);
            if (n < 0 || m < 0)
                throw ParseError(line, tk[1].column, "negative count in header");
            rot.resize(n);
            seen.assign(n, false);
            return;
        }
        if (tk[0].text != "r")
            throw ParseError(line, tk[0].column, "expected rotation line 'r <v> <deg> ...'");
        if (tk.size() < 3)
            throw ParseError(line, tk[0].column, "rotation line needs a vertex and a degree");
        const long long v = to_int(tk[1], line);
        if (v < 1 || v > n)
            throw ParseError(line, tk[1].column, "vertex " + std::string(tk[1].text) + " outside 1.." + std::to_string(n));
        if (seen[v - 1])
            throw ParseError(line, tk[1].column, "vertex " + std::to_string(v) + " listed twice");
        seen[v - 1] = true;
        const long long deg = to_int(tk[2], line);
        if (deg < 0 || static_cast<long long>(tk.size()) != deg + 3)
            throw ParseError(line, tk[2].column,
                             "degree " + std::to_string(deg) + " but " + std::to_string(tk.size() - 3) + " neighbours given");
        for (std::size_t i = 3; i < tk.size(); ++i) {
            const long long u = to_int(tk[i], line);
            if (u < 1 || u > n)
                throw ParseError(line, tk[i].column, "neighbour " + std::string(tk[i].text) + " outside 1.." + std::to_string(n));
            rot[v - 1].push_back(static_cast<Vertex>(u - 1));
        }
    });
    if (n < 0)
        throw ParseError(last_line + 1, 1, "missing header 'p <n> <m>'");
    for (long long v = 0; v < n; ++v)
        if (!seen[v])
            throw ParseError(last_line + 1, 1, "no rotation line for vertex " + std::to_string(v + 1));
    PlanarGraph g = PlanarGraph::from_rotations(std::move(rot));
    if (g.size() != m)
        throw ParseError(1, 1, "header says " + std::to_string(m) + " edges, rotations give " + std::to_string(g.size()));
    return g;
}

std::string write_graph(const PlanarGraph& g, std::string_view comment)
{
    std::ostringstream os;
    if (!comment.empty())
        os << "# " << comment << "\n";
    os << "p " << g.order() << " " << g.size() << "\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        os << "r " << v + 1 << " " << g.degree(v);
        for (Vertex u : g.rotation(v))
            os << " " << u + 1;
        os << "\n";
    }
    return os.str();
}

Coloring parse_coloring(std::string_view text, int order, int budget)
{
    Coloring c(order, budget);
    for_each_line(text, [&](int line, const std::vector<Token>& tk) {
        if (tk.size() != 2)
            throw ParseError(line, tk[0].column, "expected '<vertex> <colour>'");
        const long long v = to_int(tk[0], line);
        const long long col = to_int(tk[1], line);
        if (v < 1 || v > order)
            throw ParseError(line, tk[0].column, "vertex " + std::string(tk[0].text) + " outside 1.." + std::to_string(order));
        if (col < 1)
            throw ParseError(line, tk[1].column, "colours start at 1");
        if (c.color[v - 1] != 0)
            throw ParseError(line, tk[0].column, "vertex " + std::to_string(v) + " coloured twice");
        c.color[v - 1] = static_cast<int>(col);
    });
    return c;
}

std::string write_coloring(const Coloring& c)
{
    std::ostringstream os;
    for (Vertex v = 0; v < c.order(); ++v)
        if (c.color[v] != 0)
            os << v + 1 << " " << c.color[v] << "\n";
    return os.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::ParseError, "cannot write " + path);
    out << content;
}

}  // namespace twodist
