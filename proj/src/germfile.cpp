#include "germ/germfile.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <sstream>

namespace germ {

namespace {

std::string at_line(const std::string& text, std::size_t pos) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
        if (text[i] == '\n') ++line, col = 1;
        else ++col;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

bool ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '\'';
}

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            else if (text[pos] == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else break;
        }
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(msg + ", " + at_line(text, pos), pos);
    }
    std::string word() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        if (pos == start) fail("expected an identifier");
        return text.substr(start, pos - start);
    }
    void expect(char c, const char* what) {
        skip_space();
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "' " + what);
        ++pos;
    }
    bool peek(char c) {
        skip_space();
        return pos < text.size() && text[pos] == c;
    }
    /// Text up to the next occurrence of one of the delimiters (not consumed).
    std::string until(const char* delims) {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && !std::strchr(delims, text[pos])) ++pos;
        if (pos >= text.size()) fail(std::string("unterminated statement, expected one of \"") +
                                     delims + '"');
        return text.substr(start, pos - start);
    }
};

}  // namespace

MultiGerm parse_germ_file(const std::string& text) {
    Cursor c{text};
    MultiGerm g;

    while (!c.done()) {
        auto kw = c.word();
        if (kw == "target") {
            if (g.target) c.fail("duplicate target statement");
            std::vector<std::string> vars;
            while (!c.peek(';')) vars.push_back(c.word());
            c.expect(';', "after the target variables");
            if (vars.size() < 2) c.fail("target needs at least 2 variables");
            g.target = VariableRing::make("target", vars);
        } else if (kw == "branch") {
            if (!g.target) c.fail("branch before target statement");
            auto name = c.word();
            auto src_kw = c.word();
            if (src_kw != "source") c.fail("expected 'source' after the branch name");
            std::vector<std::string> vars;
            while (!c.peek(':')) vars.push_back(c.word());
            c.expect(':', "before the branch components");
            auto ring = VariableRing::make(name, vars);
            std::vector<Polynomial> comps;
            while (true) {
                std::size_t start = c.pos;
                auto chunk = c.until(",;");
                try {
                    comps.push_back(parse_poly(chunk, ring));
                } catch (const parse_error& e) {
                    std::size_t where = start + e.position();
                    throw parse_error(std::string(e.what()) + " in component of branch " + name +
                                          ", " + at_line(text, where),
                                      where);
                }
                if (c.peek(';')) break;
                c.expect(',', "between components");
            }
            c.expect(';', "after the branch components");
            g.branches.push_back({name, ring, std::move(comps)});
        } else {
            c.fail("unknown statement '" + kw + "'");
        }
    }
    if (!g.target) throw parse_error("no target statement", 0);
    validate(g);
    return g;
}

MultiGerm load_germ_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_germ_file(buf.str());
    } catch (const error& e) {
        throw error(path + ": " + e.what());
    }
}

std::string to_germ_file(const MultiGerm& g) {
    std::ostringstream os;
    os << "target";
    for (const auto& v : g.target->variables()) os << ' ' << v;
    os << ";\n";
    for (const auto& b : g.branches) {
        os << "branch " << b.name << " source";
        for (const auto& v : b.source->variables()) os << ' ' << v;
        os << " :";
        for (std::size_t i = 0; i < b.components.size(); ++i)
            os << (i ? ", " : " ") << b.components[i].to_string();
        os << ";\n";
    }
    return os.str();
}

}  // namespace germ
