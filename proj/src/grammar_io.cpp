#include "cftlab/grammar_io.hpp"

#include <fstream>
#include <sstream>

#include "cftlab/errors.hpp"

namespace cftlab {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

RankedAlphabet parse_alphabet_decl(const std::string& rest, int line_no) {
    RankedAlphabet out;
    for (const std::string& tok : split_ws(rest)) {
        std::size_t slash = tok.rfind('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 == tok.size())
            throw ParseError("expected <name>/<rank>, got '" + tok + "'", line_no, 1);
        std::string name = tok.substr(0, slash);
        std::string rk = tok.substr(slash + 1);
        for (char c : rk)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("malformed rank in '" + tok + "'", line_no, 1);
        out.add(name, std::stoi(rk));
    }
    if (out.empty()) throw ParseError("empty alphabet declaration", line_no, 1);
    return out;
}

struct Lines {
    std::vector<std::pair<int, std::string>> content;  // (line number, text)
    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int no = 0;
        while (std::getline(in, line)) {
            ++no;
            std::string t = trimmed(line);
            if (t.empty() || t[0] == '#') continue;
            content.emplace_back(no, t);
        }
    }
};

/// Parses "A(x1,...,xk)" or bare "A"; checks the canonical variable list.
std::pair<std::string, int> parse_lhs(const std::string& text, int line_no) {
    std::size_t paren = text.find('(');
    if (paren == std::string::npos) return {trimmed(text), 0};
    std::string name = trimmed(text.substr(0, paren));
    Tree lhs = Tree::parse(text);
    int k = static_cast<int>(lhs.children().size());
    for (int i = 0; i < k; ++i) {
        const Tree& c = lhs.children()[i];
        if (c.is_variable() && c.var_index() == i + 1) continue;
        throw ParseError("left-hand side of '" + name + "' must list x1..x" +
                         std::to_string(k) + " in order", line_no, 1);
    }
    return {name, k};
}

} // namespace

Cftg parse_grammar(const std::string& text) {
    Lines lines(text);
    RankedAlphabet terminals, nonterminals;
    bool have_t = false, have_n = false, have_axiom = false;
    Tree axiom;
    std::vector<Production> productions;

    for (const auto& [no, line] : lines.content) {
        std::istringstream in(line);
        std::string kw;
        in >> kw;
        std::string rest = trimmed(line.substr(kw.size()));
        try {
            if (kw == "terminals") {
                terminals = parse_alphabet_decl(rest, no);
                have_t = true;
            } else if (kw == "nonterminals") {
                nonterminals = parse_alphabet_decl(rest, no);
                have_n = true;
            } else if (kw == "axiom") {
                axiom = Tree::parse(rest);
                have_axiom = true;
            } else if (kw == "rule") {
                std::size_t arrow = rest.find("->");
                if (arrow == std::string::npos)
                    throw ParseError("rule without '->'", no, 1);
                auto [lhs, rank] = parse_lhs(trimmed(rest.substr(0, arrow)), no);
                Tree rhs = Tree::parse(trimmed(rest.substr(arrow + 2)));
                productions.push_back({lhs, rank, rhs});
            } else {
                throw ParseError("unknown keyword '" + kw + "'", no, 1);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(std::string(e.what()), no, 1);
        }
    }
    if (!have_t) throw ParseError("missing 'terminals' line");
    if (!have_n) throw ParseError("missing 'nonterminals' line");
    if (!have_axiom) throw ParseError("missing 'axiom' line");
    return Cftg(std::move(nonterminals), std::move(terminals), std::move(axiom),
                std::move(productions));
}

std::string serialize_grammar(const Cftg& g) {
    std::ostringstream out;
    out << "terminals";
    for (const auto& [name, rank] : g.terminals().entries()) out << ' ' << name << '/' << rank;
    out << "\nnonterminals";
    for (const auto& [name, rank] : g.nonterminals().entries())
        out << ' ' << name << '/' << rank;
    out << "\naxiom " << g.axiom().to_string() << '\n';
    for (const Production& p : g.productions()) out << "rule " << p.to_string() << '\n';
    return out.str();
}

TreeHomomorphism parse_hom(const std::string& text) {
    Lines lines(text);
    std::string name = "h";
    RankedAlphabet source, target;
    bool have_s = false, have_t = false;
    std::map<std::string, Tree> images;

    for (const auto& [no, line] : lines.content) {
        std::istringstream in(line);
        std::string kw;
        in >> kw;
        std::string rest = trimmed(line.substr(kw.size()));
        try {
            if (kw == "hom") {
                name = rest;
            } else if (kw == "source") {
                source = parse_alphabet_decl(rest, no);
                have_s = true;
            } else if (kw == "target") {
                target = parse_alphabet_decl(rest, no);
                have_t = true;
            } else if (kw == "map") {
                std::size_t arrow = rest.find("->");
                if (arrow == std::string::npos)
                    throw ParseError("map without '->'", no, 1);
                std::string sym = trimmed(rest.substr(0, arrow));
                Tree img = Tree::parse(trimmed(rest.substr(arrow + 2)));
                if (images.count(sym))
                    throw ParseError("duplicate map for '" + sym + "'", no, 1);
                images.emplace(sym, img);
            } else {
                throw ParseError("unknown keyword '" + kw + "'", no, 1);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const CompletenessError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(std::string(e.what()), no, 1);
        }
    }
    if (!have_s) throw ParseError("missing 'source' line");
    if (!have_t) throw ParseError("missing 'target' line");
    return TreeHomomorphism(std::move(name), std::move(source), std::move(target),
                            std::move(images));
}

std::string serialize_hom(const TreeHomomorphism& h) {
    std::ostringstream out;
    out << "hom " << h.name() << "\nsource";
    for (const auto& [name, rank] : h.source().entries()) out << ' ' << name << '/' << rank;
    out << "\ntarget";
    for (const auto& [name, rank] : h.target().entries()) out << ' ' << name << '/' << rank;
    out << '\n';
    for (const auto& [name, rank] : h.source().entries())
        out << "map " << name << " -> " << h.image(name).to_string() << '\n';
    return out.str();
}

std::map<std::string, std::string> read_certificate(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trimmed(line);
        if (t.empty()) continue;
        if (t[0] != '#') break;
        std::string body = trimmed(t.substr(1));
        std::size_t colon = body.find(':');
        if (colon == std::string::npos) continue;
        out[trimmed(body.substr(0, colon))] = trimmed(body.substr(colon + 1));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

Cftg parse_grammar_file(const std::string& path) { return parse_grammar(read_file(path)); }
TreeHomomorphism parse_hom_file(const std::string& path) { return parse_hom(read_file(path)); }

} // namespace cftlab
