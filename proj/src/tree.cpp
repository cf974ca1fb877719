#include "cftlab/tree.hpp"

#include <algorithm>
#include <cctype>

#include "cftlab/errors.hpp"

namespace cftlab {

std::string position_to_string(const Position& p) {
    if (p.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(p[i]);
    }
    return out;
}

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Tree Tree::variable(int index) {
    if (index < 1) throw IndexError("variable index must be >= 1, got " + std::to_string(index));
    auto n = std::make_shared<Node>();
    n->var = index;
    n->hash = combine(0x517cc1b7u, static_cast<std::size_t>(index));
    n->size = 0;
    n->max_var = index;
    return Tree(std::move(n));
}

Tree Tree::make(std::string label, std::vector<Tree> children) {
    if (label.empty()) throw AlphabetError("empty symbol name");
    auto n = std::make_shared<Node>();
    n->label = std::move(label);
    std::size_t h = std::hash<std::string>{}(n->label);
    int sz = 1, mv = 0;
    for (const Tree& c : children) {
        h = combine(h, c.hash());
        sz += c.size();
        mv = std::max(mv, c.max_variable());
    }
    n->children = std::move(children);
    n->hash = h;
    n->size = sz;
    n->max_var = mv;
    return Tree(std::move(n));
}

bool Tree::operator==(const Tree& other) const {
    if (node_ == other.node_) return true;
    if (node_->hash != other.node_->hash) return false;
    return compare(other) == 0;
}

int Tree::compare(const Tree& other) const {
    if (node_ == other.node_) return 0;
    if (is_variable() != other.is_variable()) return is_variable() ? -1 : 1;
    if (is_variable()) {
        return var_index() < other.var_index() ? -1 : (var_index() > other.var_index() ? 1 : 0);
    }
    if (int c = label().compare(other.label()); c != 0) return c < 0 ? -1 : 1;
    const auto& a = children();
    const auto& b = other.children();
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (int c = a[i].compare(b[i]); c != 0) return c;
    return 0;
}

std::vector<Position> Tree::positions() const {
    std::vector<Position> out;
    Position cur;
    auto walk = [&](auto&& self, const Tree& t) -> void {
        out.push_back(cur);
        for (std::size_t i = 0; i < t.children().size(); ++i) {
            cur.push_back(static_cast<int>(i) + 1);
            self(self, t.children()[i]);
            cur.pop_back();
        }
    };
    walk(walk, *this);
    return out;
}

bool Tree::has_position(const Position& p) const {
    const Tree* t = this;
    for (int i : p) {
        if (i < 1 || static_cast<std::size_t>(i) > t->children().size()) return false;
        t = &t->children()[i - 1];
    }
    return true;
}

Tree Tree::subtree(const Position& p) const {
    const Tree* t = this;
    for (int i : p) {
        if (i < 1 || static_cast<std::size_t>(i) > t->children().size())
            throw PositionError("invalid position " + position_to_string(p));
        t = &t->children()[i - 1];
    }
    return *t;
}

std::string Tree::label_at(const Position& p) const {
    Tree t = subtree(p);
    return t.is_variable() ? "x" + std::to_string(t.var_index()) : t.label();
}

Tree Tree::replace(const Position& p, const Tree& s) const {
    if (p.empty()) return s;
    if (is_variable() || p.front() < 1 ||
        static_cast<std::size_t>(p.front()) > children().size())
        throw PositionError("invalid position " + position_to_string(p));
    std::vector<Tree> kids = children();
    Position rest(p.begin() + 1, p.end());
    kids[p.front() - 1] = kids[p.front() - 1].replace(rest, s);
    return make(label(), std::move(kids));
}

int Tree::count_symbol(const std::string& name) const {
    if (is_variable()) return 0;
    int n = label() == name ? 1 : 0;
    for (const Tree& c : children()) n += c.count_symbol(name);
    return n;
}

Tree Tree::substitute(const std::vector<Tree>& args) const {
    if (is_variable()) {
        int i = var_index();
        if (static_cast<std::size_t>(i) > args.size())
            throw IndexError("variable x" + std::to_string(i) + " has no substitute (only " +
                             std::to_string(args.size()) + " given)");
        return args[i - 1];
    }
    if (max_variable() == 0) return *this;  // nothing to substitute below
    std::vector<Tree> kids;
    kids.reserve(children().size());
    for (const Tree& c : children()) kids.push_back(c.substitute(args));
    return make(label(), std::move(kids));
}

void Tree::check_ranked(const RankedAlphabet& alphabet, int max_var) const {
    if (is_variable()) {
        if (var_index() > max_var)
            throw IndexError("variable x" + std::to_string(var_index()) +
                             " exceeds the bound " + std::to_string(max_var));
        return;
    }
    int rk = alphabet.rank(label());
    if (rk != static_cast<int>(children().size()))
        throw AlphabetError("symbol '" + label() + "' has rank " + std::to_string(rk) +
                            " but " + std::to_string(children().size()) + " children");
    for (const Tree& c : children()) c.check_ranked(alphabet, max_var);
}

bool Tree::over_alphabet(const RankedAlphabet& alphabet) const {
    if (is_variable()) return true;
    if (!alphabet.contains(label()) ||
        alphabet.rank(label()) != static_cast<int>(children().size()))
        return false;
    for (const Tree& c : children())
        if (!c.over_alphabet(alphabet)) return false;
    return true;
}

std::string Tree::to_string() const {
    if (is_variable()) return "x" + std::to_string(var_index());
    if (children().empty()) return label();
    std::string out = label();
    out += '(';
    for (std::size_t i = 0; i < children().size(); ++i) {
        if (i) out += ',';
        out += children()[i].to_string();
    }
    out += ')';
    return out;
}

namespace {

struct TreeParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit TreeParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
            if (text[i] == '\n') { ++line; col = 1; } else ++col;
        }
        throw ParseError(msg, line, col);
    }

    static bool name_char(char c) {
        return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',';
    }

    std::string read_name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && name_char(text[pos])) ++pos;
        if (pos == start) fail("expected a symbol or variable name");
        return text.substr(start, pos - start);
    }

    static bool is_variable_token(const std::string& s, int& index) {
        if (s.size() < 2 || s[0] != 'x' || s[1] == '0') return false;
        for (std::size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        index = std::stoi(s.substr(1));
        return true;
    }

    Tree parse_tree() {
        std::string name = read_name();
        int vi = 0;
        skip_ws();
        if (pos < text.size() && text[pos] == '(') {
            if (is_variable_token(name, vi)) fail("variable '" + name + "' cannot take arguments");
            ++pos;
            std::vector<Tree> kids;
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;  // name() is the same as a bare nullary name
            } else {
                while (true) {
                    kids.push_back(parse_tree());
                    skip_ws();
                    if (pos >= text.size()) fail("unterminated argument list");
                    if (text[pos] == ',') { ++pos; continue; }
                    if (text[pos] == ')') { ++pos; break; }
                    fail("expected ',' or ')'");
                }
            }
            return Tree::make(name, std::move(kids));
        }
        if (is_variable_token(name, vi)) return Tree::variable(vi);
        return Tree::make(name);
    }
};

} // namespace

Tree Tree::parse(const std::string& text) {
    TreeParser p(text);
    Tree t = p.parse_tree();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input after tree");
    return t;
}

bool is_chain(const Tree& t) {
    const Tree* cur = &t;
    while (!cur->is_variable() && cur->children().size() == 1) cur = &cur->children()[0];
    return cur->is_variable() || cur->children().empty();
}

std::pair<std::string, Tree> chain_to_word(const Tree& t) {
    std::string word;
    Tree cur = t;
    while (!cur.is_variable() && cur.children().size() == 1) {
        if (cur.label().size() != 1)
            throw ScopeError("chain symbol '" + cur.label() + "' is not a single letter");
        word += cur.label();
        cur = cur.children()[0];
    }
    if (!cur.is_variable() && !cur.children().empty())
        throw ScopeError("tree is not a chain: node '" + cur.label() + "' has rank " +
                         std::to_string(cur.children().size()));
    return {word, cur};
}

Tree word_to_chain(const std::string& word, const Tree& leaf) {
    Tree t = leaf;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        t = Tree::make(std::string(1, *it), {t});
    return t;
}

} // namespace cftlab
