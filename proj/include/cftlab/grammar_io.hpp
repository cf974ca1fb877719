#ifndef CFTLAB_GRAMMAR_IO_HPP
#define CFTLAB_GRAMMAR_IO_HPP

#include <map>
#include <string>

#include "cftlab/grammar.hpp"
#include "cftlab/hom.hpp"

namespace cftlab {

/// Grammar file format (line-based, full-line # comments):
///   terminals <name>/<rank> ...
///   nonterminals <name>/<rank> ...
///   axiom <tree>
///   rule <A>(x1,...,xk) -> <tree>      (one per production; bare <A> if k=0)
Cftg parse_grammar(const std::string& text);
Cftg parse_grammar_file(const std::string& path);
std::string serialize_grammar(const Cftg& g);

/// Homomorphism file format:
///   hom <name>
///   source <name>/<rank> ...
///   target <name>/<rank> ...
///   map <symbol> -> <tree>             (one per source symbol)
TreeHomomorphism parse_hom(const std::string& text);
TreeHomomorphism parse_hom_file(const std::string& path);
std::string serialize_hom(const TreeHomomorphism& h);

/// Leading "# key: value" metadata lines of a serialized grammar.
std::map<std::string, std::string> read_certificate(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace cftlab

#endif
