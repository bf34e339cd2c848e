#include "contingent/logic.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "contingent/error.hpp"

namespace contingent {

// ---------------------------------------------------------------------------
// Formula

Formula::Formula() : Formula(top()) {}

Formula Formula::top() {
  static const auto node = std::make_shared<const Node>(Node{Kind::kTrue, 0, nullptr, nullptr});
  return Formula(node);
}

Formula Formula::bottom() {
  static const auto node = std::make_shared<const Node>(Node{Kind::kFalse, 0, nullptr, nullptr});
  return Formula(node);
}

Formula Formula::atom(std::size_t index) {
  return Formula(std::make_shared<const Node>(Node{Kind::kAtom, index, nullptr, nullptr}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::kNot, 0, std::move(operand.node_), nullptr}));
}

Formula Formula::conjunction(Formula left, Formula right) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kAnd, 0, std::move(left.node_), std::move(right.node_)}));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kOr, 0, std::move(left.node_), std::move(right.node_)}));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  return disjunction(negation(std::move(antecedent)), std::move(consequent));
}

Formula Formula::biconditional(Formula a, Formula b) {
  return conjunction(implication(a, b), implication(b, a));
}

Formula::Kind Formula::kind() const { return node_->kind; }

std::size_t Formula::atom_index() const { return node_->atom; }

Formula Formula::left() const { return Formula(node_->left); }

Formula Formula::right() const { return Formula(node_->right); }

std::size_t Formula::node_count() const {
  switch (kind()) {
    case Kind::kNot:
      return 1 + left().node_count();
    case Kind::kAnd:
    case Kind::kOr:
      return 1 + left().node_count() + right().node_count();
    default:
      return 1;
  }
}

std::size_t Formula::depth() const {
  switch (kind()) {
    case Kind::kNot:
      return 1 + left().depth();
    case Kind::kAnd:
    case Kind::kOr:
      return 1 + std::max(left().depth(), right().depth());
    default:
      return 0;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
      return true;
    case Formula::Kind::kAtom:
      return a.atom_index() == b.atom_index();
    case Formula::Kind::kNot:
      return a.left() == b.left();
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

bool is_identifier_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_identifier_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(const Language& lang, std::string_view text) : lang_(lang), text_(text) {}

  Formula parse() {
    Formula f = parse_biconditional();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula parse_biconditional() {
    Formula f = parse_implication();
    while (accept("<->")) f = Formula::biconditional(f, parse_implication());
    return f;
  }

  Formula parse_implication() {
    Formula f = parse_disjunction();
    skip_space();
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return Formula::implication(f, parse_implication());
    }
    return f;
  }

  Formula parse_disjunction() {
    Formula f = parse_conjunction();
    while (accept("|")) f = Formula::disjunction(f, parse_conjunction());
    return f;
  }

  Formula parse_conjunction() {
    Formula f = parse_unary();
    while (accept("&")) f = Formula::conjunction(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept("!")) return Formula::negation(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of formula");
    if (accept("(")) {
      Formula f = parse_biconditional();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    if (!is_identifier_start(text_[pos_])) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_identifier_char(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "T") return Formula::top();
    if (name == "F") return Formula::bottom();
    const auto index = lang_.find_atom(name);
    if (!index) {
      throw InputError("undeclared atom '" + std::string(name) + "' at position " + std::to_string(start));
    }
    return Formula::atom(*index);
  }

  const Language& lang_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// Language

Language::Language(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.size() > kMaxAtoms) {
    throw InputError("at most " + std::to_string(kMaxAtoms) + " atoms are supported, got " +
                     std::to_string(atoms_.size()));
  }
  std::set<std::string> seen;
  for (const auto& name : atoms_) {
    if (name.empty() || !is_identifier_start(name[0]) ||
        !std::all_of(name.begin(), name.end(), is_identifier_char)) {
      throw InputError("malformed atom name '" + name + "'");
    }
    if (name == "T" || name == "F") throw InputError("atom name '" + name + "' is reserved");
    if (!seen.insert(name).second) throw InputError("duplicate atom '" + name + "'");
  }
  const std::size_t n = valuation_count();
  atom_sets_.reserve(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    ValuationSet s(n);
    for (std::size_t v = 0; v < n; ++v) {
      if ((v >> i) & 1U) s.set(v);
    }
    atom_sets_.push_back(std::move(s));
  }
}

std::optional<std::size_t> Language::find_atom(std::string_view name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == name) return i;
  }
  return std::nullopt;
}

Formula Language::parse(std::string_view text) const { return Parser(*this, text).parse(); }

std::string Language::print(const Formula& f) const {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return "T";
    case Formula::Kind::kFalse:
      return "F";
    case Formula::Kind::kAtom:
      return atoms_.at(f.atom_index());
    case Formula::Kind::kNot:
      return "!" + print(f.left());
    case Formula::Kind::kAnd:
      return "(" + print(f.left()) + " & " + print(f.right()) + ")";
    case Formula::Kind::kOr:
      return "(" + print(f.left()) + " | " + print(f.right()) + ")";
  }
  return {};
}

std::string Language::valuation_label(std::size_t v) const {
  if (atoms_.empty()) return "T";
  std::string label;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i > 0) label += '&';
    if (((v >> i) & 1U) == 0) label += '!';
    label += atoms_[i];
  }
  return label;
}

Formula Language::valuation_formula(std::size_t v) const {
  if (atoms_.empty()) return Formula::top();
  auto literal = [v](std::size_t i) {
    Formula a = Formula::atom(i);
    return ((v >> i) & 1U) ? a : Formula::negation(a);
  };
  Formula f = literal(0);
  for (std::size_t i = 1; i < atoms_.size(); ++i) f = Formula::conjunction(f, literal(i));
  return f;
}

Formula Language::characteristic_formula(const ValuationSet& valuations) const {
  if (valuations.none()) return Formula::bottom();
  if (valuations.all()) return Formula::top();
  std::optional<Formula> f;
  for (std::size_t v : valuations.indices()) {
    Formula term = valuation_formula(v);
    f = f ? Formula::disjunction(*f, term) : term;
  }
  return *f;
}

// ---------------------------------------------------------------------------
// Semantics

ValuationSet sat_set(const Language& lang, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return lang.full_set();
    case Formula::Kind::kFalse:
      return lang.empty_set();
    case Formula::Kind::kAtom:
      if (f.atom_index() >= lang.atom_count()) throw InputError("formula refers to an undeclared atom");
      return lang.atom_set(f.atom_index());
    case Formula::Kind::kNot:
      return ~sat_set(lang, f.left());
    case Formula::Kind::kAnd:
      return sat_set(lang, f.left()) & sat_set(lang, f.right());
    case Formula::Kind::kOr:
      return sat_set(lang, f.left()) | sat_set(lang, f.right());
  }
  return lang.empty_set();
}

bool implies(const Language& lang, const Formula& f, const Formula& g) {
  return sat_set(lang, f).is_subset_of(sat_set(lang, g));
}

bool equivalent(const Language& lang, const Formula& f, const Formula& g) {
  return sat_set(lang, f) == sat_set(lang, g);
}

bool theory_consistent(const Language& lang, const std::vector<Formula>& generators) {
  ValuationSet v = lang.full_set();
  for (const auto& g : generators) v &= sat_set(lang, g);
  return !v.none();
}

// ---------------------------------------------------------------------------
// Theory

Theory::Theory(Language lang, std::vector<Formula> generators, std::vector<std::string> labels)
    : lang_(std::move(lang)), generators_(std::move(generators)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != generators_.size()) {
    throw InputError("theory labels do not match generators");
  }
  if (labels_.empty()) {
    for (const auto& g : generators_) labels_.push_back(lang_.print(g));
  }
  valuations_ = lang_.full_set();
  for (const auto& g : generators_) valuations_ &= sat_set(lang_, g);
  if (valuations_.none()) throw InputError("inconsistent theory: the generators derive F");
}

Theory Theory::from_valuations(Language lang, const ValuationSet& valuations,
                               const std::vector<Formula>& candidates,
                               const std::vector<std::string>& candidate_labels) {
  std::vector<Formula> gens;
  std::vector<std::string> labels;
  ValuationSet covered = lang.full_set();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const ValuationSet s = sat_set(lang, candidates[i]);
    if (valuations.is_subset_of(s) && !s.all()) {
      gens.push_back(candidates[i]);
      labels.push_back(i < candidate_labels.size() ? candidate_labels[i] : lang.print(candidates[i]));
      covered &= s;
    }
  }
  if (covered != valuations) {
    Formula f = lang.characteristic_formula(valuations);
    labels.push_back(lang.print(f));
    gens.push_back(std::move(f));
  }
  return Theory(std::move(lang), std::move(gens), std::move(labels));
}

Theory Theory::tautologies(Language lang) { return Theory(std::move(lang), {}); }

bool Theory::contains(const Formula& f) const { return valuations_.is_subset_of(sat_set(lang_, f)); }

bool Theory::implies(const Formula& f, const Formula& g) const {
  return (sat_set(lang_, f) & valuations_).is_subset_of(sat_set(lang_, g));
}

}  // namespace contingent
