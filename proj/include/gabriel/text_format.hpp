#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gabriel/lattice.hpp"

namespace gabriel {

// Lattice text format, line oriented:
//
//   # comment
//   lattice <name>
//   elements: <tok> <tok> ...
//   covers: a<b, c<d, ...        (one or more lines; the list may be empty)
//
// Tokens match [A-Za-z0-9_]+.

struct LatticeDocument {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;

  bool operator==(const LatticeDocument&) const = default;
};

namespace detail {

inline bool token_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  std::size_t column() const { return pos_ + 1; }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::syntax_error,
                "line " + std::to_string(line_) + ", column " + std::to_string(column()) + ": " + what,
                {}, line_, column());
  }

  std::string token(const char* what) {
    skip_space();
    auto start = pos_;
    while (pos_ < text_.size() && token_char(text_[pos_])) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  /// Consumes `word` followed by ':' if the line starts with it.
  bool keyword(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    auto after = pos_ + word.size();
    if (after < text_.size() && token_char(text_[after])) return false;
    pos_ = after;
    return true;
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline LatticeDocument parse_lattice_text(std::string_view text) {
  LatticeDocument doc;
  enum class Expect { header, elements, covers, more_covers } state = Expect::header;
  std::unordered_map<std::string, std::size_t> declared;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    detail::LineCursor cur(line, line_no);
    if (cur.at_end()) continue;

    switch (state) {
      case Expect::header:
        if (!cur.keyword("lattice")) cur.fail("expected 'lattice <name>'");
        doc.name = cur.token("lattice name");
        if (!cur.at_end()) cur.fail("unexpected text after lattice name");
        state = Expect::elements;
        break;
      case Expect::elements:
        if (!cur.keyword("elements")) cur.fail("expected 'elements:'");
        cur.expect(':');
        while (!cur.at_end()) {
          auto col = cur.column();
          auto tok = cur.token("element name");
          if (declared.contains(tok)) {
            throw Error(ErrorKind::duplicate_element,
                        "line " + std::to_string(line_no) + ": element '" + tok + "' declared twice",
                        {}, line_no, col);
          }
          declared.emplace(tok, doc.elements.size());
          doc.elements.push_back(std::move(tok));
        }
        state = Expect::covers;
        break;
      case Expect::covers:
      case Expect::more_covers: {
        if (!cur.keyword("covers")) cur.fail("expected 'covers:'");
        cur.expect(':');
        bool first = true;
        while (!cur.at_end()) {
          if (!first) cur.expect(',');
          first = false;
          std::pair<std::string, std::string> edge;
          for (auto* side : {&edge.first, &edge.second}) {
            cur.skip_space();
            auto col = cur.column();
            *side = cur.token("element name");
            if (!declared.contains(*side)) {
              throw Error(ErrorKind::unknown_element,
                          "line " + std::to_string(line_no) + ": undeclared element '" + *side + "'",
                          {}, line_no, col);
            }
            if (side == &edge.first) cur.expect('<');
          }
          doc.covers.push_back(std::move(edge));
        }
        state = Expect::more_covers;
        break;
      }
    }
  }
  if (state != Expect::more_covers) {
    const char* missing = state == Expect::header ? "'lattice <name>'"
                          : state == Expect::elements ? "'elements:'"
                                                      : "'covers:'";
    throw Error(ErrorKind::syntax_error, std::string("unexpected end of input, expected ") + missing,
                {}, line_no, 1);
  }
  return doc;
}

inline std::string write_lattice_text(const LatticeDocument& doc) {
  std::string out = "lattice " + doc.name + "\nelements:";
  for (const auto& e : doc.elements) out += " " + e;
  out += "\ncovers:";
  for (std::size_t i = 0; i < doc.covers.size(); ++i) {
    out += (i == 0 ? " " : ", ") + doc.covers[i].first + "<" + doc.covers[i].second;
  }
  out += "\n";
  return out;
}

/// Builds the lattice a document describes; build errors carry the name.
inline Lattice to_lattice(const LatticeDocument& doc) {
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < doc.elements.size(); ++i) index.emplace(doc.elements[i], i);
  std::vector<Cover> covers;
  covers.reserve(doc.covers.size());
  for (const auto& [lo, hi] : doc.covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end() || b == index.end()) {
      throw Error(ErrorKind::unknown_element, "lattice " + doc.name + ": cover references an undeclared element");
    }
    covers.emplace_back(a->second, b->second);
  }
  try {
    return build_lattice(doc.elements.size(), covers, doc.elements);
  } catch (const Error& e) {
    throw Error(e.kind(), "lattice " + doc.name + ": " + e.detail(), e.witness());
  }
}

inline LatticeDocument to_document(const Lattice& lattice, std::string name) {
  LatticeDocument doc{std::move(name), lattice.names(), {}};
  for (const auto& [lo, hi] : lattice.covers()) doc.covers.emplace_back(lattice.name(lo), lattice.name(hi));
  return doc;
}

}  // namespace gabriel
